import json
import os

import pytest

from gotzmann_system import GotzmannSystem, main


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestClassify:

    def test_not_gotzmann(self, capsys):
        status, out, _ = run(capsys, "classify", "-n", "4", "x2*x3")
        assert status == 1
        assert out.splitlines()[0] == "NOT Gotzmann; gaps maxgen x4, cogaps maxgen x3; threshold t≥1"
        assert "distance: 1" in out

    def test_trivial(self, capsys):
        status, out, _ = run(capsys, "classify", "-n", "4", "x1^5")
        assert status == 0
        assert out.splitlines()[0] == "Gotzmann (trivially; no gaps)"

    def test_meets_threshold(self, capsys):
        status, out, _ = run(capsys, "classify", "-n", "4", "x2^2*x4^2")
        assert status == 0
        assert out.splitlines()[0] == "Gotzmann; t=2 meets threshold 2"

    def test_oracle_method(self, capsys):
        status, out, _ = run(capsys, "classify", "-n", "4", "--method", "oracle", "x2^2*x4")
        assert status == 1
        assert "method: oracle" in out

    def test_five_variables(self, capsys):
        status, out, _ = run(capsys, "classify", "-n", "5", "x2*x5")
        assert status == 0
        assert "threshold" not in out

    def test_json(self, capsys):
        status, out, _ = run(capsys, "classify", "-n", "4", "--format", "json", "0,1,1,0")
        record = json.loads(out)
        assert status == 1
        assert record["gotzmann"] is False
        assert record["gaps_maxgen"] == "x4"
        assert record["threshold"] == 1

    def test_parse_error(self, capsys):
        status, _, err = run(capsys, "classify", "-n", "4", "x2**x3")
        assert status == 2
        assert err.startswith("error:")

    @pytest.mark.parametrize("text", ["²,0", "x²"])
    def test_non_ascii_digits(self, capsys, text):
        status, out, err = run(capsys, "classify", "-n", "2", text)
        assert status == 2
        assert out == ""
        assert err.startswith("error:")

    def test_large_threshold(self, capsys):
        status, out, _ = run(capsys, "classify", "-n", "4", "x2^30*x4^99325")
        assert status == 0
        assert out.splitlines()[0] == "Gotzmann; t=99325 meets threshold 99325"

    def test_large_threshold_missing_witness(self, capsys):
        status, out, _ = run(capsys, "classify", "-n", "4", "--format", "json", "x2^30*x4^99324")
        record = json.loads(out)
        assert status == 1
        assert record["cogaps_maxgen"] is None
        assert record["threshold"] == 99325

    def test_index_error(self, capsys):
        status, _, err = run(capsys, "classify", "-n", "4", "x5")
        assert status == 2

    def test_cap_advice(self, capsys):
        status, _, err = run(capsys, "classify", "-n", "4", "--method", "oracle", "--cap", "10",
                             "x2^3*x3^3*x4^3")
        assert status == 2
        assert "closed_form" in err

    def test_closed_form_five_variables(self, capsys):
        status, _, err = run(capsys, "classify", "-n", "5", "--method", "closed_form", "x2")
        assert status == 2
        assert "no closed form" in err

    def test_bad_arguments(self, capsys):
        assert main(["classify"]) == 2
        assert main(["frobnicate"]) == 2


class TestReport:

    def test_x2x3(self, capsys):
        status, out, _ = run(capsys, "report", "-n", "4", "x2*x3")
        lines = out.splitlines()
        assert status == 0
        assert lines[:4] == ["g=1", "ũ=x2^2", "gaps={x1*x4}", "cogaps={x2*x3}"]
        assert any(line.startswith("MISMATCH") for line in lines)

    def test_no_gaps(self, capsys):
        _, out, _ = run(capsys, "report", "-n", "4", "x1^2")
        lines = out.splitlines()
        assert lines[0] == "g=0"
        assert "gaps={}" in lines
        assert not any(line.startswith("MISMATCH") for line in lines)

    def test_x2_squared(self, capsys):
        _, out, _ = run(capsys, "report", "-n", "4", "x2^2")
        lines = out.splitlines()
        assert "g=2" in lines and "ũ=x1*x3" in lines
        assert "maxgen(gaps)=x3*x4" in lines
        assert "maxgen(cogaps)=x2*x4" in lines

    def test_json(self, capsys):
        _, out, _ = run(capsys, "report", "-n", "4", "--format", "json", "x2^2")
        record = json.loads(out)
        assert record["cogaps"] == ["x1*x4", "x2^2"]
        assert record["mismatch"] is True


class TestVerify:

    def test_threshold(self, capsys, tmp_path):
        status, out, err = run(capsys, "verify", "--mode", "verify-threshold", "-n", "3",
                               "--b", "0..3", "--output-dir", str(tmp_path))
        assert status == 0
        assert "mismatches: 0" in out
        assert "elapsed:" in err
        runs = os.listdir(tmp_path)
        assert len(runs) == 1
        assert sorted(os.listdir(tmp_path / runs[0])) == ["results.csv", "verification.log"]

    def test_json(self, capsys, tmp_path):
        status, out, _ = run(capsys, "verify", "--mode", "verify-formulas", "-n", "3",
                             "--deg", "0..2", "--format", "json", "--output-dir", str(tmp_path))
        record = json.loads(out)
        assert status == 0
        assert record["mode"] == "verify-formulas"
        assert record["mismatches"] == []

    def test_skips_are_not_failures(self, capsys, tmp_path):
        status, out, _ = run(capsys, "verify", "--mode", "verify-threshold", "-n", "4",
                             "--b", "3", "--c", "3", "--t", "30", "--a", "0", "--cap", "50",
                             "--output-dir", str(tmp_path))
        assert status == 0
        assert "skips: 1" in out

    def test_config_error(self, capsys, tmp_path):
        status, _, err = run(capsys, "verify", "--mode", "verify-threshold", "-n", "6",
                             "--output-dir", str(tmp_path))
        assert status == 2
        assert "verify-threshold" in err


class TestTable:

    def test_n4_csv(self, capsys):
        status, out, _ = run(capsys, "table", "-n", "4", "--b", "0..2", "--c", "0..1", "--format", "csv")
        lines = out.splitlines()
        assert status == 0
        assert lines[0] == "b,c,threshold"
        assert "2,0,2" in lines and "1,1,1" in lines

    def test_n3(self, capsys):
        _, out, _ = run(capsys, "table", "-n", "3", "--b", "0..4", "--format", "csv")
        assert out.splitlines()[0] == "b,threshold"
        assert out.splitlines()[-1] == "4,6"

    def test_n3_json_keeps_row_schema(self, capsys):
        _, out, _ = run(capsys, "table", "-n", "3", "--b", "0..3", "--format", "json")
        records = json.loads(out)
        assert records[-1] == {"b": 3, "c": 0, "threshold": 3}
        assert all(set(record) == {"b", "c", "threshold"} for record in records)

    def test_n2(self, capsys):
        _, out, _ = run(capsys, "table", "-n", "2", "--format", "csv")
        assert out.splitlines() == ["threshold", "0"]

    def test_oracle_matches_closed_form(self, capsys):
        _, closed, _ = run(capsys, "table", "-n", "4", "--b", "0..2", "--c", "0..1", "--format", "csv")
        _, oracle, _ = run(capsys, "table", "-n", "4", "--b", "0..2", "--c", "0..1", "--format", "csv",
                           "--method", "oracle", "--padding-cap", "16")
        assert closed == oracle

    def test_padding_cap_error(self, capsys):
        status, _, err = run(capsys, "table", "-n", "4", "--b", "2", "--c", "0", "--method", "oracle",
                             "--padding-cap", "1")
        assert status == 2
        assert "within cap 1" in err

    def test_artifacts(self, capsys, tmp_path):
        excel, plot, fh = tmp_path / "t.xlsx", tmp_path / "t.png", tmp_path / "fh.png"
        status, _, _ = run(capsys, "table", "-n", "4", "--b", "0..2", "--c", "0..1",
                           "--excel", str(excel), "--plot", str(plot), "--fh-plot", str(fh))
        assert status == 0
        assert excel.exists() and plot.exists() and fh.exists()


def test_system_defaults():
    system = GotzmannSystem(nvars=4)
    text, status = system.classify("x2^2*x4")
    assert status == 1
    assert text.startswith("NOT Gotzmann")
