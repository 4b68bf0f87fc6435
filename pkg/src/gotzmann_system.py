"""
Main application for Gotzmann monomial classification.
Orchestrates classification, gap reports, verification sweeps and threshold tables.
"""

import argparse
import logging
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from config import (
    CLASSIFIER_METHODS, DEFAULT_CLASSIFIER_METHOD, DEFAULT_ENUMERATION_CAP,
    DEFAULT_ORACLE_TABLE_RANGE, DEFAULT_OUTPUT_DIR, DEFAULT_OUTPUT_FORMAT,
    DEFAULT_PADDING_CAP, DEFAULT_TABLE_B_RANGE, DEFAULT_TABLE_C_RANGE, DEFAULT_WORKERS,
    LOG_FORMAT, OUTPUT_FORMATS, TABLE_MODE, VERIFY_MODES
)
from classifier_factory import ClassifierFactory
from errors import EnumerationCapExceeded, GotzmannError
from file_handler import FileHandler
from gaps_mu import gap_report, maxgen_gaps_formula
from gotzmann import ORACLE, Verdict, closed_form_threshold
from logger import SweepLogger
from monomial_core import Monomial, parse_monomial
from sweep_runner import (
    RESULT_COLUMNS, SweepConfig, SweepResult, parse_pair, parse_range, result_rows, run_sweep
)
from visualizer import ThresholdVisualizer

EXIT_GOTZMANN = 0
EXIT_NOT_GOTZMANN = 1
EXIT_ERROR = 2

CAP_ADVICE = "hint: use --method closed_form (n <= 4) or raise --cap"
TABLE_COLUMNS = ["b", "c", "threshold"]


def _text(u: Optional[Monomial]) -> Optional[str]:
    return None if u is None else str(u)


def _or_missing(u: Optional[Monomial]) -> str:
    return "n/a" if u is None else str(u)


class GotzmannSystem:
    """Main system wiring the classifier, the sweep runner and the output layer."""

    def __init__(self,
                 nvars: int,
                 enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
                 workers: int = DEFAULT_WORKERS,
                 output_format: str = DEFAULT_OUTPUT_FORMAT,
                 method: str = DEFAULT_CLASSIFIER_METHOD,
                 padding_cap: int = DEFAULT_PADDING_CAP,
                 output_dir: str = DEFAULT_OUTPUT_DIR):
        """
        Initialize the system.

        Args:
            nvars: Number of variables n
            enumeration_cap: Largest set any operation may materialize
            workers: Process pool size for sweeps
            output_format: "plain", "json" or "csv"
            method: Classification method ("auto", "oracle", "closed_form")
            padding_cap: Largest power of xn tried by padding searches
            output_dir: Base directory for sweep log sessions
        """
        self.nvars = nvars
        self.enumeration_cap = enumeration_cap
        self.workers = workers
        self.output_format = output_format
        self.method = method
        self.padding_cap = padding_cap
        self.output_dir = output_dir

        self.file_handler = FileHandler()
        self.classifier = ClassifierFactory.create_classifier(
            method, enumeration_cap=enumeration_cap, padding_cap=padding_cap)

    def parse(self, text: str) -> Monomial:
        return parse_monomial(text, self.nvars)

    # classify

    def classify(self, text: str) -> Tuple[str, int]:
        """Classify one monomial; returns rendered output and exit status."""
        verdict = self.classifier.classify(self.parse(text))
        status = EXIT_GOTZMANN if verdict.is_gotzmann else EXIT_NOT_GOTZMANN
        return self.render_verdict(verdict), status

    def render_verdict(self, verdict: Verdict) -> str:
        if self.output_format == "plain":
            return self._verdict_plain(verdict)
        record = {
            "monomial": str(verdict.monomial),
            "gotzmann": verdict.is_gotzmann,
            "method": verdict.method,
            "gaps_maxgen": _text(verdict.witness_gaps),
            "cogaps_maxgen": _text(verdict.witness_cogaps),
            "threshold": verdict.threshold,
        }
        return self.file_handler.render_record(record, self.output_format)

    @staticmethod
    def _verdict_plain(verdict: Verdict) -> str:
        gaps, cogaps = _or_missing(verdict.witness_gaps), _or_missing(verdict.witness_cogaps)
        witnesses = f"gaps maxgen {gaps}, cogaps maxgen {cogaps}"
        if verdict.is_gotzmann:
            if verdict.gap_count == 0:
                head = "Gotzmann (trivially; no gaps)"
            elif verdict.threshold is not None:
                head = f"Gotzmann; t={verdict.last_exponent} meets threshold {verdict.threshold}"
            else:
                head = f"Gotzmann; {witnesses}"
        else:
            head = f"NOT Gotzmann; {witnesses}"
            if verdict.threshold is not None:
                head += f"; threshold t≥{verdict.threshold}"
        lines = [head, f"method: {verdict.method}", f"witnesses: {witnesses}"]
        if verdict.threshold is not None:
            lines.append(f"threshold: {verdict.threshold}")
            lines.append(f"distance: {verdict.distance}")
        return "\n".join(lines) + "\n"

    # report

    def report(self, text: str) -> str:
        u = self.parse(text)
        report = gap_report(u, self.enumeration_cap)
        record = {
            "monomial": str(u),
            "g": report.gap_count,
            "u_tilde": str(report.u_tilde),
            "gaps": [str(w) for w in report.gaps],
            "cogaps": [str(w) for w in report.cogaps],
            "gaps_maxgen": str(report.maxgen_gaps),
            "cogaps_maxgen": str(report.maxgen_cogaps),
            "closed_form_gaps_maxgen": str(maxgen_gaps_formula(u)),
            "mismatch": not report.maxgens_agree,
        }
        if self.output_format != "plain":
            return self.file_handler.render_record(record, self.output_format)
        lines = [
            f"g={record['g']}",
            f"ũ={record['u_tilde']}",
            f"gaps={report.gaps.formatted()}",
            f"cogaps={report.cogaps.formatted()}",
            f"maxgen(gaps)={record['gaps_maxgen']}",
            f"maxgen(cogaps)={record['cogaps_maxgen']}",
            f"closed-form maxgen(gaps)={record['closed_form_gaps_maxgen']}",
        ]
        if record["mismatch"]:
            lines.append("MISMATCH: maxgen(gaps) != maxgen(cogaps); not Gotzmann")
        return "\n".join(lines) + "\n"

    # verify

    def verify(self, config: SweepConfig, show_progress: bool = True) -> Tuple[str, SweepResult]:
        """Run a sweep inside its own logging session; returns rendered output and the result."""
        sweep_logger = SweepLogger(output_base_dir=self.output_dir)
        try:
            sweep_logger.log_sweep_config(config)
            result = run_sweep(config, sweep_logger, show_progress)
            rows = result_rows(result)
            self.file_handler.write_text(
                self.file_handler.render_rows(rows, RESULT_COLUMNS, "csv"),
                sweep_logger.get_output_paths()['results_csv_path'])
        finally:
            sweep_logger.close()
        return self.render_sweep(result, rows, config.output_format), result

    def render_sweep(self, result: SweepResult, rows: List[Dict[str, str]], fmt: str) -> str:
        if fmt == "csv":
            return self.file_handler.render_rows(rows, RESULT_COLUMNS, "csv")
        if fmt == "json":
            record = {
                "mode": result.mode,
                "cells_checked": result.cells_checked,
                "checks": result.checks,
                "mismatches": [r for r in rows if r["kind"] == "mismatch"],
                "skips": [r for r in rows if r["kind"] == "skip"],
            }
            return self.file_handler.render_record(record, "json")
        summary = (f"mode: {result.mode}\n"
                   f"cells checked: {result.cells_checked}\n"
                   f"checks: {result.checks}\n"
                   f"mismatches: {len(result.mismatches)}\n"
                   f"skips: {len(result.skips)}\n")
        if rows:
            summary += self.file_handler.render_rows(rows, RESULT_COLUMNS, "plain")
        return summary

    # table

    def table_rows(self, config: SweepConfig) -> Tuple[List[Dict[str, int]], List[str]]:
        """Threshold rows by number of variables; oracle padding search when asked or n >= 5."""
        n = self.nvars
        use_oracle = self.method == ORACLE or n >= 5
        if n <= 2:
            u = Monomial.unit(n)
            threshold = self.classifier.minimal_padding(u) if use_oracle else closed_form_threshold(u)
            return [{"threshold": threshold}], ["threshold"]
        rows = []
        c_values = range(config.c_range[0], config.c_range[1] + 1) if n >= 4 else [0]
        for b in range(config.b_range[0], config.b_range[1] + 1):
            for c in c_values:
                exps = [0] * n
                exps[1] = b
                if n >= 4:
                    exps[2] = c
                u = Monomial(tuple(exps))
                if use_oracle:
                    threshold = self.classifier.minimal_padding(u)
                else:
                    threshold = closed_form_threshold(u)
                rows.append({"b": b, "c": c, "threshold": threshold})
        # n = 3 tables print without the c column; rows keep it at 0
        columns = TABLE_COLUMNS if n >= 4 else ["b", "threshold"]
        return rows, columns

    def table(self, config: SweepConfig, excel_path: Optional[str] = None,
              plot_path: Optional[str] = None, fh_plot_path: Optional[str] = None) -> str:
        rows, columns = self.table_rows(config)
        if excel_path:
            self.file_handler.write_threshold_workbook(rows, columns, excel_path)
        if plot_path or fh_plot_path:
            visualizer = ThresholdVisualizer()
            if plot_path:
                visualizer.plot_threshold_heatmap(rows, plot_path, title=f"Gotzmann thresholds, n={self.nvars}")
            if fh_plot_path and self.nvars == 4:
                visualizer.plot_f_h_profile([(r["b"], r["c"]) for r in rows], save_path=fh_plot_path)
        if config.output_format == "json" and "b" in columns:
            columns = TABLE_COLUMNS
        return self.file_handler.render_rows(rows, columns, config.output_format)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-n', '--vars', type=int, default=4, help='Number of variables (default 4)')
    common.add_argument('--cap', type=int, default=DEFAULT_ENUMERATION_CAP,
                        help='Enumeration cap on materialized sets')
    common.add_argument('--workers', type=int, default=DEFAULT_WORKERS, help='Worker processes for sweeps')
    common.add_argument('--format', choices=OUTPUT_FORMATS, default=DEFAULT_OUTPUT_FORMAT,
                        help='Output format')
    common.add_argument('-v', '--verbose', action='store_true', help='Debug logging on stderr')

    parser = argparse.ArgumentParser(description='Gotzmann monomial classification toolkit')
    sub = parser.add_subparsers(dest='command', required=True)

    classify = sub.add_parser('classify', parents=[common], help='Classify one monomial')
    classify.add_argument('monomial', help='Monomial, e.g. "x2^2*x4" or "0,2,0,1"')
    classify.add_argument('--method', choices=CLASSIFIER_METHODS, default=DEFAULT_CLASSIFIER_METHOD)

    report = sub.add_parser('report', parents=[common], help='Gaps, cogaps and maxgens of one monomial')
    report.add_argument('monomial')

    verify = sub.add_parser('verify', parents=[common], help='Check closed forms against the oracles')
    verify.add_argument('--mode', choices=VERIFY_MODES, required=True)
    verify.add_argument('--a', help='Range of the x1 exponent, lo..hi')
    verify.add_argument('--b', help='Range of the x2 exponent, lo..hi')
    verify.add_argument('--c', help='Range of the x3 exponent, lo..hi')
    verify.add_argument('--t', help='Range of the last exponent (default: up to threshold + margin)')
    verify.add_argument('--deg', help='Degree range for verify-formulas, lo..hi')
    verify.add_argument('--boundary', action='append', default=[],
                        help='Pair b,c checked at threshold-1 and threshold (repeatable)')
    verify.add_argument('--output-dir', default=DEFAULT_OUTPUT_DIR, help='Base directory for run logs')

    table = sub.add_parser('table', parents=[common], help='Emit threshold tables')
    table.add_argument('--b', help='Range of b, lo..hi')
    table.add_argument('--c', help='Range of c, lo..hi')
    table.add_argument('--method', choices=CLASSIFIER_METHODS, default=DEFAULT_CLASSIFIER_METHOD)
    table.add_argument('--padding-cap', type=int, default=DEFAULT_PADDING_CAP,
                       help='Largest power of xn tried by the oracle search')
    table.add_argument('--excel', help='Also write a styled .xlsx workbook')
    table.add_argument('--plot', help='Also write a threshold heatmap image')
    table.add_argument('--fh-plot', help='Also write f(t)/h(t) curves (n = 4)')
    return parser


def _sweep_config(args: argparse.Namespace, mode: str) -> SweepConfig:
    fields = {}
    for name in ('a', 'b', 'c', 't', 'deg'):
        text = getattr(args, name, None)
        if text is not None:
            fields[f"{name}_range"] = parse_range(text)
    if mode == TABLE_MODE:
        defaults = (DEFAULT_ORACLE_TABLE_RANGE, DEFAULT_ORACLE_TABLE_RANGE) \
            if args.vars >= 5 or args.method == ORACLE else (DEFAULT_TABLE_B_RANGE, DEFAULT_TABLE_C_RANGE)
        fields.setdefault("b_range", defaults[0])
        fields.setdefault("c_range", defaults[1])
    return SweepConfig(
        nvars=args.vars,
        mode=mode,
        boundary=[parse_pair(p) for p in getattr(args, 'boundary', [])],
        cap=args.cap,
        workers=args.workers,
        output_format=args.format,
        **fields,
    )


def run_command(args: argparse.Namespace) -> int:
    system = GotzmannSystem(
        nvars=args.vars,
        enumeration_cap=args.cap,
        workers=args.workers,
        output_format=args.format,
        method=getattr(args, 'method', DEFAULT_CLASSIFIER_METHOD),
        padding_cap=getattr(args, 'padding_cap', DEFAULT_PADDING_CAP),
        output_dir=getattr(args, 'output_dir', DEFAULT_OUTPUT_DIR),
    )
    if args.command == 'classify':
        text, status = system.classify(args.monomial)
        sys.stdout.write(text)
        return status
    if args.command == 'report':
        sys.stdout.write(system.report(args.monomial))
        return 0
    if args.command == 'verify':
        config = _sweep_config(args, args.mode)
        text, result = system.verify(config)
        sys.stdout.write(text)
        print(f"elapsed: {result.elapsed:.2f}s", file=sys.stderr)
        return 0 if result.ok else 1
    config = _sweep_config(args, TABLE_MODE)
    sys.stdout.write(system.table(config, args.excel, args.plot, args.fh_plot))
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else 0

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format=LOG_FORMAT, stream=sys.stderr)
    try:
        return run_command(args)
    except EnumerationCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        print(CAP_ADVICE, file=sys.stderr)
        return EXIT_ERROR
    except (GotzmannError, OverflowError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
