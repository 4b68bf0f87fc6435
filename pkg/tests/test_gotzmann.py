import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bounded_monomials, degree_subsets, mono
from borel_sets import borel_closure, borel_closure_of_set, lexify, m_vector, maxgen, shade
from errors import (
    ConfigError, EmptySet, NotFoundWithinCap, RangeError, UnsupportedDimension
)
from exact_arith import binom
from gaps_mu import gaps_enumerated
from gotzmann import (
    CLOSED_FORM, ORACLE, closed_form_threshold, f_of_t, h_of_t,
    is_gotzmann_by_set_oracle, is_gotzmann_closed_form, is_gotzmann_monomial_oracle,
    is_gotzmann_set_oracle, minimal_padding, pad, search_padding, threshold_n3, threshold_n4
)
from lex_engine import MonomialSet, lexsegment
from monomial_core import Monomial, mul


class TestSetOracle:

    def test_examples(self, x2x3):
        assert not is_gotzmann_set_oracle(borel_closure(x2x3))
        assert is_gotzmann_set_oracle(lexsegment(mono(0, 1, 1, 0)))
        assert is_gotzmann_set_oracle(borel_closure(mono(0, 1, 1)))

    def test_empty(self):
        with pytest.raises(EmptySet):
            is_gotzmann_set_oracle(MonomialSet.empty(3, 2))


class TestMonomialOracle:

    def test_examples(self, x2x3, x2_squared):
        verdict = is_gotzmann_monomial_oracle(x2x3)
        assert not verdict.is_gotzmann
        assert verdict.witness_gaps == mono(0, 0, 0, 1)
        assert verdict.witness_cogaps == mono(0, 0, 1, 0)
        assert verdict.method == ORACLE

        assert is_gotzmann_monomial_oracle(mono(4, 0, 0, 0)).is_gotzmann
        assert is_gotzmann_monomial_oracle(Monomial.unit(4)).is_gotzmann

        verdict = is_gotzmann_monomial_oracle(x2_squared)
        assert not verdict.is_gotzmann
        assert (verdict.witness_gaps, verdict.witness_cogaps) == (mono(0, 0, 1, 1), mono(0, 1, 0, 1))

    def test_in_three_variables(self):
        assert is_gotzmann_monomial_oracle(mono(0, 1, 1)).is_gotzmann

    @given(st.integers(min_value=1, max_value=3), st.integers(min_value=0, max_value=2),
           st.integers(min_value=0, max_value=2), st.integers(min_value=0, max_value=4))
    @settings(deadline=None, max_examples=30)
    def test_agrees_with_shade_criterion(self, a, b, c, t):
        u = mono(a, b, c, t)
        assert is_gotzmann_monomial_oracle(u).is_gotzmann == is_gotzmann_by_set_oracle(u)


class TestThresholds:

    def test_n3(self):
        assert [threshold_n3(b) for b in range(5)] == [0, 0, 1, 3, 6]
        with pytest.raises(RangeError):
            threshold_n3(-1)

    def test_n4(self):
        assert threshold_n4(0, 0).threshold == 0
        assert threshold_n4(1, 1).threshold == 1
        assert threshold_n4(2, 0).threshold == 2
        assert threshold_n4(3, 3).threshold == 35
        assert threshold_n4(4, 0).threshold == 31
        assert threshold_n4(0, 4).threshold == 16
        assert threshold_n4(4, 2).threshold == 45

    def test_report_fields(self):
        report = threshold_n4(3, 0)
        assert report.constant_gap == 7
        assert report.f0 == f_of_t(3, 0, 0)

    def test_f_and_h(self):
        assert f_of_t(2, 0, 0) == 1
        assert all(f_of_t(0, 0, t) == 0 for t in range(6))
        assert h_of_t(3, 0, 2) == 3
        assert all(f_of_t(3, 0, t) - h_of_t(3, 0, t) == 7 for t in range(6))

    @given(st.integers(min_value=0, max_value=30), st.integers(min_value=0, max_value=30),
           st.integers(min_value=0, max_value=30))
    def test_constant_gap(self, b, c, t):
        assert f_of_t(b, c, t) - h_of_t(b, c, t) == threshold_n4(b, c).constant_gap

    def test_closed_form_threshold_by_dimension(self):
        assert closed_form_threshold(mono(3, 5)) == 0
        assert closed_form_threshold(mono(7)) == 0
        assert closed_form_threshold(mono(1, 4, 0)) == 6
        assert closed_form_threshold(mono(0, 2, 0, 0)) == 2
        assert closed_form_threshold(mono(0, 1, 0, 0, 0)) is None


class TestClosedForm:

    def test_examples(self):
        assert is_gotzmann_closed_form(mono(3, 5)).is_gotzmann
        assert is_gotzmann_closed_form(mono(3, 1, 1, 1)).is_gotzmann
        verdict = is_gotzmann_closed_form(mono(0, 2, 0, 1))
        assert not verdict.is_gotzmann
        assert verdict.method == CLOSED_FORM
        assert verdict.threshold == 2
        assert verdict.distance == 1

    def test_witnesses(self, x2x3):
        verdict = is_gotzmann_closed_form(x2x3)
        assert verdict.witness_gaps == mono(0, 0, 0, 1)
        assert verdict.witness_cogaps == mono(0, 0, 1, 0)
        assert verdict.gap_count == 1

    def test_witness_skipped_past_cap(self):
        verdict = is_gotzmann_closed_form(mono(0, 4, 4, 0), cap=10)
        assert verdict.witness_cogaps is None
        assert verdict.witness_gaps is not None

    def test_unsupported_dimension(self):
        with pytest.raises(UnsupportedDimension):
            is_gotzmann_closed_form(mono(0, 1, 0, 0, 1))

    def test_x1_is_irrelevant(self):
        for a in range(4):
            assert is_gotzmann_closed_form(mono(a, 2, 0, 2)).is_gotzmann
            assert not is_gotzmann_closed_form(mono(a, 2, 0, 1)).is_gotzmann

    def test_agrees_with_oracle_n3(self):
        for b in range(5):
            for t in range(threshold_n3(b) + 3):
                u = mono(0, b, t)
                assert is_gotzmann_closed_form(u).is_gotzmann == is_gotzmann_monomial_oracle(u).is_gotzmann

    def test_agrees_with_oracle_n4(self):
        for b in range(3):
            for c in range(3):
                threshold = threshold_n4(b, c).threshold
                for t in range(threshold + 3):
                    u = mono(0, b, c, t)
                    assert is_gotzmann_monomial_oracle(u).is_gotzmann == (t >= threshold)

    @pytest.mark.slow
    @pytest.mark.parametrize("b,c,threshold", [(4, 0, 31), (0, 4, 16), (4, 2, 45)])
    def test_boundary_with_oracle(self, b, c, threshold):
        assert not is_gotzmann_monomial_oracle(mono(0, b, c, threshold - 1)).is_gotzmann
        assert is_gotzmann_monomial_oracle(mono(0, b, c, threshold)).is_gotzmann


class TestPadding:

    def test_pad(self):
        assert pad(mono(0, 2, 0, 1), 3) == mono(0, 2, 0, 4)

    def test_closed_form(self, x2x3, x2_squared):
        assert minimal_padding(x2x3) == 1
        assert minimal_padding(mono(5, 0, 0, 0)) == 0
        assert minimal_padding(x2_squared) == 2
        assert minimal_padding(mono(0, 2, 0, 5)) == 0

    def test_closed_form_cap(self):
        with pytest.raises(NotFoundWithinCap):
            minimal_padding(mono(0, 4, 4, 0), cap=64)

    def test_oracle_matches_closed_form(self, x2x3, x2_squared):
        for u in (x2x3, x2_squared, mono(0, 3, 0, 0), mono(0, 0, 2, 0)):
            assert minimal_padding(u, cap=16, method=ORACLE) == minimal_padding(u)

    def test_unknown_method(self, x2x3):
        with pytest.raises(ConfigError):
            minimal_padding(x2x3, method="guess")

    def test_five_variables(self):
        u = mono(0, 1, 0, 0, 0)
        assert minimal_padding(u, cap=8) == 0
        with pytest.raises(UnsupportedDimension):
            minimal_padding(u, method=CLOSED_FORM)

    def test_search_padding(self):
        u = mono(0, 0, 0)
        assert search_padding(u, 20, lambda w: w.exps[-1] >= 7) == 7
        with pytest.raises(NotFoundWithinCap):
            search_padding(u, 5, lambda w: w.exps[-1] >= 7)
        with pytest.raises(RangeError):
            search_padding(u, -1, lambda w: True)


class TestStructuralProperties:

    @given(bounded_monomials(max_degree=7))
    @settings(deadline=None, max_examples=500)
    def test_x1_is_irrelevant_to_oracle(self, u):
        x1 = Monomial.variable(u.nvars, 1)
        assert (is_gotzmann_monomial_oracle(u).is_gotzmann
                == is_gotzmann_monomial_oracle(mul(x1, u)).is_gotzmann)

    @given(bounded_monomials(max_degree=7))
    @settings(deadline=None, max_examples=500)
    def test_persistence(self, u):
        if is_gotzmann_monomial_oracle(u).is_gotzmann:
            assert is_gotzmann_monomial_oracle(pad(u, 1)).is_gotzmann

    @given(degree_subsets())
    @settings(deadline=None, max_examples=500)
    def test_criteria_agree_on_borel_sets(self, generators):
        members = borel_closure_of_set(generators)
        lex, _ = lexify(members)
        by_shade = len(shade(members)) == len(shade(lex))
        assert by_shade == (m_vector(members) == m_vector(lex))
        assert is_gotzmann_set_oracle(members) == by_shade

    def test_gaps_maxgen_in_four_variables(self):
        for b in range(5):
            for c in range(5):
                for t in range(5):
                    u = mono(0, b, c, t)
                    expected = mono(0, 0, binom(b, 2), f_of_t(b, c, t))
                    assert maxgen(gaps_enumerated(u)) == expected


class TestLargePadding:

    def test_classifies_at_large_threshold(self):
        threshold = threshold_n4(30, 0).threshold
        assert threshold == 99325
        verdict = is_gotzmann_closed_form(mono(0, 30, 0, threshold))
        assert verdict.is_gotzmann
        assert verdict.witness_gaps == mono(0, 0, binom(30, 2), f_of_t(30, 0, threshold))
        assert verdict.witness_cogaps == verdict.witness_gaps

    def test_cogaps_witness_skipped_past_walk_budget(self):
        verdict = is_gotzmann_closed_form(mono(0, 30, 0, 99324))
        assert not verdict.is_gotzmann
        assert verdict.distance == 1
        assert verdict.gap_count > 100_000
        assert verdict.witness_gaps is not None
        assert verdict.witness_cogaps is None

    def test_walk_budget(self, x2_squared):
        assert is_gotzmann_closed_form(x2_squared, walk_budget=1).witness_cogaps is None
        assert is_gotzmann_closed_form(x2_squared, walk_budget=2).witness_cogaps == mono(0, 1, 0, 1)

    def test_witnesses_skipped_past_degree_budget(self):
        verdict = is_gotzmann_closed_form(mono(0, 300, 0, 0))
        assert not verdict.is_gotzmann
        assert verdict.threshold == threshold_n4(300, 0).threshold
        assert (verdict.witness_gaps, verdict.witness_cogaps, verdict.gap_count) == (None, None, None)
