"""
Gotzmann classification.
Brute-force oracles, the maxgen-equality criterion, closed-form thresholds for
n <= 4, the f(t)/h(t) auxiliaries, and the padding search.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Optional

from config import (
    DEFAULT_ENUMERATION_CAP, DEFAULT_PADDING_CAP, DEFAULT_WITNESS_DEGREE_BUDGET,
    DEFAULT_WITNESS_WALK_BUDGET
)
from borel_sets import MaxgenMonomial, borel_closure, is_borel_stable, lexify, m_vector, shade
from errors import (
    ConfigError, EmptySet, InternalInconsistency, NotFoundWithinCap,
    PreconditionViolation, RangeError, UnsupportedDimension
)
from exact_arith import binom, checked_add, checked_mul, exact_div
from gaps_mu import gap_count, gap_report, inner_degree, maxgen_gaps_formula, maxgen_pred_walk
from lex_engine import MonomialSet
from monomial_core import Monomial

ORACLE = "oracle"
CLOSED_FORM = "closed_form"
AUTO = "auto"


@dataclass(frozen=True)
class ThresholdReport:
    """Closed-form data for x1^a x2^b x3^c x4^t in four variables."""
    b: int
    c: int
    threshold: int
    f0: int
    constant_gap: int


@dataclass(frozen=True)
class Verdict:
    """
    Classification of one monomial.

    Witnesses are None when they were too expensive to compute. ``threshold``
    and ``distance`` are filled for n <= 4, where a closed form exists.
    """
    monomial: Monomial
    is_gotzmann: bool
    method: str
    witness_gaps: Optional[MaxgenMonomial]
    witness_cogaps: Optional[MaxgenMonomial]
    gap_count: Optional[int] = None
    threshold: Optional[int] = None

    @property
    def last_exponent(self) -> int:
        return self.monomial.exps[-1]

    @property
    def distance(self) -> Optional[int]:
        """Extra powers of xn still needed to reach the threshold."""
        if self.threshold is None:
            return None
        return max(0, self.threshold - self.last_exponent)


def is_gotzmann_set_oracle(members: MonomialSet, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """
    |shad(B)| = |shad(B^lex)| by enumeration.

    Borel-stable inputs are cross-checked against m-vector equality with B^lex.
    """
    if members.is_empty():
        raise EmptySet("the Gotzmann property needs a nonempty set")
    if members.degree < 1:
        raise PreconditionViolation("the Gotzmann property needs degree at least 1")
    lex, _ = lexify(members, cap)
    result = len(shade(members, cap)) == len(shade(lex, cap))
    if is_borel_stable(members):
        by_m_vector = m_vector(members) == m_vector(lex)
        if by_m_vector != result:
            raise InternalInconsistency(
                f"shade criterion says {result}, m-vector criterion says {by_m_vector}")
    return result


def closed_form_threshold(u: Monomial) -> Optional[int]:
    """Threshold on the exponent of xn for u's class, or None for n >= 5."""
    n = u.nvars
    if n <= 2:
        return 0
    if n == 3:
        return threshold_n3(u.exps[1])
    if n == 4:
        return threshold_n4(u.exps[1], u.exps[2]).threshold
    return None


def is_gotzmann_monomial_oracle(u: Monomial, cap: int = DEFAULT_ENUMERATION_CAP) -> Verdict:
    """maxgen(gaps(u)) = maxgen(cogaps(u)) with both sets enumerated; u = 1 is Gotzmann."""
    if u.is_unit():
        return Verdict(u, True, ORACLE, u, u, gap_count=0, threshold=closed_form_threshold(u))
    report = gap_report(u, cap)
    return Verdict(
        monomial=u,
        is_gotzmann=report.maxgens_agree,
        method=ORACLE,
        witness_gaps=report.maxgen_gaps,
        witness_cogaps=report.maxgen_cogaps,
        gap_count=report.gap_count,
        threshold=closed_form_threshold(u),
    )


def is_gotzmann_by_set_oracle(u: Monomial, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """The shade criterion applied to B(u)."""
    if u.is_unit():
        return True
    return is_gotzmann_set_oracle(borel_closure(u, cap), cap)


def _require_non_negative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise RangeError(f"{name} must be non-negative, got {value}")


def threshold_n3(b: int) -> int:
    """x1^a x2^b x3^t is Gotzmann in three variables iff t >= C(b,2)."""
    _require_non_negative(b=b)
    return binom(b, 2)


def threshold_n4(b: int, c: int) -> ThresholdReport:
    """
    Threshold for x1^a x2^b x3^c x4^t in four variables.

    threshold = C(C(b,2),2) + (b+4)C(b,2)/3 + (b+1)C(c+1,2) + C(c+1,3) - c
    """
    _require_non_negative(b=b, c=c)
    cb = binom(b, 2)
    shared = checked_add(checked_mul(b + 1, binom(c + 1, 2)), binom(c + 1, 3))
    threshold = checked_add(
        binom(cb, 2),
        exact_div(checked_mul(b + 4, cb), 3, "threshold"),
        shared,
    ) - c
    return ThresholdReport(
        b=b,
        c=c,
        threshold=threshold,
        f0=f_of_t(b, c, 0),
        constant_gap=checked_add(
            exact_div(checked_mul(b + 1, cb), 3, "constant gap"), shared, binom(cb, 2)),
    )


def f_of_t(b: int, c: int, t: int) -> int:
    """Exponent of x4 in maxgen(gaps(x2^b x3^c x4^t)): f(0) + t*C(b,2)."""
    _require_non_negative(b=b, c=c, t=t)
    cb = binom(b, 2)
    f0 = checked_add(
        exact_div(checked_mul(b + 1, cb), 3, "f(0)"),
        checked_mul(c, cb),
        checked_mul(b + 1, binom(c + 1, 2)),
        binom(c + 1, 3),
    ) - c
    return checked_add(f0, checked_mul(t, cb))


def h_of_t(b: int, c: int, t: int) -> int:
    """Exponent of x4 in mu(x2^b x3^c x4^t, x2^(b+C(b,2)) x4^(c+t-C(b,2))); may be negative."""
    _require_non_negative(b=b, c=c, t=t)
    cb = binom(b, 2)
    return checked_mul(c + t, cb) - binom(cb, 2) - c


def is_gotzmann_closed_form(u: Monomial, cap: int = DEFAULT_ENUMERATION_CAP,
                            walk_budget: int = DEFAULT_WITNESS_WALK_BUDGET,
                            degree_budget: int = DEFAULT_WITNESS_DEGREE_BUDGET) -> Verdict:
    """
    Closed-form classification for n <= 4.

    The x1 exponent is irrelevant and the verdict costs O(1). Witnesses are
    extras: the gaps witness comes from maxgen_gaps_formula when the inner
    degree is within degree_budget. On a Gotzmann verdict the cogaps witness
    equals it; otherwise it needs a g-step predecessor walk, run only when g
    fits under both cap and walk_budget. Skipped witnesses are None.
    """
    n = u.nvars
    if n >= 5:
        raise UnsupportedDimension(f"no closed form for {n} variables; use the oracle")
    threshold = closed_form_threshold(u)
    is_gotzmann = u.exps[-1] >= threshold
    g = witness_gaps = witness_cogaps = None
    if inner_degree(u) <= degree_budget:
        g = gap_count(u)
        witness_gaps = maxgen_gaps_formula(u)
        if is_gotzmann:
            witness_cogaps = witness_gaps
        elif g <= min(cap, walk_budget):
            witness_cogaps = maxgen_pred_walk(u, g)
    logging.debug(f"closed form for {u}: threshold {threshold}, g={g}")
    return Verdict(
        monomial=u,
        is_gotzmann=is_gotzmann,
        method=CLOSED_FORM,
        witness_gaps=witness_gaps,
        witness_cogaps=witness_cogaps,
        gap_count=g,
        threshold=threshold,
    )


def pad(u: Monomial, k: int) -> Monomial:
    """u * xn^k."""
    return Monomial(u.exps[:-1] + (u.exps[-1] + k,))


def search_padding(u: Monomial, cap: int, predicate: Callable[[Monomial], bool]) -> int:
    """
    Least k <= cap with predicate(u * xn^k), by binary search.

    The search relies on the Gotzmann region being upward closed in k; the
    answer is re-checked at k - 1 and k + 1 and a violation raises
    InternalInconsistency.
    """
    if cap < 0:
        raise RangeError(f"padding cap must be non-negative, got {cap}")
    memo: Dict[int, bool] = {}

    def holds(k: int) -> bool:
        if k not in memo:
            memo[k] = predicate(pad(u, k))
        return memo[k]

    if not holds(cap):
        raise NotFoundWithinCap(cap, str(u))
    lo, hi = 0, cap
    while lo < hi:
        mid = (lo + hi) // 2
        if holds(mid):
            hi = mid
        else:
            lo = mid + 1
    if lo > 0 and holds(lo - 1):
        raise InternalInconsistency(f"{pad(u, lo - 1)} is Gotzmann below the located threshold")
    if not holds(lo + 1):
        raise InternalInconsistency(f"persistence fails: {pad(u, lo)} is Gotzmann, {pad(u, lo + 1)} is not")
    logging.info(f"minimal padding of {u} is {lo} ({len(memo)} classifications)")
    return lo


def minimal_padding(u: Monomial, cap: int = DEFAULT_PADDING_CAP,
                    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
                    method: str = AUTO) -> int:
    """
    Least k <= cap with u * xn^k Gotzmann.

    Closed form when n <= 4 (unless method is "oracle"), oracle binary search otherwise.
    """
    if cap < 0:
        raise RangeError(f"padding cap must be non-negative, got {cap}")
    if method not in (AUTO, ORACLE, CLOSED_FORM):
        raise ConfigError(f"unknown classification method {method!r}")
    if method == CLOSED_FORM or (method == AUTO and u.nvars <= 4):
        if u.nvars >= 5:
            raise UnsupportedDimension(f"no closed form for {u.nvars} variables; use the oracle")
        k = max(0, closed_form_threshold(u) - u.exps[-1])
        if k > cap:
            raise NotFoundWithinCap(cap, str(u))
        return k
    return search_padding(
        u, cap, lambda w: is_gotzmann_monomial_oracle(w, enumeration_cap).is_gotzmann)
