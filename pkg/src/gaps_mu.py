"""
Gaps, cogaps, u-tilde, the mu-function on lexintervals, and the closed-form
maxgen formulas built on them.
"""

import logging
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator, Optional, Tuple

from config import DEFAULT_ENUMERATION_CAP
from borel_sets import (
    MaxgenMonomial, borel_closure, borel_size, in_borel_closure, maxgen
)
from errors import InternalInconsistency, OrderViolation, PreconditionViolation
from exact_arith import binom, checked_add, checked_mul
from lex_engine import (
    MonomialSet, check_cap, count, iter_degree, lex_compare, lexsegment,
    pred_iter, predecessor, rank, unrank
)
from monomial_core import (
    Monomial, Ordering, div, max_index, min_index, mul, prefix
)


@dataclass(frozen=True)
class GapReport:
    """
    Gaps and cogaps of a monomial with their maxgen witnesses.

    ``gaps`` is None when the report was built without materializing L(u);
    ``maxgen_gaps`` then comes from the closed form.
    """
    monomial: Monomial
    gaps: Optional[MonomialSet]
    cogaps: MonomialSet
    u_tilde: Monomial
    gap_count: int
    maxgen_gaps: MaxgenMonomial
    maxgen_cogaps: MaxgenMonomial

    @property
    def maxgens_agree(self) -> bool:
        return self.maxgen_gaps == self.maxgen_cogaps


def gaps_enumerated(u: Monomial, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialSet:
    """gaps(u) = L(u) minus B(u)."""
    return lexsegment(u, cap).difference(borel_closure(u, cap))


def is_gap_by_indices(u: Monomial, v: Monomial) -> bool:
    """
    Two-index criterion: with sorted factor lists i and j of u and v, v is a gap
    of u iff they agree before some s, j_s < i_s, and j_t > i_t for some t > s.
    """
    if u.nvars != v.nvars or u.degree != v.degree:
        return False
    i_list, j_list = u.factors(), v.factors()
    for s, (i_s, j_s) in enumerate(zip(i_list, j_list)):
        if i_s == j_s:
            continue
        if j_s > i_s:
            return False
        return any(j_t > i_t for i_t, j_t in zip(i_list[s + 1:], j_list[s + 1:]))
    return False


def _a1(v: Monomial, cap: int) -> MonomialSet:
    """A1(v) = B(v) minus {v}."""
    closure = borel_closure(v, cap)
    return MonomialSet(closure.nvars, closure.degree, tuple(w for w in closure if w != v))


def _a2(v: Monomial, cap: int) -> MonomialSet:
    """A2(v): monomials of degree deg(v) whose min index is at least min(v) + 1."""
    n = v.nvars
    low = min_index(v)
    tail = n - low
    check_cap(count(tail, v.degree), cap, f"A2({v})")
    if tail == 0:
        return MonomialSet.empty(n, v.degree)
    padding = (0,) * low
    return MonomialSet(n, v.degree,
                       tuple(Monomial(padding + w.exps) for w in iter_degree(tail, v.degree)))


def gaps_structural(u: Monomial, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialSet:
    """
    gaps(u) as the disjoint union over prefixes u_k of A1(u_k) * A2(u / u_k).

    Raises InternalInconsistency if two parts overlap.
    """
    d = u.degree
    if d < 2:
        return MonomialSet.empty(u.nvars, d)
    check_cap(gap_count(u), cap, f"gaps({u})")
    collected = set()
    for k in range(1, d):
        head = prefix(u, k)
        a1 = _a1(head, cap)
        if a1.is_empty():
            continue
        a2 = _a2(div(u, head), cap)
        for x in a1:
            for y in a2:
                w = mul(x, y)
                if w in collected:
                    raise InternalInconsistency(f"structural parts of gaps({u}) overlap at {w}")
                collected.add(w)
    return MonomialSet.from_members(u.nvars, d, collected)


def _weighted_prefixes(u: Monomial) -> Iterator[Tuple[int, int, int]]:
    """
    (k, i_{k+1}, |B(u_k)| - 1) for every prefix u_k with a nonzero contribution.

    Powers of x1 have a one-element closure and a next factor of xn leaves no
    room below it, so both are skipped without sizing a closure.
    """
    n = u.nvars
    head = [0] * n
    head[0] = u.exps[0]
    k = u.exps[0]
    for i in range(2, n):
        for _ in range(u.exps[i - 1]):
            if k > 0:
                weight = borel_size(Monomial(tuple(head))) - 1
                if weight:
                    yield k, i, weight
            head[i - 1] += 1
            k += 1


def inner_degree(u: Monomial) -> int:
    """Degree of u without its x1 and xn factors; the prefix walk is quadratic in it."""
    return sum(u.exps[1:-1])


def gap_count(u: Monomial) -> int:
    """Sum over k of (|B(u_k)| - 1) * |S_{n - i_{k+1}, d - k}|, never materializing sets."""
    d = u.degree
    total = 0
    for k, pivot, weight in _weighted_prefixes(u):
        total = checked_add(total, checked_mul(weight, count(u.nvars - pivot, d - k)))
    return total


def u_tilde(u: Monomial) -> Monomial:
    """The monomial with L(u_tilde) = B(u)^lex, i.e. pred^g(u)."""
    return unrank(u.nvars, u.degree, rank(u) - gap_count(u))


def cogaps(u: Monomial, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialSet:
    """cogaps(u) = pred_g(u) = L(u) minus L(u_tilde)."""
    members, _ = pred_iter(u, gap_count(u), cap)
    return members


def gaps_at_max(u: Monomial, index: int, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialSet:
    """gaps(u, i): the gaps w with max(w) = i."""
    return gaps_enumerated(u, cap).with_max_index(index)


def is_shift_gap(u: Monomial, w: Monomial) -> bool:
    """Membership in gaps(u * xn) through w / lambda(w) in gaps(u)."""
    if w.is_unit() or w.degree != u.degree + 1:
        return False
    lowered = list(w.exps)
    lowered[max_index(w) - 1] -= 1
    v = Monomial(tuple(lowered))
    return v.exps >= u.exps and not in_borel_closure(u, v)


def maxgen_pred_walk(u: Monomial, steps: int,
                     cap: int = DEFAULT_ENUMERATION_CAP) -> MaxgenMonomial:
    """maxgen of {pred^i(u) : 0 <= i < steps} without materializing the run."""
    check_cap(steps, cap, "predecessor walk")
    counts = [0] * u.nvars
    current = u
    for i in range(steps):
        counts[max_index(current) - 1] += 1
        if i + 1 < steps:
            current = predecessor(current)
    return Monomial(tuple(counts))


def gap_report(u: Monomial, cap: int = DEFAULT_ENUMERATION_CAP,
               materialize_gaps: bool = True) -> GapReport:
    """
    Assemble gaps, cogaps = pred_g(u), u_tilde = pred^g(u) and both maxgens.

    g comes from the closed-form count, so cogaps stay computable when only
    g (not L(u)) fits under the cap.
    """
    g = gap_count(u)
    co, boundary = pred_iter(u, g, cap)
    if boundary is None:
        raise InternalInconsistency(f"gap count {g} exhausts L({u})")
    if materialize_gaps:
        gaps = gaps_enumerated(u, cap)
        if len(gaps) != g:
            raise InternalInconsistency(f"|gaps({u})| = {len(gaps)} but gap_count = {g}")
        maxgen_gaps = maxgen(gaps)
    else:
        gaps = None
        maxgen_gaps = maxgen_gaps_formula(u)
    logging.debug(f"gap_report({u}): g={g}, u_tilde={boundary}")
    return GapReport(
        monomial=u,
        gaps=gaps,
        cogaps=co,
        u_tilde=boundary,
        gap_count=g,
        maxgen_gaps=maxgen_gaps,
        maxgen_cogaps=maxgen(co),
    )


def mu_enumerated(u2: Monomial, u1: Monomial,
                  cap: int = DEFAULT_ENUMERATION_CAP) -> MaxgenMonomial:
    """mu(u2, u1) = maxgen(L*(u1, u2)) for u1 >= u2; mu(u, u) = 1."""
    if lex_compare(u1, u2) == Ordering.LESS:
        raise OrderViolation(f"mu needs {u1} >= {u2}")
    return maxgen_pred_walk(u2, rank(u2) - rank(u1), cap)


def mu_power_drop(v: Monomial, m: int, k: int, nvars: int) -> MaxgenMonomial:
    """mu(v*x_m^k, v*x_{m-1}^k) = x_m^k * prod_{i=1}^{n-m} x_{m+i}^C(k-1+i, i+1)."""
    if not 2 <= m <= nvars:
        raise PreconditionViolation(f"m = {m} outside 2..{nvars}")
    if k < 1:
        raise PreconditionViolation(f"k must be positive, got {k}")
    if v.nvars != nvars:
        raise PreconditionViolation(f"v lives in {v.nvars} variables, not {nvars}")
    if not v.is_unit() and max_index(v) >= m:
        raise PreconditionViolation(f"max({v}) must be below {m}")
    exps = [0] * nvars
    exps[m - 1] = k
    for i in range(1, nvars - m + 1):
        exps[m - 1 + i] = binom(k - 1 + i, i + 1)
    return Monomial(tuple(exps))


def mu_two_var(r: int, s: int, i: int, nvars: int = 4) -> MaxgenMonomial:
    """mu(x2^r x4^s, x2^(r+i) x4^(s-i)) = x3^i x4^(C(i+1,2) + i(s-i)) in four variables."""
    if nvars != 4:
        raise PreconditionViolation(f"two-variable mu formula needs 4 variables, got {nvars}")
    if r < 0 or not 1 <= i <= s:
        raise PreconditionViolation(f"need r >= 0 and 1 <= i <= s, got r={r}, s={s}, i={i}")
    return Monomial((0, 0, i, binom(i + 1, 2) + i * (s - i)))


def maxgen_gaps_formula(u: Monomial) -> MaxgenMonomial:
    """
    Closed-form maxgen(gaps(u)).

    Each prefix u_k contributes maxgen of the degree-(d-k) monomials in
    x_{i_{k+1}+1}..x_n, raised to |B(u_k)| - 1.
    """
    n, d = u.nvars, u.degree
    exps = [0] * n
    for k, pivot, weight in _weighted_prefixes(u):
        for j in range(pivot + 1, n + 1):
            term = binom(d - k - 2 + j - pivot, d - k - 1)
            exps[j - 1] = checked_add(exps[j - 1], checked_mul(weight, term))
    return Monomial(tuple(exps))


def maxgen_gaps_xn_shift(w: MaxgenMonomial) -> MaxgenMonomial:
    """maxgen(gaps(u*xn)) from maxgen(gaps(u)) by cumulative sums of exponents."""
    return Monomial(tuple(accumulate(w.exps)))
