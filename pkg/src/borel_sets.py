"""
Borel closures, Borel stability, shades, lexification and maxgen monomials.
"""

import logging
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from config import BOREL_SIZE_CACHE_SIZE, DEFAULT_ENUMERATION_CAP
from errors import EmptySet, RangeError, UnitMonomial
from exact_arith import binom, checked_add
from lex_engine import MonomialSet, check_cap, lexsegment, rank, unrank
from monomial_core import Monomial, max_index

# Exponent of x_i in a maxgen monomial counts the members with max index i
MaxgenMonomial = Monomial


def _elementary_moves(v: Monomial):
    """All x_i * v / x_j with i < j and x_j | v."""
    exps = v.exps
    for j in range(1, len(exps)):
        if exps[j] == 0:
            continue
        for i in range(j):
            moved = list(exps)
            moved[j] -= 1
            moved[i] += 1
            yield Monomial(tuple(moved))


def borel_closure(u: Monomial, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialSet:
    """
    B(u), the smallest Borel-stable set containing u.

    Worklist fixed point over elementary moves; B(1) = {1}.
    """
    check_cap(borel_size(u), cap, f"B({u})")
    seen = {u}
    worklist = [u]
    while worklist:
        v = worklist.pop()
        for w in _elementary_moves(v):
            if w not in seen:
                seen.add(w)
                worklist.append(w)
    return MonomialSet.from_members(u.nvars, u.degree, seen)


def borel_closure_of_set(members: MonomialSet, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialSet:
    """Smallest Borel-stable set containing every member."""
    seen = set(members)
    worklist = list(members)
    while worklist:
        v = worklist.pop()
        for w in _elementary_moves(v):
            if w not in seen:
                seen.add(w)
                check_cap(len(seen), cap, "Borel closure")
                worklist.append(w)
    return MonomialSet.from_members(members.nvars, members.degree, seen)


def borel_size(u: Monomial) -> int:
    """|B(u)| without materializing the closure."""
    return _borel_size(u.exps)


@lru_cache(maxsize=BOREL_SIZE_CACHE_SIZE)
def _borel_size(exps: Tuple[int, ...]) -> int:
    # B(v*x_m^r) is the disjoint union of B(v*x_{m-1}^(r-i)) * x_m^i for i = 0..r
    support = [i for i, a in enumerate(exps) if a > 0]
    if not support or support[-1] == 0:
        return 1
    m = support[-1]
    r = exps[m]
    total = 0
    for i in range(r + 1):
        lowered = list(exps)
        lowered[m] = 0
        lowered[m - 1] += r - i
        total = checked_add(total, _borel_size(tuple(lowered)))
    return total


def in_borel_closure(u: Monomial, v: Monomial) -> bool:
    """v in B(u) iff v has u's degree and its sorted factors are pointwise <= those of u."""
    if v.degree != u.degree or v.nvars != u.nvars:
        return False
    return all(j <= i for i, j in zip(u.factors(), v.factors()))


def is_borel_stable(members: MonomialSet) -> bool:
    return all(w in members for v in members for w in _elementary_moves(v))


def shade(members: MonomialSet, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialSet:
    """shad(B) = {x_i * w : w in B, 1 <= i <= n}."""
    grown = set()
    for w in members:
        for i in range(members.nvars):
            exps = list(w.exps)
            exps[i] += 1
            grown.add(Monomial(tuple(exps)))
        check_cap(len(grown), cap, "shade")
    return MonomialSet.from_members(members.nvars, members.degree + 1, grown)


def shade_iter(members: MonomialSet, i: int, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialSet:
    """shad^i(B) = shad(shad^(i-1)(B))."""
    if i < 1:
        raise RangeError(f"shade power must be at least 1, got {i}")
    result = members
    for _ in range(i):
        result = shade(result, cap)
    return result


def lexify(members: MonomialSet,
           cap: int = DEFAULT_ENUMERATION_CAP) -> Tuple[MonomialSet, Monomial]:
    """(B^lex, w_B): the lexsegment L(w_B) with |B^lex| = |B|."""
    if members.is_empty():
        raise EmptySet("cannot lexify the empty set")
    w_b = unrank(members.nvars, members.degree, len(members) - 1)
    return lexsegment(w_b, cap), w_b


def is_lexsegment(members: MonomialSet) -> bool:
    return not members.is_empty() and rank(members.members[-1]) == len(members) - 1


def m_vector(members: MonomialSet) -> List[int]:
    """(m_1, ..., m_n) where m_i counts members with max index i."""
    if any(w.is_unit() for w in members):
        raise UnitMonomial("maxgen is undefined on a set containing 1")
    indices = np.fromiter((max_index(w) for w in members), dtype=np.int64, count=len(members))
    counts = np.bincount(indices, minlength=members.nvars + 1)
    return [int(c) for c in counts[1:]]


def maxgen(members: MonomialSet) -> MaxgenMonomial:
    """Product of lambda(w) over the members; maxgen of the empty set is 1."""
    return Monomial(tuple(m_vector(members)))


def maxgen_Snd(nvars: int, degree: int) -> MaxgenMonomial:
    """Closed-form maxgen(S_{n,d}): exponent of x_i is C(d-2+i, d-1)."""
    if degree < 1:
        raise RangeError(f"degree must be at least 1, got {degree}")
    return Monomial(tuple(binom(degree - 2 + i, degree - 1) for i in range(1, nvars + 1)))


def maxgen_Slnd(l: int, nvars: int, degree: int) -> MaxgenMonomial:
    """Closed-form maxgen of the degree-d monomials in x_l..x_n."""
    if not 1 <= l <= nvars:
        raise RangeError(f"l = {l} outside 1..{nvars}")
    if degree < 1:
        raise RangeError(f"degree must be at least 1, got {degree}")
    logging.debug(f"maxgen_Slnd(l={l}, n={nvars}, d={degree})")
    return Monomial(tuple(binom(degree - 1 + j - l, degree - 1) if j >= l else 0
                          for j in range(1, nvars + 1)))
