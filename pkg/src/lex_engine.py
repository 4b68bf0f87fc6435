"""
Lex-order arithmetic on S_{n,d}.
Successor/predecessor, lexsegments and lexintervals, ranking, and enumeration.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, Optional, Tuple

from config import DEFAULT_ENUMERATION_CAP
from errors import (
    DegreeMismatch, DimensionMismatch, EnumerationCapExceeded, NoPredecessor,
    NoSuccessor, OrderViolation, RangeError
)
from exact_arith import binom, checked_add
from monomial_core import Monomial, lex_compare, Ordering, max_index, mul


def check_cap(requested: int, cap: int, what: str = "set") -> None:
    if requested > cap:
        raise EnumerationCapExceeded(requested, cap, what)


@dataclass(frozen=True)
class MonomialSet:
    """
    Finite set of monomials of one degree in one polynomial ring.

    Members are kept strictly descending in lex order, so two equal sets
    always have identical member tuples.
    """
    nvars: int
    degree: int
    members: Tuple[Monomial, ...]

    @classmethod
    def empty(cls, nvars: int, degree: int) -> "MonomialSet":
        return cls(nvars, degree, ())

    @classmethod
    def from_members(cls, nvars: int, degree: int, members: Iterable[Monomial]) -> "MonomialSet":
        unique = set()
        for m in members:
            if m.nvars != nvars:
                raise DimensionMismatch(f"member {m} has {m.nvars} variables, set has {nvars}")
            if m.degree != degree:
                raise DegreeMismatch(f"member {m} has degree {m.degree}, set has degree {degree}")
            unique.add(m)
        return cls(nvars, degree, tuple(sorted(unique, key=lambda m: m.exps, reverse=True)))

    @cached_property
    def _lookup(self) -> FrozenSet[Monomial]:
        return frozenset(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self._lookup

    def is_empty(self) -> bool:
        return not self.members

    def _check_compatible(self, other: "MonomialSet") -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatch(f"{self.nvars} variables vs {other.nvars} variables")
        if self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} vs degree {other.degree}")

    def difference(self, other: "MonomialSet") -> "MonomialSet":
        self._check_compatible(other)
        return MonomialSet(self.nvars, self.degree, tuple(m for m in self.members if m not in other))

    def union(self, other: "MonomialSet") -> "MonomialSet":
        self._check_compatible(other)
        return MonomialSet.from_members(self.nvars, self.degree, self.members + other.members)

    def scaled(self, factor: Monomial) -> "MonomialSet":
        """Elementwise product with a fixed monomial (preserves lex order)."""
        return MonomialSet(self.nvars, self.degree + factor.degree,
                           tuple(mul(m, factor) for m in self.members))

    def with_max_index(self, index: int) -> "MonomialSet":
        """Members w with max(w) = index."""
        return MonomialSet(self.nvars, self.degree,
                           tuple(m for m in self.members if not m.is_unit() and max_index(m) == index))

    def formatted(self) -> str:
        return "{" + ", ".join(str(m) for m in self.members) + "}"


def count(nvars: int, degree: int) -> int:
    """|S_{n,d}| = C(n+d-1, d); count(0, 0) = 1 and count(0, d) = 0 for d > 0."""
    if nvars < 0 or degree < 0:
        raise RangeError(f"count({nvars}, {degree}) has a negative argument")
    if nvars == 0:
        return 1 if degree == 0 else 0
    return binom(nvars + degree - 1, degree)


def top(nvars: int, degree: int) -> Monomial:
    """x1^d, the largest monomial of S_{n,d}."""
    return Monomial((degree,) + (0,) * (nvars - 1))


def bottom(nvars: int, degree: int) -> Monomial:
    """xn^d, the smallest monomial of S_{n,d}."""
    return Monomial((0,) * (nvars - 1) + (degree,))


def successor(u: Monomial) -> Monomial:
    """Next smaller monomial: u = v*xn^a with m = max(v) maps to (v/x_m)*x_{m+1}^(a+1)."""
    a_n = u.exps[-1]
    if a_n == u.degree:
        raise NoSuccessor(f"{u} is the smallest monomial of degree {u.degree}")
    exps = list(u.exps)
    exps[-1] = 0
    m = max(i for i, a in enumerate(exps, start=1) if a > 0)
    exps[m - 1] -= 1
    exps[m] += a_n + 1
    return Monomial(tuple(exps))


def predecessor(u: Monomial) -> Monomial:
    """Next larger monomial: u = v*x_m^a with m = max(u) maps to v*x_{m-1}*xn^(a-1)."""
    if u.exps[0] == u.degree:
        raise NoPredecessor(f"{u} is the largest monomial of degree {u.degree}")
    m = max_index(u)
    a = u.exps[m - 1]
    exps = list(u.exps)
    exps[m - 1] = 0
    exps[m - 2] += 1
    exps[-1] += a - 1
    return Monomial(tuple(exps))


def rank(u: Monomial) -> int:
    """
    Position of u in S_{n,d} listed in descending lex order (rank(x1^d) = 0).

    Counts the monomials v > u: for each position i they first differ at,
    v_i exceeds u_i and the remaining degree spreads over x_{i+1}..xn.
    """
    n = u.nvars
    remaining = u.degree
    total = 0
    for i in range(1, n):
        a = u.exps[i - 1]
        slack = remaining - a
        # sum over e = 0..slack-1 of C(n-i-1+e, e) collapses to one binomial
        total = checked_add(total, binom(n - i - 1 + slack, slack - 1))
        remaining -= a
    return total


def unrank(nvars: int, degree: int, r: int) -> Monomial:
    """Inverse of rank on S_{n,d}."""
    size = count(nvars, degree)
    if not 0 <= r < size:
        raise RangeError(f"rank {r} outside 0..{size - 1} for S_({nvars},{degree})")
    exps = []
    remaining = degree
    for i in range(1, nvars):
        for a in range(remaining, -1, -1):
            block = count(nvars - i, remaining - a)
            if r < block:
                exps.append(a)
                remaining -= a
                break
            r -= block
    exps.append(remaining)
    return Monomial(tuple(exps))


def iter_degree(nvars: int, degree: int) -> Iterator[Monomial]:
    """Lazily yield S_{n,d} in descending lex order."""
    yield from iter_rank_range(nvars, degree, 0, count(nvars, degree))


def iter_rank_range(nvars: int, degree: int, start: int, stop: int) -> Iterator[Monomial]:
    """Yield the monomials with rank in [start, stop) in descending lex order."""
    stop = min(stop, count(nvars, degree))
    if start >= stop:
        return
    u = unrank(nvars, degree, start)
    yield u
    for _ in range(start + 1, stop):
        u = successor(u)
        yield u


def full_degree_set(nvars: int, degree: int, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialSet:
    size = count(nvars, degree)
    check_cap(size, cap, f"S_({nvars},{degree})")
    logging.debug(f"Materializing S_({nvars},{degree}) with {size} members")
    return MonomialSet(nvars, degree, tuple(iter_degree(nvars, degree)))


def pred_iter(u: Monomial, r: int,
              cap: int = DEFAULT_ENUMERATION_CAP) -> Tuple[MonomialSet, Optional[Monomial]]:
    """
    pred_r(u) = {pred^i(u) : 0 <= i < r} together with pred^r(u).

    The boundary is None when r = |L(u)|, since pred^r(u) would lie above x1^d.
    """
    size_l = rank(u) + 1
    if not 0 <= r <= size_l:
        raise RangeError(f"r = {r} outside 0..{size_l} for {u}")
    check_cap(r, cap, "predecessor run")
    walked = []
    current: Optional[Monomial] = u
    for i in range(r):
        walked.append(current)
        current = predecessor(current) if i + 1 < size_l else None
    walked.reverse()
    return MonomialSet(u.nvars, u.degree, tuple(walked)), current


def lexsegment(u: Monomial, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialSet:
    """L(u) = {v in S_{n,d} : v >= u}."""
    size = rank(u) + 1
    check_cap(size, cap, f"L({u})")
    return MonomialSet(u.nvars, u.degree, tuple(iter_rank_range(u.nvars, u.degree, 0, size)))


def lexinterval_exclusive(u1: Monomial, u2: Monomial,
                          cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialSet:
    """L*(u1, u2) = {v : u1 > v >= u2}."""
    if lex_compare(u1, u2) == Ordering.LESS:
        raise OrderViolation(f"{u1} < {u2}")
    members, _ = pred_iter(u2, rank(u2) - rank(u1), cap)
    return members


@dataclass(frozen=True)
class LexInterval:
    """Half-open lex interval L*(upper, lower) = {v : upper > v >= lower}."""
    upper: Monomial
    lower: Monomial

    def __post_init__(self):
        if lex_compare(self.upper, self.lower) == Ordering.LESS:
            raise OrderViolation(f"upper {self.upper} lies below lower {self.lower}")

    @property
    def nvars(self) -> int:
        return self.upper.nvars

    @property
    def degree(self) -> int:
        return self.upper.degree

    def __len__(self) -> int:
        return rank(self.lower) - rank(self.upper)

    def members(self, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialSet:
        return lexinterval_exclusive(self.upper, self.lower, cap)
