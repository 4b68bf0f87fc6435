"""
Exponent-vector monomials.
Degree, lex comparison, structural accessors, and text (de)serialization.
"""

import re
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from typing import Iterable, List, NewType, Tuple

from errors import (
    DegreeMismatch, DimensionMismatch, IndexOutOfRange, NotDivisible,
    ParseError, RangeError, UnitMonomial
)
from exact_arith import check_u64

VarIndex = NewType("VarIndex", int)


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Monomial:
    """
    x1^a1 * ... * xn^an stored as the exponent tuple (a1, ..., an).

    Instances are immutable and hashable. Over a fixed degree, descending
    lex order coincides with descending tuple order of ``exps``.
    """
    exps: Tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(a) for a in self.exps)
        if not exps:
            raise DimensionMismatch("a monomial needs at least one variable")
        for a in exps:
            if a < 0:
                raise RangeError(f"negative exponent {a}")
            check_u64(a, "exponent")
        check_u64(sum(exps), "degree")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def unit(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @classmethod
    def variable(cls, nvars: int, index: int, power: int = 1) -> "Monomial":
        """x_index^power in nvars variables (index is 1-based)."""
        i = var_index(index, nvars)
        exps = [0] * nvars
        exps[i - 1] = power
        return cls(tuple(exps))

    @classmethod
    def from_factors(cls, nvars: int, indices: Iterable[int]) -> "Monomial":
        """Build x_{i1} * ... * x_{ik} from a list of 1-based indices."""
        exps = [0] * nvars
        for i in indices:
            exps[var_index(i, nvars) - 1] += 1
        return cls(tuple(exps))

    @property
    def nvars(self) -> int:
        return len(self.exps)

    @cached_property
    def degree(self) -> int:
        return sum(self.exps)

    def is_unit(self) -> bool:
        return self.degree == 0

    def factors(self) -> List[int]:
        """Nondecreasing list of variable indices i1 <= ... <= id with u = x_{i1}...x_{id}."""
        out: List[int] = []
        for i, a in enumerate(self.exps, start=1):
            out.extend([i] * a)
        return out

    def exponent(self, index: int) -> int:
        return self.exps[var_index(index, self.nvars) - 1]

    def __str__(self) -> str:
        return format_monomial(self)


def var_index(value: int, nvars: int) -> VarIndex:
    """Validate a 1-based variable index."""
    if not 1 <= value <= nvars:
        raise IndexOutOfRange(f"variable index {value} outside 1..{nvars}")
    return VarIndex(value)


def _same_space(u: Monomial, v: Monomial) -> None:
    if u.nvars != v.nvars:
        raise DimensionMismatch(f"{u.nvars} variables vs {v.nvars} variables")


def lex_compare(u: Monomial, v: Monomial) -> Ordering:
    """Compare two monomials of the same degree in lex order."""
    _same_space(u, v)
    if u.degree != v.degree:
        raise DegreeMismatch(f"degree {u.degree} vs degree {v.degree}")
    if u.exps > v.exps:
        return Ordering.GREATER
    if u.exps < v.exps:
        return Ordering.LESS
    return Ordering.EQUAL


def min_index(u: Monomial) -> VarIndex:
    if u.is_unit():
        raise UnitMonomial("min(1) is undefined")
    return VarIndex(next(i for i, a in enumerate(u.exps, start=1) if a > 0))


def max_index(u: Monomial) -> VarIndex:
    if u.is_unit():
        raise UnitMonomial("max(1) is undefined")
    return VarIndex(max(i for i, a in enumerate(u.exps, start=1) if a > 0))


def lambda_var(u: Monomial) -> Monomial:
    """The variable x_{max(u)} as a degree-one monomial."""
    return Monomial.variable(u.nvars, max_index(u))


def prefix(u: Monomial, k: int) -> Monomial:
    """First k factors of u in nondecreasing index order."""
    if not 0 <= k <= u.degree:
        raise RangeError(f"prefix length {k} outside 0..{u.degree}")
    return Monomial.from_factors(u.nvars, u.factors()[:k])


def mul(u: Monomial, v: Monomial) -> Monomial:
    _same_space(u, v)
    return Monomial(tuple(a + b for a, b in zip(u.exps, v.exps)))


def divides(v: Monomial, u: Monomial) -> bool:
    _same_space(u, v)
    return all(b <= a for a, b in zip(u.exps, v.exps))


def div(u: Monomial, v: Monomial) -> Monomial:
    """u / v, defined when v divides u."""
    if not divides(v, u):
        raise NotDivisible(f"{format_monomial(v)} does not divide {format_monomial(u)}")
    return Monomial(tuple(a - b for a, b in zip(u.exps, v.exps)))


_FACTOR = re.compile(r"\s*x([0-9]+)(?:\s*\^\s*([0-9]+))?\s*", re.ASCII)
_EXPONENT = re.compile(r"[0-9]+", re.ASCII)
_STAR = re.compile(r"\s*\*")


def parse_monomial(text: str, nvars: int) -> Monomial:
    """
    Parse monomial text in nvars variables.

    Accepted forms:
        "1"                  the unit monomial
        "x2^2*x3"            product of factors x<i> or x<i>^<e>
        "0,2,1,0"            comma-separated exponent list (must contain a comma)

    Raises:
        ParseError: malformed text, with the offending position
        IndexOutOfRange: a variable index outside 1..nvars
    """
    if nvars < 1:
        raise RangeError(f"nvars must be positive, got {nvars}")
    if text.strip() == "1":
        return Monomial.unit(nvars)
    if "," in text:
        return _parse_numeric(text, nvars)

    exps = [0] * nvars
    pos = 0
    while True:
        match = _FACTOR.match(text, pos)
        if not match:
            raise ParseError(f"expected factor x<index> in {text!r}", pos)
        index = int(match.group(1))
        if not 1 <= index <= nvars:
            raise IndexOutOfRange(f"variable x{index} outside x1..x{nvars}")
        exps[index - 1] += int(match.group(2)) if match.group(2) is not None else 1
        pos = match.end()
        if pos == len(text):
            break
        star = _STAR.match(text, pos)
        if not star:
            raise ParseError(f"expected '*' in {text!r}", pos)
        pos = star.end()
    return Monomial(tuple(exps))


def _parse_numeric(text: str, nvars: int) -> Monomial:
    exps = []
    pos = 0
    for part in text.split(","):
        stripped = part.strip()
        if not _EXPONENT.fullmatch(stripped):
            raise ParseError(f"expected a non-negative integer in {text!r}", pos)
        exps.append(int(stripped))
        pos += len(part) + 1
    if len(exps) != nvars:
        raise DimensionMismatch(f"{len(exps)} exponents given for {nvars} variables")
    return Monomial(tuple(exps))


def format_monomial(u: Monomial) -> str:
    """Canonical text: ascending indices, exponent omitted when 1, "1" for the unit."""
    if u.is_unit():
        return "1"
    parts = []
    for i, a in enumerate(u.exps, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return "*".join(parts)
