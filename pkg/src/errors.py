"""
Exception hierarchy for the Gotzmann monomial toolkit.
Input problems also derive from ValueError so callers can catch them generically.
"""

from typing import Optional


class GotzmannError(Exception):
    """Base class for every error raised by the toolkit."""


class DimensionMismatch(GotzmannError, ValueError):
    """Monomials or sets over different numbers of variables were combined."""


class DegreeMismatch(GotzmannError, ValueError):
    """Monomials of different degrees were compared or mixed in one set."""


class UnitMonomial(GotzmannError, ValueError):
    """An operation undefined on the unit monomial received it."""


class RangeError(GotzmannError, ValueError):
    """An integer argument lies outside its allowed range."""


class NotDivisible(GotzmannError, ValueError):
    """Division would make some exponent negative."""


class ParseError(GotzmannError, ValueError):
    """Monomial text does not follow the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class IndexOutOfRange(GotzmannError, ValueError):
    """A variable index exceeds the number of variables."""


class NoSuccessor(GotzmannError, ValueError):
    """The smallest monomial of its degree has no successor."""


class NoPredecessor(GotzmannError, ValueError):
    """The largest monomial of its degree has no predecessor."""


class OrderViolation(GotzmannError, ValueError):
    """Interval endpoints are given in the wrong lex order."""


class EmptySet(GotzmannError, ValueError):
    """An operation requiring a nonempty set received an empty one."""


class PreconditionViolation(GotzmannError, ValueError):
    """A closed-form formula was called outside the family it covers."""


class UnsupportedDimension(GotzmannError, ValueError):
    """No closed form exists for this number of variables."""


class ConfigError(GotzmannError, ValueError):
    """Invalid sweep or command-line configuration."""


class EnumerationCapExceeded(GotzmannError):
    """Materializing a set would exceed the enumeration cap."""

    def __init__(self, requested: int, cap: int, what: str = "set"):
        super().__init__(f"{what} of size {requested} exceeds enumeration cap {cap}")
        self.requested = requested
        self.cap = cap


class InternalInconsistency(GotzmannError):
    """Two computations that must agree did not."""


class NotFoundWithinCap(GotzmannError):
    """No Gotzmann padding was found up to the search cap."""

    def __init__(self, cap: int, monomial: Optional[str] = None):
        target = f" for {monomial}" if monomial else ""
        super().__init__(f"no Gotzmann padding{target} within cap {cap}")
        self.cap = cap
