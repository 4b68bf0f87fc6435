"""
Abstract base class for all Gotzmann classifiers.
Defines the common interface that every classification method must implement.
"""

from abc import ABC, abstractmethod
from typing import Optional

from config import DEFAULT_ENUMERATION_CAP, DEFAULT_PADDING_CAP
from gotzmann import Verdict, closed_form_threshold, minimal_padding
from monomial_core import Monomial


class BaseClassifier(ABC):
    """Abstract base class for all classifiers."""

    method_name = "base"

    def __init__(self,
                 enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
                 padding_cap: int = DEFAULT_PADDING_CAP):
        """
        Initialize the base classifier.

        Args:
            enumeration_cap: Largest set any classification may materialize
            padding_cap: Largest power of xn tried by minimal_padding
        """
        self.enumeration_cap = enumeration_cap
        self.padding_cap = padding_cap

    @abstractmethod
    def classify(self, u: Monomial) -> Verdict:
        """
        Decide whether u is a Gotzmann monomial.

        Args:
            u: Monomial to classify

        Returns:
            Verdict with witnesses
        """

    def is_gotzmann(self, u: Monomial) -> bool:
        return self.classify(u).is_gotzmann

    def threshold_for(self, u: Monomial) -> Optional[int]:
        """Closed-form threshold on the exponent of xn, None for n >= 5."""
        return closed_form_threshold(u)

    def minimal_padding(self, u: Monomial) -> int:
        """Least k <= padding_cap with u * xn^k Gotzmann under this method."""
        return minimal_padding(u, self.padding_cap, self.enumeration_cap, self.method_name)
