"""
Closed-form classifier for at most four variables.
"""

from base_classifier import BaseClassifier
from gotzmann import CLOSED_FORM, Verdict, is_gotzmann_closed_form
from monomial_core import Monomial


class ClosedFormClassifier(BaseClassifier):
    """Compares the exponent of xn with the threshold; raises UnsupportedDimension for n >= 5."""

    method_name = CLOSED_FORM

    def classify(self, u: Monomial) -> Verdict:
        return is_gotzmann_closed_form(u, self.enumeration_cap)
