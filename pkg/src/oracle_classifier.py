"""
Brute-force classifier: enumerates gaps and cogaps and compares maxgens.
"""

import logging

from base_classifier import BaseClassifier
from gotzmann import ORACLE, Verdict, is_gotzmann_monomial_oracle, is_gotzmann_set_oracle
from lex_engine import MonomialSet
from monomial_core import Monomial


class OracleClassifier(BaseClassifier):
    """Works for any number of variables, bounded by the enumeration cap."""

    method_name = ORACLE

    def classify(self, u: Monomial) -> Verdict:
        verdict = is_gotzmann_monomial_oracle(u, self.enumeration_cap)
        logging.info(f"oracle: {u} -> {verdict.is_gotzmann}")
        return verdict

    def classify_set(self, members: MonomialSet) -> bool:
        """Gotzmann test for an arbitrary set through the shade criterion."""
        return is_gotzmann_set_oracle(members, self.enumeration_cap)
