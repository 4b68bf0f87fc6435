"""
Classifier that picks the closed form where one exists and the oracle elsewhere.
"""

from base_classifier import BaseClassifier
from closed_form_classifier import ClosedFormClassifier
from gotzmann import AUTO, Verdict
from monomial_core import Monomial
from oracle_classifier import OracleClassifier


class AutoClassifier(BaseClassifier):

    method_name = AUTO

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self.closed_form = ClosedFormClassifier(**kwargs)
        self.oracle = OracleClassifier(**kwargs)

    def classify(self, u: Monomial) -> Verdict:
        if u.nvars <= 4:
            return self.closed_form.classify(u)
        return self.oracle.classify(u)
