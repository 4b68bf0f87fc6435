"""
Factory class for creating Gotzmann classifiers.
"""

from typing import List

from auto_classifier import AutoClassifier
from base_classifier import BaseClassifier
from closed_form_classifier import ClosedFormClassifier
from config import CLASSIFIER_METHODS
from errors import ConfigError
from oracle_classifier import OracleClassifier


class ClassifierFactory:
    """Factory for creating classifiers."""

    @staticmethod
    def create_classifier(method: str, **kwargs) -> BaseClassifier:
        """
        Create a classifier based on the specified method.

        Args:
            method: Classification method name ("auto", "oracle", "closed_form")
            **kwargs: enumeration_cap / padding_cap overrides

        Returns:
            Configured classifier
        """
        name = method.lower().replace("-", "_")
        if name == "auto":
            return AutoClassifier(**kwargs)
        elif name == "oracle":
            return OracleClassifier(**kwargs)
        elif name == "closed_form":
            return ClosedFormClassifier(**kwargs)
        else:
            raise ConfigError(f"Unknown classification method: {method}")

    @staticmethod
    def get_available_methods() -> List[str]:
        """Get list of available classification methods."""
        return list(CLASSIFIER_METHODS)
