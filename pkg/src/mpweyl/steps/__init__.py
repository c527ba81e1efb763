"""Verification steps."""

from .presentation import PresentationStep
from .gwa_oracle import GwaOracleStep
from .module_relations import ModuleRelationsStep
from .classification import ClassificationStep
from .whittaker import WhittakerStep
from .uqrs import UqrsStep

__all__ = [
    "PresentationStep",
    "GwaOracleStep",
    "ModuleRelationsStep",
    "ClassificationStep",
    "WhittakerStep",
    "UqrsStep",
]
