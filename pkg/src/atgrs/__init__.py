"""Exact finite-field toolkit for arbitrary-twist generalized Reed-Solomon codes."""

from .errors import AtgrsError
from .field import GF, FieldElement, make_field
from .tgrs import CodeSpec, MdsReport, classify_novelty, generator_matrix, is_mds

__all__ = [
    "AtgrsError",
    "CodeSpec",
    "FieldElement",
    "GF",
    "MdsReport",
    "classify_novelty",
    "generator_matrix",
    "is_mds",
    "make_field",
]

__version__ = "0.1.0"
