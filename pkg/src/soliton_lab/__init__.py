"""Curvature, soliton and wave analysis of left-invariant metrics on Lie groups."""

from __future__ import annotations

__version__ = "0.1.0"

from .catalog import enumerate_families, instantiate, verify_instance
from .classify import (classification_report, einstein_check, functional_criticality, left_invariant_soliton,
                       locally_symmetric, soliton_solve, structure_operator_3d, wave_classify)
from .core import MetricLieAlgebra, algebra, change_basis, from_spec, load_algebra, to_spec, validate
from .curvature import curvature, euler_lagrange
from .flow import integrate, self_similarity_check
from .lie import fingerprint
from .scalars import FLOAT, RATIONAL, FloatField

__all__ = [
    "__version__", "MetricLieAlgebra", "algebra", "validate", "change_basis", "to_spec", "from_spec",
    "load_algebra", "curvature", "euler_lagrange", "classification_report", "einstein_check",
    "soliton_solve", "locally_symmetric", "wave_classify", "functional_criticality", "left_invariant_soliton",
    "structure_operator_3d", "fingerprint", "enumerate_families", "instantiate", "verify_instance",
    "integrate", "self_similarity_check", "RATIONAL", "FLOAT", "FloatField",
]
