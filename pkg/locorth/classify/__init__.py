"""
Formes normales et classes d'équivalence des inégalités LO
"""

from .pipeline import ClassRecord, classify, enumerate_classes, write_classes
from .quotient import QuotientVector, ns_quotient, orbit_min_quotient
from .symmetry import (
    SymmetryElement,
    apply_symmetry,
    canonical_sym,
    compose,
    group_order,
    identity,
    inverse,
    symmetry_group,
)

__all__ = [
    "ClassRecord",
    "QuotientVector",
    "SymmetryElement",
    "apply_symmetry",
    "canonical_sym",
    "classify",
    "compose",
    "enumerate_classes",
    "group_order",
    "identity",
    "inverse",
    "ns_quotient",
    "orbit_min_quotient",
    "symmetry_group",
    "write_classes",
]
