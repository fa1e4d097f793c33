"""
Bases produits non extensibles construites à partir des inégalités LO
"""

from .bases import BasisFamily, default_family
from .vectors import (
    GramVerdict,
    ProductVectorSet,
    find_orthogonal_product_vector,
    gram_orthogonality,
    qubit_upb_check,
    vectors_from_inequality,
    weak_unextendible,
)

__all__ = [
    "BasisFamily",
    "GramVerdict",
    "ProductVectorSet",
    "default_family",
    "find_orthogonal_product_vector",
    "gram_orthogonality",
    "qubit_upb_check",
    "vectors_from_inequality",
    "weak_unextendible",
]
