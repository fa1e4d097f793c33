"""
Inégalités LO : évaluation, optimalité, principe LO^k, maximum non-signalant
"""

from .inequality import (
    LOInequality,
    LOVerdict,
    check_lo_k,
    complete_to_maximal,
    evaluate,
    from_clique,
    is_optimal,
)
from .nsmax import NSOptimum, ns_max, ns_optimum
from .storage import load_inequality, parse_inequality, save_inequality, serialize_inequality

__all__ = [
    "LOInequality",
    "LOVerdict",
    "NSOptimum",
    "check_lo_k",
    "complete_to_maximal",
    "evaluate",
    "from_clique",
    "is_optimal",
    "load_inequality",
    "ns_max",
    "ns_optimum",
    "parse_inequality",
    "save_inequality",
    "serialize_inequality",
]
