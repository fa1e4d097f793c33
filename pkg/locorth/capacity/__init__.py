"""
Bornes de capacité, pureté critique et seuils de violation
"""

from .alpha import (
    LOVASZ_NO_PR,
    CapacityBound,
    alpha_k,
    capacity_bound,
    capacity_report,
    critical_purity,
    critical_purity_from_capacity,
    non_orthogonality_graph,
    support_probability,
)
from .packing import box_packing, box_packing_count, packing_centres, packing_graph
from .threshold import NoisyFamily, min_threshold_over_cliques, value_polynomial, violation_threshold

__all__ = [
    "LOVASZ_NO_PR",
    "CapacityBound",
    "NoisyFamily",
    "alpha_k",
    "box_packing",
    "box_packing_count",
    "capacity_bound",
    "capacity_report",
    "critical_purity",
    "critical_purity_from_capacity",
    "min_threshold_over_cliques",
    "non_orthogonality_graph",
    "packing_centres",
    "packing_graph",
    "support_probability",
    "value_polynomial",
    "violation_threshold",
]
