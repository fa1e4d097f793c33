"""
Moteurs de recherche de cliques
"""

from .cliques import (
    extend_to_maximal,
    independence_number,
    is_maximal_clique,
    maximal_cliques,
    maximum_clique,
    maximum_independent_set,
)
from .weighted import WeightedClique, WeightedGraph, heavy_maximal_cliques, max_weighted_clique

__all__ = [
    "WeightedClique",
    "WeightedGraph",
    "extend_to_maximal",
    "heavy_maximal_cliques",
    "independence_number",
    "is_maximal_clique",
    "max_weighted_clique",
    "maximal_cliques",
    "maximum_clique",
    "maximum_independent_set",
]
