from .events import Event, Scenario, are_orthogonal
from .graph import (
    Graph,
    complement,
    conormal_product,
    induced_subgraph,
    orthogonality_graph,
    orthogonality_subgraph,
    strong_product,
)

__all__ = [
    "Event",
    "Graph",
    "Scenario",
    "are_orthogonal",
    "complement",
    "conormal_product",
    "induced_subgraph",
    "orthogonality_graph",
    "orthogonality_subgraph",
    "strong_product",
]
