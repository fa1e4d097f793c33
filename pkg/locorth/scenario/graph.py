#!/usr/bin/env python3
"""
Graphes d'orthogonalité à adjacence en bitsets

Chaque sommet porte un entier Python dont le bit j indique l'arête (v, j).
Les graphes sont immuables : toutes les opérations renvoient un nouveau
graphe.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import networkx as nx

from .. import settings
from ..errors import DimensionMismatch, SizeLimitExceeded
from .events import Event, Scenario


def iter_bits(mask: int) -> Iterator[int]:
    """Indices des bits à 1, par ordre croissant"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _check_size(count: int, limit: Optional[int] = None):
    limit = settings.VERTEX_LIMIT if limit is None else limit
    if count > limit:
        raise SizeLimitExceeded(f"{count} sommets dépassent la limite de {limit}")


@dataclass(frozen=True)
class Graph:
    """Graphe simple non orienté, sans boucle"""

    vertex_count: int
    adjacency: tuple
    labels: Optional[tuple] = None
    scenario: Optional[Scenario] = None

    def __post_init__(self):
        if len(self.adjacency) != self.vertex_count:
            raise DimensionMismatch("adjacence incohérente avec le nombre de sommets")
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise DimensionMismatch("étiquettes incohérentes avec le nombre de sommets")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple], labels=None) -> "Graph":
        adjacency = [0] * vertex_count
        for u, v in edges:
            if u == v:
                continue
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        return cls(vertex_count, tuple(adjacency), labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> int:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.adjacency) // 2

    def edges(self) -> Iterator[tuple]:
        for u, mask in enumerate(self.adjacency):
            for v in iter_bits(mask >> (u + 1)):
                yield u, u + 1 + v

    def is_clique(self, vertices: Sequence[int]) -> bool:
        vertices = list(vertices)
        return all(self.has_edge(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:])

    def label(self, v: int) -> str:
        if self.labels is None:
            return str(v)
        item = self.labels[v]
        return item.label() if isinstance(item, Event) else str(item)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges())
        return graph


# ----------------------------------------------------------------------
# Constructions
# ----------------------------------------------------------------------

def _orthogonality_masks(scenario: Scenario, digit_rows: Sequence[tuple]) -> tuple:
    """
    Adjacence d'orthogonalité entre les événements donnés par leurs chiffres

    Pour chaque partie et chaque chiffre (x, a), on forme le masque des
    événements qui portent ce chiffre ; les voisins d'un événement sont ceux
    qui ont, pour une partie, le même réglage et un autre résultat.
    """
    d = scenario.d
    per_party = [[0] * scenario.radix for _ in range(scenario.n)]
    for position, digits in enumerate(digit_rows):
        for party, digit in enumerate(digits):
            per_party[party][digit] |= 1 << position

    # masque[partie][chiffre] = événements orthogonaux via cette partie
    orthogonal = []
    for party in range(scenario.n):
        row = []
        for digit in range(scenario.radix):
            x = digit // d
            block = 0
            for other in range(x * d, x * d + d):
                if other != digit:
                    block |= per_party[party][other]
            row.append(block)
        orthogonal.append(row)

    adjacency = []
    for digits in digit_rows:
        mask = 0
        for party, digit in enumerate(digits):
            mask |= orthogonal[party][digit]
        adjacency.append(mask)
    return tuple(adjacency)


def orthogonality_graph(scenario: Scenario, limit: Optional[int] = None) -> Graph:
    """
    Graphe d'orthogonalité O_{n,m,d}

    Args:
        scenario: Scénario de Bell
        limit: Nombre maximal de sommets (par défaut VERTEX_LIMIT)

    Returns:
        Graphe à (m·d)^n sommets étiquetés par les événements
    """
    _check_size(scenario.event_count, limit)
    rows = [scenario.digits(index) for index in range(scenario.event_count)]
    labels = tuple(scenario.decode(index) for index in range(scenario.event_count))
    return Graph(scenario.event_count, _orthogonality_masks(scenario, rows), labels, scenario)


def orthogonality_subgraph(scenario: Scenario, events: Sequence[int], limit: Optional[int] = None) -> Graph:
    """Sous-graphe de O_{n,m,d} induit par des index d'événements, sans construire O"""
    _check_size(len(events), limit)
    rows = [scenario.digits(index) for index in events]
    labels = tuple(scenario.decode(index) for index in events)
    return Graph(len(events), _orthogonality_masks(scenario, rows), labels, scenario)


def complement(graph: Graph) -> Graph:
    full = graph.full_mask
    adjacency = tuple(full ^ mask ^ (1 << v) for v, mask in enumerate(graph.adjacency))
    return Graph(graph.vertex_count, adjacency, graph.labels, graph.scenario)


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
    """
    Sous-graphe induit ; les sommets sont renumérotés dans l'ordre croissant

    Args:
        graph: Graphe source
        vertices: Sommets conservés

    Returns:
        Sous-graphe dont le sommet i correspond au i-ème sommet conservé
    """
    kept = sorted(set(vertices))
    for v in kept:
        if not 0 <= v < graph.vertex_count:
            raise DimensionMismatch(f"sommet {v} hors du graphe ({graph.vertex_count} sommets)")
    adjacency = []
    for v in kept:
        row = graph.adjacency[v]
        adjacency.append(mask_of(i for i, w in enumerate(kept) if row >> w & 1))
    labels = None if graph.labels is None else tuple(graph.labels[v] for v in kept)
    return Graph(len(kept), tuple(adjacency), labels, graph.scenario)


def _spread(mask: int, copies: int, width: int) -> int:
    """Recopie un masque de largeur `width` dans chacun des `copies` blocs"""
    result = 0
    for block in range(copies):
        result |= mask << (block * width)
    return result


def strong_product(g: Graph, h: Graph, limit: Optional[int] = None) -> Graph:
    """
    Produit fort g ⊠ h ; le sommet (u, v) porte l'index u·|h| + v
    """
    size = g.vertex_count * h.vertex_count
    _check_size(size, limit)
    width = h.vertex_count
    adjacency = []
    for u in range(g.vertex_count):
        closed_g = g.adjacency[u] | 1 << u
        for v in range(width):
            closed_h = h.adjacency[v] | 1 << v
            mask = 0
            for w in iter_bits(closed_g):
                mask |= closed_h << (w * width)
            adjacency.append(mask & ~(1 << (u * width + v)))
    return Graph(size, tuple(adjacency))


def conormal_product(g: Graph, h: Graph, limit: Optional[int] = None) -> Graph:
    """
    Produit co-normal : (u,v)~(u',v') si u~u' ou v~v'
    """
    size = g.vertex_count * h.vertex_count
    _check_size(size, limit)
    width = h.vertex_count
    block = (1 << width) - 1
    adjacency = []
    for u in range(g.vertex_count):
        blocks = 0
        for w in iter_bits(g.adjacency[u]):
            blocks |= block << (w * width)
        for v in range(width):
            adjacency.append(blocks | _spread(h.adjacency[v], g.vertex_count, width))
    return Graph(size, tuple(adjacency))


def strong_power(graph: Graph, k: int, limit: Optional[int] = None) -> Graph:
    result = graph
    for _ in range(k - 1):
        result = strong_product(result, graph, limit)
    return result


def conormal_power(graph: Graph, k: int, limit: Optional[int] = None) -> Graph:
    result = graph
    for _ in range(k - 1):
        result = conormal_product(result, graph, limit)
    return result


def circulant_graph(n: int, jumps: Sequence[int]) -> Graph:
    """Graphe circulant Ci_n(jumps)"""
    edges = [(v, (v + j) % n) for v in range(n) for j in jumps]
    return Graph.from_edges(n, edges)


def edgeless_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))
