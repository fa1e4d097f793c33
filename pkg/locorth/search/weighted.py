#!/usr/bin/env python3
"""
Clique de poids supérieur à un seuil (séparation et évaluation exacte)

Les poids rationnels sont ramenés à des entiers sur un dénominateur commun ;
toutes les comparaisons restent exactes.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from ..errors import DimensionMismatch, InputError
from ..scenario.graph import Graph, iter_bits
from ..settings import Budget
from .cliques import colour_classes, extend_to_maximal, maximal_cliques


@dataclass(frozen=True)
class WeightedGraph:
    """Graphe dont chaque sommet porte un poids rationnel positif ou nul"""

    graph: Graph
    weights: tuple

    def __post_init__(self):
        if len(self.weights) != self.graph.vertex_count:
            raise DimensionMismatch("un poids par sommet est requis")
        if any(Fraction(w) < 0 for w in self.weights):
            raise InputError("poids négatif")

    def weight_of(self, vertices) -> Fraction:
        return sum((Fraction(self.weights[v]) for v in vertices), Fraction(0))

    def scaled(self) -> tuple:
        """(poids entiers, dénominateur commun)"""
        fractions = [Fraction(w) for w in self.weights]
        scale = math.lcm(*(f.denominator for f in fractions)) if fractions else 1
        return tuple(int(f * scale) for f in fractions), scale


@dataclass(frozen=True)
class WeightedClique:
    vertices: tuple
    weight: Fraction


def _colour_bound(adjacency: tuple, weights: tuple, p: int) -> int:
    """Somme, sur chaque classe indépendante, du poids maximal de la classe"""
    best = {}
    for v, colour in colour_classes(adjacency, p):
        if weights[v] > best.get(colour, -1):
            best[colour] = weights[v]
    return sum(best.values())


def max_weighted_clique(
    wg: WeightedGraph,
    threshold=1,
    budget: Optional[Budget] = None,
    extend: bool = True,
) -> Optional[WeightedClique]:
    """
    Cherche une clique de poids total strictement supérieur au seuil

    Args:
        wg: Graphe pondéré
        threshold: Seuil rationnel
        budget: Budget de temps
        extend: Compléter le témoin en clique maximale du graphe

    Returns:
        Premier témoin dans l'ordre de recherche, ou None
    """
    clock = (budget or Budget()).start()
    adjacency = wg.graph.adjacency
    weights, scale = wg.scaled()
    limit = Fraction(threshold) * scale

    def search(clique: list, weight: int, p: int) -> Optional[list]:
        clock.tick()
        if weight > limit:
            return list(clique)
        if not p or weight + _colour_bound(adjacency, weights, p) <= limit:
            return None
        remaining = sum(weights[v] for v in iter_bits(p))
        for v in iter_bits(p):
            if weight + remaining <= limit:
                return None
            clique.append(v)
            found = search(clique, weight + weights[v], p & adjacency[v])
            clique.pop()
            if found is not None:
                return found
            p &= ~(1 << v)
            remaining -= weights[v]
        return None

    found = search([], 0, wg.graph.full_mask)
    if found is None:
        return None
    vertices = extend_to_maximal(wg.graph, found) if extend else tuple(sorted(found))
    return WeightedClique(vertices, wg.weight_of(vertices))


def heavy_maximal_cliques(wg: WeightedGraph, threshold=1, budget: Optional[Budget] = None) -> Iterator[WeightedClique]:
    """Toutes les cliques maximales de poids > seuil, dans l'ordre lexicographique"""
    threshold = Fraction(threshold)
    for clique in maximal_cliques(wg.graph, budget):
        weight = wg.weight_of(clique)
        if weight > threshold:
            yield WeightedClique(clique, weight)
