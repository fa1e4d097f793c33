#!/usr/bin/env python3
"""
Nombres d'indépendance des puissances fortes et pureté critique

Le graphe de non-orthogonalité du support d'une boîte à support uniforme
(probabilité c) a pour puissance forte k-ième le graphe du support de
P^{⊗k}. Une inégalité LO violée par le mélange q·P + (1−q)·P_𝕀 sur k
copies impose (q·c + (1−q)/dⁿ)^k · α_k > 1.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional

from ..boxes.box import Box, pr_box
from ..errors import InputError, InternalError
from ..journal import log_message
from ..scenario.graph import Graph, complement, orthogonality_subgraph, strong_power
from ..search.cliques import independence_number
from ..settings import Budget

# Nombre de Lovász du graphe de non-orthogonalité de PR (valeur de référence, non calculée)
LOVASZ_NO_PR = 4 * (2 - math.sqrt(2))


@dataclass(frozen=True)
class CapacityBound:
    k: int
    alpha_k: int
    lower_bound_theta: float
    reference_upper_theta: Optional[float] = None
    critical_purity: Optional[float] = None


def support_probability(box: Box) -> Fraction:
    """Probabilité commune des événements du support"""
    if not box.entries:
        raise InputError("boîte de support vide")
    if not box.has_uniform_support():
        raise InputError("les événements du support n'ont pas tous la même probabilité")
    return box.entries[0][1]


def non_orthogonality_graph(box: Box) -> Graph:
    """Complémentaire du graphe d'orthogonalité restreint au support"""
    return complement(orthogonality_subgraph(box.scenario, box.support()))


def alpha_k(box: Box, k: int, budget: Optional[Budget] = None) -> int:
    """
    α(NO^{⊠k}) pour le graphe de non-orthogonalité du support de la boîte

    Args:
        box: Boîte à support uniforme
        k: Puissance forte
        budget: Budget de temps de la recherche

    Returns:
        Nombre d'indépendance
    """
    if k < 1:
        raise InputError("k doit être ≥ 1")
    support_probability(box)
    graph = strong_power(non_orthogonality_graph(box), k)
    log_message(f"α_{k} : puissance forte à {graph.vertex_count} sommets")
    return independence_number(graph, budget)


def critical_purity(alpha: int, k: int, c, n: int, d: int) -> float:
    """
    Solution q de (q·c + (1−q)/dⁿ)^k · α = 1

    Hors de [0, 1], la valeur est ramenée à la borne la plus proche et un
    avertissement est journalisé.
    """
    c = Fraction(c)
    floor = Fraction(1, d ** n)
    if c <= floor:
        raise InputError(f"c = {c} doit dépasser 1/dⁿ = {floor}")
    if alpha < 1 or k < 1:
        raise InputError("α et k doivent être ≥ 1")
    q = (alpha ** (-1 / k) - float(floor)) / float(c - floor)
    if not 0 <= q <= 1:
        log_message(f"⚠️ pureté critique {q:.6f} hors de [0,1], ramenée à la borne", "warning")
        q = min(1.0, max(0.0, q))
    return q


def critical_purity_from_capacity(theta: float, c, n: int, d: int) -> float:
    """Pureté critique asymptotique (dⁿ − Θ) / ((dⁿ·c − 1)·Θ)"""
    volume = d ** n
    return (volume - theta) / ((volume * float(c) - 1) * theta)


def capacity_bound(box: Box, k: int, budget: Optional[Budget] = None) -> CapacityBound:
    c = support_probability(box)
    s = box.scenario
    alpha = alpha_k(box, k, budget)
    return CapacityBound(
        k,
        alpha,
        alpha ** (1 / k),
        LOVASZ_NO_PR if box == pr_box() else None,
        critical_purity(alpha, k, c, s.n, s.d),
    )


def capacity_report(box: Box, powers: Iterable[int], budget: Optional[Budget] = None) -> List[CapacityBound]:
    """
    Une ligne par puissance ; la sur-multiplicativité α_{j+k} ≥ α_j·α_k est contrôlée
    """
    rows = [capacity_bound(box, k, budget) for k in sorted(set(powers))]
    found = {row.k: row.alpha_k for row in rows}
    for j in found:
        for k in found:
            if j + k in found and found[j + k] < found[j] * found[k]:
                raise InternalError(f"α_{j + k} = {found[j + k]} < α_{j}·α_{k}")
    return rows
