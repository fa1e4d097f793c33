#!/usr/bin/env python3
"""
Maximum exact d'une inégalité LO sur le polytope non-signalant

Le programme linéaire est écrit en coordonnées de Collins–Gisin : une
boîte non-signalante est un vecteur y ≥ 0 tel que chaque P(a⃗|x⃗),
fonction affine de y, soit positive. La boîte déterministe « tous les
résultats valent d−1 » correspond à y = 0 et fournit la base initiale.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .. import settings
from ..boxes.box import Box
from ..errors import InternalError, SizeLimitExceeded
from ..journal import log_message
from ..settings import Budget
from .correlators import coordinate_count, expand_event, expand_functional
from .inequality import LOInequality
from .simplex import OPTIMAL, maximize


@dataclass(frozen=True)
class NSOptimum:
    value: Fraction
    box: Box
    pivots: int


def _check_size(inequality: LOInequality, limit: Optional[int]):
    limit = settings.LP_MAX_VARIABLES if limit is None else limit
    count = inequality.scenario.event_count
    if count > limit:
        raise SizeLimitExceeded(f"programme linéaire à {count} variables (limite {limit})")


def ns_optimum(inequality: LOInequality, budget: Optional[Budget] = None,
               limit: Optional[int] = None) -> NSOptimum:
    """
    Valeur maximale et boîte non-signalante qui l'atteint

    Args:
        inequality: Inégalité LO
        budget: Budget de temps du simplexe
        limit: Nombre maximal de variables (défaut LOCORTH_LP_MAX_VARIABLES)

    Returns:
        NSOptimum (valeur exacte, boîte optimale, nombre de pivots)
    """
    _check_size(inequality, limit)
    s = inequality.scenario
    expansions = [expand_event(s, index) for index in range(s.event_count)]

    # P(e) = const + Σ coef·y ≥ 0   ⇔   −Σ coef·y ≤ const ; y_j ↔ coordonnée j+1
    rows, rhs = [], []
    for expansion in expansions:
        rows.append({coordinate - 1: -c for coordinate, c in expansion.items() if coordinate})
        rhs.append(expansion.get(0, 0))
    functional = expand_functional(s, inequality.events)
    objective = {coordinate - 1: c for coordinate, c in functional.items() if coordinate}

    clock = budget.start() if budget is not None else None
    result = maximize(coordinate_count(s) - 1, objective, rows, rhs, clock)
    if result.status != OPTIMAL:
        raise InternalError(f"programme non-signalant {result.status}")

    value = functional.get(0, 0) + result.value
    y = result.solution
    table = {}
    for index, expansion in enumerate(expansions):
        p = Fraction(expansion.get(0, 0)) + sum(
            (c * y.get(coordinate - 1, 0) for coordinate, c in expansion.items() if coordinate), Fraction(0)
        )
        if p:
            table[index] = p
    log_message(f"Maximum non-signalant {value} ({result.pivots} pivots)", "debug")
    return NSOptimum(value, Box(s, tuple(sorted(table.items()))), result.pivots)


def ns_max(inequality: LOInequality, budget: Optional[Budget] = None, limit: Optional[int] = None) -> Fraction:
    """Maximum exact de Σ_j P(e_j) sur les boîtes non-signalantes"""
    return ns_optimum(inequality, budget, limit).value
