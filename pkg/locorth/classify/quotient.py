#!/usr/bin/env python3
"""
Représentation d'une inégalité modulo les égalités de non-signalement

Le vecteur quotient est le vecteur des coordonnées de Collins–Gisin de la
fonctionnelle (terme constant compris). Deux inégalités qui diffèrent
d'une combinaison d'égalités de normalisation et de non-signalement ont
le même vecteur. Les symétries agissent linéairement sur ces coordonnées :
un réétiquetage local par une matrice L×L sur chaque axe, une permutation
des parties par transposition des axes.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .. import settings
from ..errors import BudgetExceeded
from ..inequalities.correlators import (
    coordinate_count,
    expand_functional,
    local_code,
    local_size,
)
from ..inequalities.inequality import LOInequality
from ..scenario.events import Scenario
from .symmetry import group_order, lex_min_row, local_relabelings


@dataclass(frozen=True)
class QuotientVector:
    """Coefficients entiers dans les coordonnées de Collins–Gisin ; indice 0 = constante"""

    scenario: Scenario
    coefficients: tuple

    @property
    def constant(self) -> int:
        return self.coefficients[0]

    def is_constant(self) -> bool:
        return not any(self.coefficients[1:])


def quotient_of_functional(scenario: Scenario, events) -> QuotientVector:
    vector = [0] * coordinate_count(scenario)
    for coordinate, c in expand_functional(scenario, events).items():
        vector[coordinate] = c
    return QuotientVector(scenario, tuple(vector))


def ns_quotient(inequality: LOInequality) -> QuotientVector:
    return quotient_of_functional(inequality.scenario, inequality.events)


def _local_vector(scenario: Scenario, setting: int, outcome: int) -> np.ndarray:
    """Développement de [outcome | setting] sur les codes locaux"""
    column = np.zeros(local_size(scenario), dtype=np.int64)
    if outcome < scenario.d - 1:
        column[local_code(scenario, setting, outcome)] = 1
    else:
        column[0] = 1
        for b in range(scenario.d - 1):
            column[local_code(scenario, setting, b)] = -1
    return column


@lru_cache(maxsize=None)
def local_action_matrices(scenario: Scenario) -> np.ndarray:
    """
    Matrices (|H|, L, L) des réétiquetages locaux sur les codes d'une partie

    La colonne 0 fixe la constante ; la colonne du code (x, a) est le
    développement de l'image (σ(x), τ_x(a)).
    """
    size = local_size(scenario)
    matrices = []
    for sigma, taus in local_relabelings(scenario):
        matrix = np.zeros((size, size), dtype=np.int64)
        matrix[0, 0] = 1
        for x in range(scenario.m):
            for a in range(scenario.d - 1):
                matrix[:, local_code(scenario, x, a)] = _local_vector(scenario, sigma[x], taus[x][a])
        matrices.append(matrix)
    return np.array(matrices)


def orbit_min_quotient(vector: QuotientVector, limit: Optional[int] = None) -> tuple:
    """
    Plus petit vecteur (ordre lexicographique) de l'orbite sous les
    permutations de parties, réglages et résultats

    Les réétiquetages des n−1 premières parties sont appliqués en bloc ;
    ceux de la dernière partie sont parcourus un par un.

    Args:
        vector: Vecteur quotient
        limit: Taille maximale du groupe (défaut LOCORTH_ORBIT_BUDGET)

    Returns:
        Tuple d'entiers, clé d'équivalence de la classe
    """
    s = vector.scenario
    n, size = s.n, local_size(s)
    limit = settings.ORBIT_BUDGET if limit is None else limit
    order = group_order(s)
    if order > limit:
        raise BudgetExceeded(f"orbite de {order} éléments (limite {limit})")

    matrices = local_action_matrices(s)
    tensor = np.array(vector.coefficients, dtype=np.int64).reshape((size,) * n)
    best = None
    for party_perm in itertools.permutations(range(n)):
        stack = tensor.transpose(party_perm)[np.newaxis]
        for axis in range(n - 1):
            result = np.tensordot(matrices, stack, axes=([2], [axis + 1]))
            stack = np.moveaxis(result, 1, 2 + axis).reshape((-1,) + (size,) * n)
        for matrix in matrices:
            images = np.tensordot(stack, matrix, axes=([n], [1])).reshape(stack.shape[0], -1)
            candidate = tuple(int(v) for v in lex_min_row(images))
            if best is None or candidate < best:
                best = candidate
    return best
