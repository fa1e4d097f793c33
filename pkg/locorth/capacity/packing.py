#!/usr/bin/env python3
"""
Empilement de cubes sur le tore

Des cubes de côté `side` centrés sur les points entiers du tore
(Z/torus)^k se chevauchent si, sur chaque axe, la distance cyclique des
centres est < side. Le nombre maximal de cubes disjoints est le nombre
d'indépendance du graphe de chevauchement ; pour torus = 8 et side = 3,
c'est α_k de la boîte PR.
"""

import itertools
from typing import Optional

import numpy as np

from .. import settings
from ..errors import InputError, SizeLimitExceeded
from ..scenario.graph import Graph, mask_of
from ..search.cliques import maximum_independent_set
from ..settings import Budget


def packing_centres(k: int, torus: int = 8) -> np.ndarray:
    """(torus^k, k) : centres possibles, dans l'ordre lexicographique"""
    return np.array(list(itertools.product(range(torus), repeat=k)), dtype=np.int64).reshape(-1, k)


def packing_graph(k: int, torus: int = 8, side: int = 3) -> Graph:
    if k < 1 or torus < 1 or side < 1:
        raise InputError("k, tore et côté doivent être ≥ 1")
    if torus ** k > settings.VERTEX_LIMIT:
        raise SizeLimitExceeded(f"{torus ** k} centres dépassent la limite de {settings.VERTEX_LIMIT}")
    centres = packing_centres(k, torus)
    gaps = np.abs(centres[:, None, :] - centres[None, :, :])
    cyclic = np.minimum(gaps, torus - gaps)
    overlap = np.all(cyclic < side, axis=2)
    np.fill_diagonal(overlap, False)
    adjacency = tuple(mask_of(int(v) for v in np.flatnonzero(row)) for row in overlap)
    return Graph(len(centres), adjacency)


def box_packing(k: int, torus: int = 8, side: int = 3, budget: Optional[Budget] = None) -> list:
    """Centres d'un empilement maximal de cubes disjoints"""
    centres = packing_centres(k, torus)
    chosen = maximum_independent_set(packing_graph(k, torus, side), budget)
    return [tuple(int(c) for c in centres[v]) for v in sorted(chosen)]


def box_packing_count(k: int, torus: int = 8, side: int = 3, budget: Optional[Budget] = None) -> int:
    return len(box_packing(k, torus, side, budget))
