#!/usr/bin/env python3
"""
Énumération des cliques maximales et recherche de clique maximum

Bron–Kerbosch avec pivot sur des ensembles représentés par des entiers
(bitsets) ; les branches de premier niveau suivent un ordre de dégénérescence
et peuvent être réparties sur un pool de processus.
"""

import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional

from tqdm import tqdm

from .. import settings
from ..errors import BudgetExceeded, NotACliqueError
from ..journal import log_message
from ..scenario.graph import Graph, complement, iter_bits
from ..settings import Budget, BudgetClock


def degeneracy_order(adjacency: tuple, mask: int) -> list:
    """
    Ordre de dégénérescence des sommets de `mask` (retrait du degré minimal)

    Args:
        adjacency: Masques d'adjacence
        mask: Sommets à ordonner

    Returns:
        Liste des sommets, le premier retiré en tête
    """
    remaining = mask
    degree = {v: (adjacency[v] & mask).bit_count() for v in iter_bits(mask)}
    buckets = {}
    for v, deg in degree.items():
        buckets.setdefault(deg, set()).add(v)
    order = []
    current = 0
    while remaining:
        current = max(0, current - 1)
        while not buckets.get(current):
            current += 1
        v = min(buckets[current])
        buckets[current].discard(v)
        order.append(v)
        remaining &= ~(1 << v)
        for u in iter_bits(adjacency[v] & remaining):
            deg = degree[u]
            buckets[deg].discard(u)
            degree[u] = deg - 1
            buckets.setdefault(deg - 1, set()).add(u)
    return order


def _expand(adjacency: tuple, clique: list, p: int, x: int, out: list, clock: BudgetClock):
    if not p and not x:
        clock.count_clique()
        out.append(tuple(sorted(clique)))
        return
    clock.tick()

    # Pivot : sommet de P ∪ X couvrant le plus de candidats
    pivot, best = -1, -1
    for u in iter_bits(p | x):
        covered = (p & adjacency[u]).bit_count()
        if covered > best:
            pivot, best = u, covered

    for v in iter_bits(p & ~adjacency[pivot]):
        neighbours = adjacency[v]
        clique.append(v)
        _expand(adjacency, clique, p & neighbours, x & neighbours, out, clock)
        clique.pop()
        p &= ~(1 << v)
        x |= 1 << v


def _top_level_tasks(adjacency: tuple, base: tuple, candidates: int) -> list:
    """Une tâche (sommet, P, X) par sommet candidat, dans l'ordre de dégénérescence"""
    tasks = []
    earlier = 0
    for v in degeneracy_order(adjacency, candidates):
        later = candidates & ~earlier & ~(1 << v)
        neighbours = adjacency[v]
        tasks.append((base + (v,), later & neighbours, earlier & neighbours))
        earlier |= 1 << v
    return tasks


# Contexte des processus du pool
_worker_adjacency = None
_worker_clock = None


def _init_worker(adjacency: tuple, max_cliques: int, seconds: Optional[float]):
    global _worker_adjacency, _worker_clock
    _worker_adjacency = adjacency
    _worker_clock = BudgetClock(max_cliques, seconds)


def _run_task(task: tuple) -> list:
    clique, p, x = task
    out = []
    _expand(_worker_adjacency, list(clique), p, x, out, _worker_clock)
    return out


def maximal_cliques(
    graph: Graph,
    budget: Optional[Budget] = None,
    containing: Iterable[int] = (),
    threads: Optional[int] = None,
    progress: bool = False,
) -> List[tuple]:
    """
    Toutes les cliques maximales, triées lexicographiquement

    Args:
        graph: Graphe à explorer
        budget: Budget de cliques et de temps (défaut : configuration)
        containing: Clique imposée ; seules les cliques maximales qui la
            contiennent sont produites
        threads: Nombre de processus (défaut : LOCORTH_THREADS)
        progress: Barre de progression tqdm sur stderr

    Returns:
        Liste de tuples de sommets triés
    """
    budget = budget or Budget()
    threads = settings.THREADS if threads is None else threads
    adjacency = graph.adjacency

    base = tuple(sorted(set(containing)))
    if not graph.is_clique(base):
        raise NotACliqueError(f"les sommets {base} ne forment pas une clique")
    candidates = graph.full_mask
    for v in base:
        candidates &= adjacency[v]
    if graph.vertex_count == 0:
        return [()] if not base else []
    if not candidates:
        return [base]

    tasks = _top_level_tasks(adjacency, base, candidates)
    results = []
    if threads > 1 and len(tasks) > 1:
        log_message(f"Énumération des cliques sur {threads} processus ({len(tasks)} branches)", "debug")
        with ProcessPoolExecutor(
            max_workers=threads,
            initializer=_init_worker,
            initargs=(adjacency, budget.max_cliques, budget.seconds),
        ) as pool:
            chunks = pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (threads * 8)))
            for chunk in tqdm(chunks, total=len(tasks), disable=not progress, file=sys.stderr):
                results.extend(chunk)
                if len(results) > budget.max_cliques:
                    raise BudgetExceeded(f"budget de cliques dépassé ({budget.max_cliques})")
    else:
        clock = budget.start()
        for clique, p, x in tqdm(tasks, disable=not progress, file=sys.stderr):
            _expand(adjacency, list(clique), p, x, results, clock)

    results.sort()
    return results


def is_maximal_clique(graph: Graph, clique: Iterable[int]) -> bool:
    """Clique que l'on ne peut étendre par aucun sommet extérieur"""
    vertices = sorted(set(clique))
    if not graph.is_clique(vertices):
        return False
    common = graph.full_mask
    for v in vertices:
        common &= graph.adjacency[v]
    return common == 0


def extend_to_maximal(graph: Graph, clique: Iterable[int]) -> tuple:
    """Complète une clique en ajoutant le plus petit sommet compatible"""
    vertices = sorted(set(clique))
    common = graph.full_mask
    for v in vertices:
        common &= graph.adjacency[v]
    while common:
        low = common & -common
        v = low.bit_length() - 1
        vertices.append(v)
        common &= graph.adjacency[v]
    return tuple(sorted(vertices))


def colour_classes(adjacency: tuple, p: int) -> list:
    """
    Coloration gloutonne des sommets de `p` en classes indépendantes

    Returns:
        Liste de (sommet, couleur) par couleur croissante (couleurs ≥ 1)
    """
    order = []
    colour = 0
    uncoloured = p
    while uncoloured:
        colour += 1
        q = uncoloured
        while q:
            low = q & -q
            v = low.bit_length() - 1
            uncoloured &= ~low
            q &= ~low & ~adjacency[v]
            order.append((v, colour))
    return order


def maximum_clique(graph: Graph, budget: Optional[Budget] = None) -> tuple:
    """
    Une clique de taille maximum (séparation et évaluation, borne de coloration)

    Le résultat est déterministe : la première clique de taille maximale
    rencontrée dans l'ordre d'exploration.
    """
    clock = (budget or Budget()).start()
    adjacency = graph.adjacency
    best: list = []

    def expand(clique: list, p: int):
        nonlocal best
        clock.tick()
        for v, colour in reversed(colour_classes(adjacency, p)):
            if len(clique) + colour <= len(best):
                return
            clique.append(v)
            candidates = p & adjacency[v]
            if candidates:
                expand(clique, candidates)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            p &= ~(1 << v)

    expand([], graph.full_mask)
    return tuple(sorted(best))


def maximum_independent_set(graph: Graph, budget: Optional[Budget] = None) -> tuple:
    return maximum_clique(complement(graph), budget)


def independence_number(graph: Graph, budget: Optional[Budget] = None) -> int:
    """α(G), calculé comme la taille d'une clique maximum du complémentaire"""
    return len(maximum_independent_set(graph, budget))


def brute_force_maximal_cliques(graph: Graph) -> List[tuple]:
    """Énumération naïve par sous-ensembles, pour les petits graphes"""
    found = []
    for subset in range(1 << graph.vertex_count):
        vertices = tuple(iter_bits(subset))
        if is_maximal_clique(graph, vertices):
            found.append(vertices)
    return sorted(found)


__all__ = [
    "brute_force_maximal_cliques",
    "colour_classes",
    "degeneracy_order",
    "extend_to_maximal",
    "independence_number",
    "is_maximal_clique",
    "maximal_cliques",
    "maximum_clique",
    "maximum_independent_set",
]
