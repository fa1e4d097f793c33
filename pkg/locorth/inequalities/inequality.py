#!/usr/bin/env python3
"""
Inégalités LO : ensembles d'événements deux à deux orthogonaux

Une inégalité s'écrit Σ_j P(e_j) ≤ 1 ; elle est optimale si ses
événements forment une clique maximale du graphe d'orthogonalité.
"""

from dataclasses import InitVar, dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from ..boxes.box import Box, tensor_power
from ..errors import InputError, NotACliqueError, ScenarioMismatch
from ..journal import log_message
from ..scenario.events import Event, Scenario, digits_orthogonal
from ..scenario.graph import Graph, orthogonality_subgraph
from ..search.cliques import maximal_cliques
from ..search.weighted import WeightedGraph, heavy_maximal_cliques, max_weighted_clique
from ..settings import Budget


@dataclass(frozen=True)
class LOInequality:
    """Ensemble d'événements (index triés) deux à deux orthogonaux ; borne 1"""

    scenario: Scenario
    events: tuple
    check: InitVar[bool] = True

    def __post_init__(self, check: bool):
        events = tuple(sorted(set(self.events)))
        object.__setattr__(self, "events", events)
        if not check:
            return
        rows = [self.scenario.digits(index) for index in events]
        for i, u in enumerate(rows):
            for j in range(i + 1, len(rows)):
                if not digits_orthogonal(self.scenario, u, rows[j]):
                    e, f = self.scenario.decode(events[i]), self.scenario.decode(events[j])
                    raise NotACliqueError(
                        f"événements non orthogonaux : {e.label()} et {f.label()}",
                        pair=(e.label(), f.label()),
                    )

    @classmethod
    def from_events(cls, scenario: Scenario, events: Iterable[Union[Event, str, int]]) -> "LOInequality":
        indices = []
        for e in events:
            if isinstance(e, str):
                e = scenario.parse_event(e)
            if isinstance(e, Event):
                e = scenario.encode(e)
            else:
                scenario.digits(e)
            indices.append(e)
        return cls(scenario, tuple(indices))

    def __len__(self):
        return len(self.events)

    def event_list(self) -> list:
        """Événements triés par (résultats, réglages), ordre des tableaux publiés"""
        return sorted(self.scenario.decode(index) for index in self.events)

    def labels(self) -> list:
        return [e.label() for e in self.event_list()]

    def matrix(self) -> tuple:
        """Lignes (a1…an x1…xn) triées"""
        return tuple(sorted(e.outcomes + e.settings for e in map(self.scenario.decode, self.events)))

    def __str__(self):
        return " + ".join(f"P({label})" for label in self.labels()) + " ≤ 1"


@dataclass(frozen=True)
class LOVerdict:
    """Verdict LO^k : témoin présent si et seulement si la boîte viole LO^k"""

    satisfied: bool
    k: int
    witness: Optional[LOInequality] = None
    value: Optional[Fraction] = None
    witnesses: tuple = ()

    def describe(self) -> str:
        if self.satisfied:
            return f"SATISFIED LO^{self.k}"
        return f"VIOLATED value {self.value}, {len(self.witness)} terms"


def _graph_scenario(graph: Graph) -> Scenario:
    if graph.scenario is not None:
        return graph.scenario
    events = [label for label in graph.labels or () if isinstance(label, Event)]
    if not events:
        raise ScenarioMismatch("graphe sans événements étiquetés")
    n = events[0].parties
    m = 1 + max(max(e.settings) for e in events)
    d = max(2, 1 + max(max(e.outcomes) for e in events))
    return Scenario(n, m, d)


def from_clique(graph: Graph, clique: Iterable[int]) -> LOInequality:
    """
    Inégalité LO associée à une clique d'un graphe d'orthogonalité étiqueté

    Args:
        graph: Graphe d'orthogonalité (ou sous-graphe) étiqueté par événements
        clique: Sommets de la clique

    Returns:
        Inégalité dont les événements sont les étiquettes de la clique
    """
    vertices = sorted(set(clique))
    for i, u in enumerate(vertices):
        for v in vertices[i + 1:]:
            if not graph.has_edge(u, v):
                pair = (graph.label(u), graph.label(v))
                raise NotACliqueError(f"{pair[0]} et {pair[1]} ne sont pas adjacents", pair=pair)
    scenario = _graph_scenario(graph)
    return LOInequality(scenario, tuple(scenario.encode(graph.labels[v]) for v in vertices), check=False)


def evaluate(inequality: LOInequality, box: Box) -> Fraction:
    """Valeur exacte Σ_j P(e_j)"""
    if inequality.scenario != box.scenario:
        raise ScenarioMismatch(f"inégalité {inequality.scenario} et boîte {box.scenario} incompatibles")
    table = box.table
    return sum((table.get(index, Fraction(0)) for index in inequality.events), Fraction(0))


def common_orthogonal_events(inequality: LOInequality) -> list:
    """Événements hors de l'inégalité orthogonaux à tous ses termes"""
    s = inequality.scenario
    rows = [s.digits(index) for index in inequality.events]
    members = set(inequality.events)
    found = []
    for index in range(s.event_count):
        if index in members:
            continue
        digits = s.digits(index)
        if all(digits_orthogonal(s, digits, row) for row in rows):
            found.append(index)
    return found


def is_optimal(inequality: LOInequality) -> bool:
    return not common_orthogonal_events(inequality)


def complete_to_maximal(inequality: LOInequality, budget: Optional[Budget] = None) -> list:
    """
    Toutes les cliques maximales de O contenant l'inégalité, ordre lexicographique

    Seul le voisinage commun des termes est construit.
    """
    candidates = common_orthogonal_events(inequality)
    if not candidates:
        return [inequality]
    graph = orthogonality_subgraph(inequality.scenario, candidates)
    completions = []
    for clique in maximal_cliques(graph, budget):
        events = inequality.events + tuple(candidates[v] for v in clique)
        completions.append(LOInequality(inequality.scenario, events, check=False))
    completions.sort(key=lambda ineq: ineq.events)
    return completions


def support_graph(box: Box) -> tuple:
    """(graphe d'orthogonalité du support, poids des sommets)"""
    support = box.support()
    graph = orthogonality_subgraph(box.scenario, support)
    return graph, WeightedGraph(graph, tuple(box.table[index] for index in support))


def check_lo_k(box: Box, k: int, budget: Optional[Budget] = None, all_witnesses: bool = False) -> LOVerdict:
    """
    Teste le principe LO sur k copies de la boîte

    Args:
        box: Boîte testée
        k: Nombre de copies
        budget: Budget de recherche
        all_witnesses: Renvoyer toutes les cliques maximales violées

    Returns:
        LOVerdict ; le témoin est restreint aux événements du support
    """
    if k < 1:
        raise InputError("k doit être ≥ 1")
    power = tensor_power(box, k)
    graph, weighted = support_graph(power)
    log_message(f"LO^{k} : graphe du support à {graph.vertex_count} sommets")
    support = power.support()

    def to_inequality(vertices) -> LOInequality:
        return LOInequality(power.scenario, tuple(support[v] for v in vertices), check=False)

    if all_witnesses:
        heavy = [(to_inequality(c.vertices), c.weight) for c in heavy_maximal_cliques(weighted, 1, budget)]
        if not heavy:
            return LOVerdict(True, k)
        return LOVerdict(False, k, heavy[0][0], heavy[0][1], tuple(heavy))

    found = max_weighted_clique(weighted, 1, budget)
    if found is None:
        return LOVerdict(True, k)
    return LOVerdict(False, k, to_inequality(found.vertices), found.weight)
