#!/usr/bin/env python3
"""
Classification des inégalités LO

Deux inégalités sont équivalentes si une permutation de parties, de
réglages et de résultats, suivie de l'ajout d'égalités de non-signalement,
envoie l'une sur l'autre. La clé d'une classe est le plus petit vecteur
quotient de l'orbite ; le représentant est la plus petite forme normale
rencontrée parmi les membres.
"""

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional, Union

from tqdm import tqdm

from .. import settings
from ..errors import InternalError, ScenarioMismatch
from ..inequalities.inequality import LOInequality
from ..inequalities.nsmax import ns_max
from ..inequalities.storage import save_inequality
from ..journal import log_message
from ..scenario.events import Scenario
from ..scenario.graph import orthogonality_graph
from ..search.cliques import maximal_cliques
from ..settings import Budget, BudgetClock
from .quotient import QuotientVector, ns_quotient, orbit_min_quotient
from .symmetry import anchored_images, canonical_key, canonical_sym, group_order


@dataclass(frozen=True)
class ClassRecord:
    """
    Classe d'équivalence : représentant, nombre de membres, valeur NS

    Pour `classify`, les membres sont les inégalités fournies ; pour
    `enumerate_classes`, toutes les cliques maximales du graphe dans la classe.
    """

    representative: LOInequality
    members: int
    key: tuple
    ns_value: Optional[Fraction] = None

    @property
    def terms(self) -> int:
        return len(self.representative)

    @property
    def trivial(self) -> bool:
        """Vrai si aucune boîte non-signalante ne viole l'inégalité"""
        return self.ns_value is not None and self.ns_value <= 1


def analyse(inequality: LOInequality) -> tuple:
    """(clé d'équivalence, forme normale) d'une inégalité"""
    return orbit_min_quotient(ns_quotient(inequality)), canonical_sym(inequality)


def class_ns_value(inequality: LOInequality, budget: Optional[Budget] = None) -> Fraction:
    vector: QuotientVector = ns_quotient(inequality)
    if vector.is_constant():
        return Fraction(vector.constant)
    return ns_max(inequality, budget)


def _clock(budget: Budget) -> BudgetClock:
    return BudgetClock(budget.max_cliques, budget.seconds, check_every=1)


def _collect(groups: dict, key: tuple, canonical: LOInequality, weight=1):
    if key in groups:
        best, count = groups[key]
        if canonical_key(canonical) < canonical_key(best):
            best = canonical
        groups[key] = (best, count + weight)
    else:
        groups[key] = (canonical, weight)


def _records(groups: dict, budget: Budget, ns_values: bool) -> List[ClassRecord]:
    records = []
    for key, (representative, count) in groups.items():
        if Fraction(count).denominator != 1:
            raise InternalError(f"effectif de classe non entier {count}")
        value = class_ns_value(representative, budget) if ns_values else None
        records.append(ClassRecord(representative, int(count), key, value))
    records.sort(key=lambda record: canonical_key(record.representative))
    return records


def classify(
    inequalities: Iterable[LOInequality],
    budget: Optional[Budget] = None,
    ns_values: bool = True,
    threads: Optional[int] = None,
    progress: bool = False,
) -> List[ClassRecord]:
    """
    Partitionne des inégalités en classes d'équivalence

    Args:
        inequalities: Inégalités d'un même scénario
        budget: Budget de temps
        ns_values: Calculer le maximum non-signalant de chaque représentant
        threads: Processus de calcul (défaut : LOCORTH_THREADS)
        progress: Barre de progression sur stderr

    Returns:
        Classes triées par (nombre de termes, forme normale)
    """
    inequalities = list(inequalities)
    if not inequalities:
        return []
    budget = budget or Budget()
    threads = settings.THREADS if threads is None else threads
    scenario = inequalities[0].scenario
    for inequality in inequalities:
        if inequality.scenario != scenario:
            raise ScenarioMismatch(f"inégalités de scénarios différents : {scenario} et {inequality.scenario}")

    clock = _clock(budget)
    groups = {}
    bar = tqdm(total=len(inequalities), disable=not progress, file=sys.stderr, desc="classification")
    if threads > 1 and len(inequalities) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for key, canonical in pool.map(analyse, inequalities, chunksize=8):
                clock.tick()
                _collect(groups, key, canonical)
                bar.update()
    else:
        for inequality in inequalities:
            clock.tick()
            _collect(groups, *analyse(inequality))
            bar.update()
    bar.close()

    log_message(f"{len(inequalities)} inégalités {scenario} : {len(groups)} classes")
    return _records(groups, budget, ns_values)


def enumerate_classes(
    scenario: Scenario,
    budget: Optional[Budget] = None,
    keep_trivial: bool = False,
    threads: Optional[int] = None,
    progress: bool = False,
) -> List[ClassRecord]:
    """
    Classes d'inégalités LO optimales d'un scénario

    Seules les cliques maximales contenant l'événement 0 sont énumérées : le
    groupe de symétrie agit transitivement sur les événements. Pour les
    petits groupes, toutes les images d'une clique passant par l'événement 0
    sont mises en cache, et la forme normale n'est calculée qu'une fois par
    orbite. Dans une orbite de cliques à t termes sur N événements, une
    clique sur N/t passe par l'événement 0 : chaque clique ancrée compte
    pour N/t membres, et le total est le nombre de cliques maximales de la
    classe.

    Args:
        scenario: Scénario (n, m, d)
        budget: Budget d'énumération
        keep_trivial: Conserver les classes sans violation non-signalante
        threads: Processus pour l'énumération des cliques
        progress: Barres de progression sur stderr

    Returns:
        Classes triées par (nombre de termes, forme normale)
    """
    budget = budget or Budget()
    graph = orthogonality_graph(scenario)
    cliques = maximal_cliques(graph, budget, containing=(0,), threads=threads, progress=progress)
    log_message(f"🔍 {len(cliques)} cliques maximales ancrées dans O{scenario}")

    cache = {} if group_order(scenario) <= settings.ORBIT_CACHE_LIMIT else None
    clock = _clock(budget)
    groups = {}
    for clique in tqdm(cliques, disable=not progress, file=sys.stderr, desc="classes"):
        clock.tick()
        if cache is not None and clique in cache:
            key, canonical = cache[clique]
        else:
            inequality = LOInequality(scenario, clique, check=False)
            key, canonical = analyse(inequality)
            if cache is not None:
                for image in anchored_images(inequality):
                    cache[image] = (key, canonical)
        _collect(groups, key, canonical, Fraction(scenario.event_count, len(clique)))

    records = _records(groups, budget, ns_values=True)
    if not keep_trivial:
        records = [record for record in records if not record.trivial]
    log_message(f"✅ {scenario} : {len(records)} classes retenues sur {len(groups)}")
    return records


def class_filename(scenario: Scenario, index: int) -> str:
    return f"class_{scenario.tag()}_{index}.loineq"


def write_classes(records: List[ClassRecord], directory: Union[str, Path]) -> List[Path]:
    """
    Écrit un fichier d'inégalité par classe, numérotés à partir de 1

    Returns:
        Chemins écrits, dans l'ordre des classes
    """
    directory = Path(directory)
    paths = []
    for index, record in enumerate(records, start=1):
        path = directory / class_filename(record.representative.scenario, index)
        comment = f"classe {index} : {record.terms} termes, {record.members} membres"
        if record.ns_value is not None:
            comment += f", maximum non-signalant {record.ns_value}"
        save_inequality(record.representative, path, comment)
        paths.append(path)
    return paths
