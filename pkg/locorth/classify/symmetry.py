#!/usr/bin/env python3
"""
Symétries d'un scénario : permutation des parties, des réglages et des
résultats, et forme normale des inégalités sous ces transformations.

Un élément agit sur un événement (a⃗|x⃗) ainsi : la position j du résultat
reçoit la partie i = party_perm[j], avec le réglage setting_perms[i][x_i]
et le résultat outcome_perms[i][x_i][a_i]. Les tables de réétiquetage sont
indexées par la partie et le réglage d'origine.
"""

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from .. import settings
from ..errors import BudgetExceeded, DimensionMismatch
from ..inequalities.inequality import LOInequality
from ..scenario.events import Event, Scenario


@dataclass(frozen=True)
class SymmetryElement:
    party_perm: tuple
    setting_perms: tuple
    outcome_perms: tuple

    @property
    def parties(self) -> int:
        return len(self.party_perm)

    def check(self, scenario: Scenario):
        n, m, d = scenario.n, scenario.m, scenario.d
        if (
            sorted(self.party_perm) != list(range(n))
            or len(self.setting_perms) != n
            or any(sorted(p) != list(range(m)) for p in self.setting_perms)
            or len(self.outcome_perms) != n
            or any(len(row) != m or any(sorted(p) != list(range(d)) for p in row) for row in self.outcome_perms)
        ):
            raise DimensionMismatch(f"élément de symétrie incompatible avec {scenario}")

    def apply_event(self, event: Event) -> Event:
        outcomes, settings_ = [], []
        for i in self.party_perm:
            x, a = event.settings[i], event.outcomes[i]
            settings_.append(self.setting_perms[i][x])
            outcomes.append(self.outcome_perms[i][x][a])
        return Event(tuple(outcomes), tuple(settings_))


def identity(scenario: Scenario) -> SymmetryElement:
    n, m, d = scenario.n, scenario.m, scenario.d
    return SymmetryElement(
        tuple(range(n)),
        tuple(tuple(range(m)) for _ in range(n)),
        tuple(tuple(tuple(range(d)) for _ in range(m)) for _ in range(n)),
    )


def compose(s: SymmetryElement, t: SymmetryElement) -> SymmetryElement:
    """s ∘ t : applique t puis s"""
    n = t.parties
    position = [0] * n
    for j, i in enumerate(t.party_perm):
        position[i] = j
    party_perm = tuple(t.party_perm[s.party_perm[k]] for k in range(n))
    setting_perms, outcome_perms = [], []
    for i in range(n):
        j = position[i]
        setting_perms.append(tuple(s.setting_perms[j][y] for y in t.setting_perms[i]))
        outcome_perms.append(tuple(
            tuple(s.outcome_perms[j][t.setting_perms[i][x]][b] for b in t.outcome_perms[i][x])
            for x in range(len(t.setting_perms[i]))
        ))
    return SymmetryElement(party_perm, tuple(setting_perms), tuple(outcome_perms))


def _invert(perm: tuple) -> tuple:
    inverse = [0] * len(perm)
    for k, v in enumerate(perm):
        inverse[v] = k
    return tuple(inverse)


def inverse(s: SymmetryElement) -> SymmetryElement:
    n = s.parties
    party_perm = _invert(s.party_perm)
    setting_perms = [None] * n
    outcome_perms = [None] * n
    for j, i in enumerate(s.party_perm):
        sigma_inv = _invert(s.setting_perms[i])
        setting_perms[j] = sigma_inv
        outcome_perms[j] = tuple(_invert(s.outcome_perms[i][sigma_inv[y]]) for y in range(len(sigma_inv)))
    return SymmetryElement(party_perm, tuple(setting_perms), tuple(outcome_perms))


def apply_symmetry(inequality: LOInequality, element: SymmetryElement) -> LOInequality:
    """Image de l'inégalité ; l'orthogonalité est préservée par construction"""
    s = inequality.scenario
    element.check(s)
    events = tuple(s.encode(element.apply_event(s.decode(index))) for index in inequality.events)
    return LOInequality(s, events, check=False)


def group_order(scenario: Scenario) -> int:
    n, m, d = scenario.n, scenario.m, scenario.d
    return math.factorial(n) * math.factorial(m) ** n * math.factorial(d) ** (n * m)


def local_relabelings(scenario: Scenario) -> list:
    """Réétiquetages d'une partie : couples (permutation des réglages, permutations des résultats)"""
    m, d = scenario.m, scenario.d
    return [
        (sigma, taus)
        for sigma in itertools.permutations(range(m))
        for taus in itertools.product(itertools.permutations(range(d)), repeat=m)
    ]


def symmetry_group(scenario: Scenario) -> Iterator[SymmetryElement]:
    """Tous les éléments du groupe engendré par les transformations de parties, réglages et résultats"""
    local = local_relabelings(scenario)
    for party_perm in itertools.permutations(range(scenario.n)):
        for choice in itertools.product(local, repeat=scenario.n):
            yield SymmetryElement(
                party_perm,
                tuple(sigma for sigma, _ in choice),
                tuple(taus for _, taus in choice),
            )


@lru_cache(maxsize=None)
def local_digit_maps(scenario: Scenario) -> np.ndarray:
    """Table (|H|, m·d) : chiffre a + d·x ↦ τ_x(a) + d·σ(x) pour chaque réétiquetage local"""
    d = scenario.d
    rows = []
    for sigma, taus in local_relabelings(scenario):
        row = [0] * scenario.radix
        for x in range(scenario.m):
            for a in range(d):
                row[a + d * x] = taus[x][a] + d * sigma[x]
        rows.append(row)
    return np.array(rows, dtype=np.int64)


# ----------------------------------------------------------------------
# Forme normale sous permutations de parties, réglages et résultats
# ----------------------------------------------------------------------

def _tie_orders(counts: list) -> list:
    """
    Ordres des étiquettes par multiplicité décroissante, tous les ex æquo
    étant permutés ; les étiquettes absentes (multiplicité 0) restent dans
    l'ordre naturel.
    """
    groups = {}
    for label, count in enumerate(counts):
        groups.setdefault(count, []).append(label)
    blocks = []
    for count in sorted(groups, reverse=True):
        labels = groups[count]
        blocks.append([tuple(labels)] if count == 0 else list(itertools.permutations(labels)))
    orders = []
    for combo in itertools.product(*blocks):
        orders.append(tuple(label for block in combo for label in block))
    return orders


def _party_candidates(scenario: Scenario, column: np.ndarray) -> np.ndarray:
    """Tables chiffre ancien ↦ chiffre nouveau guidées par les multiplicités, pour une partie"""
    m, d = scenario.m, scenario.d
    settings_ = column // d
    outcomes = column % d
    setting_orders = _tie_orders([int(np.sum(settings_ == x)) for x in range(m)])
    outcome_orders = [
        _tie_orders([int(np.sum((settings_ == x) & (outcomes == a))) for a in range(d)])
        for x in range(m)
    ]
    maps = []
    for order in setting_orders:
        new_setting = _invert(order)
        for outs in itertools.product(*outcome_orders):
            row = [0] * scenario.radix
            for x in range(m):
                new_outcome = _invert(outs[x])
                for a in range(d):
                    row[a + d * x] = new_outcome[a] + d * new_setting[x]
            maps.append(row)
    return np.array(maps, dtype=np.int64)


def _row_base(scenario: Scenario) -> int:
    return max(scenario.m, scenario.d)


def lex_min_row(rows: np.ndarray) -> np.ndarray:
    """Plus petite ligne dans l'ordre lexicographique"""
    candidates = np.arange(rows.shape[0])
    for col in range(rows.shape[1]):
        column = rows[candidates, col]
        candidates = candidates[column == column.min()]
        if len(candidates) == 1:
            break
    return rows[candidates[0]]


def canonical_sym(inequality: LOInequality, limit: Optional[int] = None) -> LOInequality:
    """
    Forme normale sous les permutations de parties, réglages et résultats

    Pour chaque partie, réglages puis résultats sont réétiquetés par
    multiplicité décroissante (tous les ex æquo essayés) ; toutes les
    permutations de parties sont appliquées. La forme normale est la plus
    petite matrice (a1…an x1…xn) à lignes triées.

    Args:
        inequality: Inégalité à normaliser
        limit: Nombre maximal de candidats (défaut LOCORTH_ORBIT_BUDGET)

    Returns:
        Inégalité représentante de l'orbite
    """
    s = inequality.scenario
    n, d = s.n, s.d
    if not inequality.events:
        return inequality
    limit = settings.ORBIT_BUDGET if limit is None else limit
    digits = np.array([s.digits(index) for index in inequality.events], dtype=np.int64)
    candidates = [_party_candidates(s, digits[:, i]) for i in range(n)]
    total = math.factorial(n) * math.prod(len(c) for c in candidates)
    if total > limit:
        raise BudgetExceeded(f"forme normale : {total} candidats (limite {limit})")

    base = _row_base(s)
    outcome_weight = [base ** (2 * n - 1 - j) for j in range(n)]
    setting_weight = [base ** (n - 1 - j) for j in range(n)]

    # contributions[i][j] : (k_i, t) apport de la partie i placée en position j
    contributions = []
    for i in range(n):
        mapped = candidates[i][:, digits[:, i]]
        new_x, new_a = mapped // d, mapped % d
        contributions.append([new_a * outcome_weight[j] + new_x * setting_weight[j] for j in range(n)])

    best = None
    for party_perm in itertools.permutations(range(n)):
        position = _invert(party_perm)
        first = contributions[0][position[0]]
        rest = None
        for i in range(1, n):
            term = contributions[i][position[i]]
            shape = [1] * (n - 1) + [term.shape[1]]
            shape[i - 1] = term.shape[0]
            term = term.reshape(shape)
            rest = term if rest is None else rest + term
        rest = np.zeros((1, first.shape[1]), dtype=np.int64) if rest is None else rest.reshape(-1, first.shape[1])
        for row in first:
            keys = np.sort(rest + row, axis=1)
            candidate = tuple(int(v) for v in lex_min_row(keys))
            if best is None or candidate < best:
                best = candidate

    events = []
    for key in best:
        values = []
        for _ in range(2 * n):
            key, digit = divmod(key, base)
            values.append(digit)
        values.reverse()
        events.append(s.encode(Event(tuple(values[:n]), tuple(values[n:]))))
    return LOInequality(s, tuple(events), check=False)


def canonical_key(inequality: LOInequality) -> tuple:
    """Clé de tri des représentants : (nombre de termes, matrice)"""
    return len(inequality), inequality.matrix()


def anchored_images(inequality: LOInequality, anchor: int = 0) -> set:
    """
    Images de l'inégalité sous tout le groupe qui contiennent l'événement `anchor`

    Returns:
        Ensemble de tuples d'index triés
    """
    s = inequality.scenario
    n = s.n
    maps = local_digit_maps(s)
    digits = np.array([s.digits(index) for index in inequality.events], dtype=np.int64)
    target = s.digits(anchor)
    weights = [s.radix ** (n - 1 - j) for j in range(n)]
    images = set()
    for party_perm in itertools.permutations(range(n)):
        # mapped[j] : (|H|, t) chiffres en position j
        mapped = [maps[:, digits[:, party_perm[j]]] for j in range(n)]
        hit = None
        for j in range(n):
            term = mapped[j] == target[j]
            shape = [1] * n + [term.shape[1]]
            shape[j] = term.shape[0]
            term = term.reshape(shape)
            hit = term if hit is None else hit & term
        selected = np.argwhere(hit.any(axis=-1))
        if not len(selected):
            continue
        index = np.zeros((len(selected), digits.shape[0]), dtype=np.int64)
        for j in range(n):
            index += mapped[j][selected[:, j]] * weights[j]
        index.sort(axis=1)
        images.update(tuple(int(v) for v in row) for row in index)
    return images
