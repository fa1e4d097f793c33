#!/usr/bin/env python3
"""
Boîtes non-signalantes en arithmétique rationnelle exacte

Une boîte est une table creuse P(a⃗|x⃗) indexée par l'index en base mixte de
l'événement ; les entrées absentes valent zéro.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Optional, Sequence, Union

from ..errors import (
    InputDistributionError,
    MixtureError,
    NegativeProbabilityError,
    ScenarioMismatch,
)
from ..scenario.events import Event, Scenario

Key = Union[int, Event, str]


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        return Fraction(value).limit_denominator()
    return Fraction(value)


@dataclass(frozen=True)
class Box:
    """Distribution conditionnelle P(a⃗|x⃗) d'un scénario"""

    scenario: Scenario
    entries: tuple

    @classmethod
    def from_table(cls, scenario: Scenario, table: Mapping[Key, object]) -> "Box":
        """
        Construit une boîte à partir d'une table {événement: probabilité}

        Args:
            scenario: Scénario de la boîte
            table: Clés = index, Event ou chaîne `a|x` ; valeurs rationnelles

        Returns:
            Boîte (les zéros sont omis)
        """
        values = {}
        for key, value in table.items():
            index = _key_to_index(scenario, key)
            probability = _as_fraction(value)
            if probability < 0:
                raise NegativeProbabilityError(
                    f"probabilité négative {probability} pour {scenario.decode(index).label()}"
                )
            if probability:
                values[index] = values.get(index, Fraction(0)) + probability
        return cls(scenario, tuple(sorted(values.items())))

    @cached_property
    def table(self) -> dict:
        return dict(self.entries)

    def probability(self, key: Key) -> Fraction:
        return self.table.get(_key_to_index(self.scenario, key), Fraction(0))

    def __getitem__(self, key: Key) -> Fraction:
        return self.probability(key)

    def support(self) -> tuple:
        """Index des événements de probabilité non nulle, par ordre croissant"""
        return tuple(index for index, _ in self.entries)

    def has_uniform_support(self) -> bool:
        return len({p for _, p in self.entries}) <= 1


def _key_to_index(scenario: Scenario, key: Key) -> int:
    if isinstance(key, Event):
        return scenario.encode(key)
    if isinstance(key, str):
        return scenario.encode(scenario.parse_event(key))
    scenario.digits(key)
    return key


# ----------------------------------------------------------------------
# Validation
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class BoxVerdict:
    """Résultat de `validate` : ok, not_normalized ou signaling"""

    kind: str
    settings: Optional[tuple] = None
    party: Optional[int] = None
    context: Optional[tuple] = None

    @property
    def ok(self) -> bool:
        return self.kind == "ok"

    def describe(self) -> str:
        if self.kind == "not_normalized":
            return f"non normalisée pour x={''.join(map(str, self.settings))}"
        if self.kind == "signaling":
            return f"signalante : partie {self.party + 1}, contexte {self.context}"
        return "ok"


def validate(box: Box) -> BoxVerdict:
    """
    Vérifie normalisation et non-signalement en arithmétique exacte

    Les marginales des autres parties ne doivent pas dépendre du réglage de
    la partie tracée, pour chaque partie.
    """
    s = box.scenario
    totals = {}
    marginals = {}
    for index, p in box.entries:
        event = s.decode(index)
        totals[event.settings] = totals.get(event.settings, Fraction(0)) + p
        for party in range(s.n):
            rest = (
                party,
                event.settings[:party] + event.settings[party + 1:],
                event.outcomes[:party] + event.outcomes[party + 1:],
            )
            by_setting = marginals.setdefault(rest, {})
            x = event.settings[party]
            by_setting[x] = by_setting.get(x, Fraction(0)) + p

    for settings in s.setting_tuples():
        if totals.get(settings, Fraction(0)) != 1:
            return BoxVerdict("not_normalized", settings=settings)

    for rest in sorted(marginals):
        by_setting = marginals[rest]
        values = {by_setting.get(x, Fraction(0)) for x in range(s.m)}
        if len(values) > 1:
            party, other_settings, other_outcomes = rest
            return BoxVerdict("signaling", party=party, context=(other_outcomes, other_settings))
    return BoxVerdict("ok")


# ----------------------------------------------------------------------
# Constructeurs
# ----------------------------------------------------------------------

PR_SCENARIO = Scenario(2, 2, 2)


def pr_box_variant(alpha: int = 0, beta: int = 0, gamma: int = 0) -> Box:
    """Boîte de type PR : a ⊕ b = xy ⊕ αx ⊕ βy ⊕ γ, probabilité 1/2"""
    half = Fraction(1, 2)
    table = {}
    for x, y, a in itertools.product(range(2), repeat=3):
        b = a ^ (x * y) ^ (alpha * x) ^ (beta * y) ^ gamma
        table[Event((a, b), (x, y))] = half
    return Box.from_table(PR_SCENARIO, table)


def pr_box() -> Box:
    """Boîte PR : P(ab|xy) = 1/2 si a ⊕ b = xy"""
    return pr_box_variant(0, 0, 0)


def uniform_box(scenario: Scenario) -> Box:
    p = Fraction(1, scenario.d ** scenario.n)
    return Box(scenario, tuple((index, p) for index in range(scenario.event_count)))


def deterministic_box(scenario: Scenario, strategy: Sequence[Sequence[int]]) -> Box:
    """
    Boîte déterministe : la partie i répond strategy[i][x_i]

    Args:
        scenario: Scénario
        strategy: Pour chaque partie, le résultat associé à chaque réglage
    """
    if len(strategy) != scenario.n or any(len(f) != scenario.m for f in strategy):
        raise MixtureError("stratégie incompatible avec le scénario")
    table = {}
    for settings in scenario.setting_tuples():
        outcomes = tuple(strategy[i][x] for i, x in enumerate(settings))
        table[Event(outcomes, settings)] = 1
    return Box.from_table(scenario, table)


def tensor(b1: Box, b2: Box) -> Box:
    """
    Produit tensoriel : les parties de b2 suivent celles de b1
    """
    s1, s2 = b1.scenario, b2.scenario
    if s1.m != s2.m or s1.d != s2.d:
        raise ScenarioMismatch(f"produit impossible entre {s1} et {s2} (m et d doivent coïncider)")
    scenario = Scenario(s1.n + s2.n, s1.m, s1.d)
    shift = s2.event_count
    entries = [
        (i1 * shift + i2, p1 * p2)
        for i1, p1 in b1.entries
        for i2, p2 in b2.entries
    ]
    return Box(scenario, tuple(sorted(entries)))


def tensor_power(box: Box, k: int) -> Box:
    if k < 1:
        raise MixtureError("k doit être ≥ 1")
    result = box
    for _ in range(k - 1):
        result = tensor(result, box)
    return result


def mix(b1: Box, b2: Box, q) -> Box:
    """Mélange convexe q·b1 + (1−q)·b2"""
    q = _as_fraction(q)
    if not 0 <= q <= 1:
        raise MixtureError(f"paramètre de mélange {q} hors de [0,1]")
    if b1.scenario != b2.scenario:
        raise ScenarioMismatch(f"mélange de scénarios différents {b1.scenario} / {b2.scenario}")
    table = {}
    for index, p in b1.entries:
        table[index] = q * p
    for index, p in b2.entries:
        table[index] = table.get(index, Fraction(0)) + (1 - q) * p
    return Box(b1.scenario, tuple(sorted((i, p) for i, p in table.items() if p)))


def support(box: Box) -> tuple:
    return box.support()


def unconditional_joint(box: Box, input_dist: Mapping[tuple, object]) -> dict:
    """
    Distribution jointe P(a⃗, x⃗) = P(a⃗|x⃗)·P(x⃗)

    Args:
        box: Boîte conditionnelle
        input_dist: Loi des entrées {x⃗: probabilité}, de somme 1

    Returns:
        {index d'événement: masse} pour les masses non nulles
    """
    s = box.scenario
    weights = {}
    for settings, value in input_dist.items():
        settings = tuple(settings)
        if len(settings) != s.n or any(not 0 <= x < s.m for x in settings):
            raise InputDistributionError(f"entrée {settings} hors du scénario {s}")
        weight = _as_fraction(value)
        if weight < 0:
            raise InputDistributionError(f"poids négatif pour {settings}")
        weights[settings] = weight
    if sum(weights.values(), Fraction(0)) != 1:
        raise InputDistributionError("la loi des entrées ne somme pas à 1")

    joint = {}
    for index, p in box.entries:
        weight = weights.get(s.decode(index).settings, Fraction(0))
        if weight and p:
            joint[index] = p * weight
    return joint
