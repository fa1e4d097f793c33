#!/usr/bin/env python3
"""
Modèles à variables cachées locales et générateurs aléatoires de boîtes
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import LHVModelError
from ..scenario.events import Scenario
from .box import Box, deterministic_box, mix, pr_box_variant, tensor


@dataclass(frozen=True)
class LHVModel:
    """
    Mélange de stratégies déterministes

    strategies[λ][i][x] est le résultat de la partie i au réglage x sous λ ;
    weights[λ] est le poids q(λ).
    """

    scenario: Scenario
    weights: tuple
    strategies: tuple

    def __post_init__(self):
        if len(self.weights) != len(self.strategies) or not self.weights:
            raise LHVModelError("un poids par stratégie est requis")
        if any(Fraction(w) < 0 for w in self.weights):
            raise LHVModelError("poids négatif dans le modèle LHV")
        if sum((Fraction(w) for w in self.weights), Fraction(0)) != 1:
            raise LHVModelError("les poids du modèle LHV ne somment pas à 1")
        s = self.scenario
        for strategy in self.strategies:
            if len(strategy) != s.n or any(
                len(f) != s.m or any(not 0 <= a < s.d for a in f) for f in strategy
            ):
                raise LHVModelError(f"stratégie {strategy} incompatible avec {s}")


def from_lhv(model: LHVModel) -> Box:
    """Boîte classique Σ_λ q(λ) Π_i [a_i = f_i^λ(x_i)]"""
    s = model.scenario
    table = {}
    for weight, strategy in zip(model.weights, model.strategies):
        weight = Fraction(weight)
        if not weight:
            continue
        for index, p in deterministic_box(s, strategy).entries:
            table[index] = table.get(index, Fraction(0)) + weight * p
    return Box(s, tuple(sorted(table.items())))


def _random_weights(rng: random.Random, count: int, max_denominator: int) -> list:
    raw = [rng.randint(1, max_denominator) for _ in range(count)]
    total = sum(raw)
    return [Fraction(r, total) for r in raw]


def random_strategy(scenario: Scenario, rng: random.Random) -> tuple:
    return tuple(
        tuple(rng.randrange(scenario.d) for _ in range(scenario.m))
        for _ in range(scenario.n)
    )


def random_lhv_model(scenario: Scenario, rng: random.Random, terms: int = 3,
                     max_denominator: int = 12) -> LHVModel:
    strategies = tuple(random_strategy(scenario, rng) for _ in range(terms))
    return LHVModel(scenario, tuple(_random_weights(rng, terms, max_denominator)), strategies)


def random_local_box(scenario: Scenario, rng: random.Random, terms: int = 3,
                     max_denominator: int = 12) -> Box:
    """Boîte classique aléatoire (poids rationnels à dénominateur borné)"""
    return from_lhv(random_lhv_model(scenario, rng, terms, max_denominator))


def _random_pr_factor_box(scenario: Scenario, rng: random.Random) -> Box:
    result = None
    for _ in range(scenario.n // 2):
        factor = pr_box_variant(rng.randrange(2), rng.randrange(2), rng.randrange(2))
        result = factor if result is None else tensor(result, factor)
    return result


def random_ns_box(scenario: Scenario, rng: random.Random, max_denominator: int = 12) -> Box:
    """
    Boîte non-signalante aléatoire

    Mélange convexe d'une boîte classique et, pour les scénarios (2k,2,2),
    d'un produit de boîtes de type PR.

    Args:
        scenario: Scénario cible
        rng: Générateur pseudo-aléatoire (graine fixée par l'appelant)
        max_denominator: Borne des dénominateurs des poids

    Returns:
        Boîte validée par construction
    """
    local = random_local_box(scenario, rng, max_denominator=max_denominator)
    if scenario.m != 2 or scenario.d != 2 or scenario.n % 2:
        return local
    nonlocal_part = _random_pr_factor_box(scenario, rng)
    q = Fraction(rng.randint(0, max_denominator), max_denominator)
    return mix(nonlocal_part, local, q)


def constant_strategy(scenario: Scenario, outcomes: Sequence[int]) -> tuple:
    """Stratégie où la partie i répond toujours outcomes[i]"""
    return tuple(tuple([a] * scenario.m) for a in outcomes)
