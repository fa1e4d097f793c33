#!/usr/bin/env python3
"""
Coordonnées de Collins–Gisin

Pour chaque partie, le code local vaut 0 (partie absente) ou
1 + x·(d−1) + a pour a < d−1. Une coordonnée est l'index en base
L = 1 + m(d−1) des codes des parties, partie 1 en tête ; la coordonnée 0
est le terme constant. Le résultat d−1 s'élimine par normalisation :
[a = d−1 | x] = 1 − Σ_{a' < d−1} [a' | x].

Deux fonctionnelles de probabilités ont le même vecteur de coordonnées si
et seulement si elles coïncident sur toutes les boîtes non-signalantes.
"""

import itertools
from functools import lru_cache
from typing import Iterable

from ..scenario.events import Scenario


def local_size(scenario: Scenario) -> int:
    return 1 + scenario.m * (scenario.d - 1)


def coordinate_count(scenario: Scenario) -> int:
    return local_size(scenario) ** scenario.n


def local_code(scenario: Scenario, setting: int, outcome: int) -> int:
    return 1 + setting * (scenario.d - 1) + outcome


@lru_cache(maxsize=None)
def _local_expansions(scenario: Scenario) -> tuple:
    """Développement local de chaque chiffre (a + d·x) : tuple de (code, coefficient)"""
    d = scenario.d
    result = []
    for digit in range(scenario.radix):
        x, a = divmod(digit, d)
        if a < d - 1:
            result.append(((local_code(scenario, x, a), 1),))
        else:
            terms = [(0, 1)] + [(local_code(scenario, x, b), -1) for b in range(d - 1)]
            result.append(tuple(terms))
    return tuple(result)


def expand_event(scenario: Scenario, index: int) -> dict:
    """
    P(a⃗|x⃗) comme combinaison entière des coordonnées

    Returns:
        {coordonnée: coefficient entier non nul}
    """
    expansions = _local_expansions(scenario)
    size = local_size(scenario)
    result = {}
    for combo in itertools.product(*(expansions[digit] for digit in scenario.digits(index))):
        coordinate, coefficient = 0, 1
        for code, c in combo:
            coordinate = coordinate * size + code
            coefficient *= c
        result[coordinate] = result.get(coordinate, 0) + coefficient
    return {k: v for k, v in result.items() if v}


def expand_functional(scenario: Scenario, events: Iterable[int]) -> dict:
    """Somme des développements d'un ensemble d'événements"""
    total = {}
    for index in events:
        for coordinate, c in expand_event(scenario, index).items():
            total[coordinate] = total.get(coordinate, 0) + c
    return {k: v for k, v in total.items() if v}


def dense_vector(scenario: Scenario, coefficients: dict) -> tuple:
    vector = [0] * coordinate_count(scenario)
    for coordinate, c in coefficients.items():
        vector[coordinate] = c
    return tuple(vector)


def coordinate_codes(scenario: Scenario, coordinate: int) -> tuple:
    """Codes locaux (partie 1 en tête) d'une coordonnée"""
    size = local_size(scenario)
    codes = []
    for _ in range(scenario.n):
        coordinate, code = divmod(coordinate, size)
        codes.append(code)
    return tuple(reversed(codes))
