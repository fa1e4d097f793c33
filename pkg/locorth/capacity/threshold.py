#!/usr/bin/env python3
"""
Seuils de violation des familles bruitées

La famille q ↦ (q·P + (1−q)·N)^{⊗k} donne à chaque inégalité une valeur
polynomiale en q, calculée exactement avec sympy. Le seuil est le point où
cette valeur traverse 1 ; la racine est isolée par bisection (scipy).
"""

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np
import sympy as sp
from scipy.optimize import bisect

from .. import settings
from ..boxes.box import Box, mix, tensor_power, uniform_box
from ..classify.symmetry import canonical_key
from ..errors import InputError, NoCrossingError, ScenarioMismatch
from ..inequalities.inequality import LOInequality, evaluate
from ..journal import log_message
from ..scenario.events import Scenario
from ..scenario.graph import orthogonality_graph
from ..search.cliques import maximal_cliques
from ..settings import Budget

Q = sp.Symbol("q")

# Points de contrôle de la monotonie, puis grille de repli
MONOTONY_SAMPLES = 32
SCAN_POINTS = 10 ** 4


@dataclass(frozen=True)
class NoisyFamily:
    """Mélanges q·base + (1−q)·noise, sur k copies"""

    base: Box
    noise: Box
    k: int = 1

    def __post_init__(self):
        if self.base.scenario != self.noise.scenario:
            raise ScenarioMismatch(f"boîte {self.base.scenario} et bruit {self.noise.scenario}")
        if self.k < 1:
            raise InputError("k doit être ≥ 1")

    @classmethod
    def white_noise(cls, base: Box, k: int = 1) -> "NoisyFamily":
        return cls(base, uniform_box(base.scenario), k)

    @property
    def scenario(self) -> Scenario:
        s = self.base.scenario
        return Scenario(s.n * self.k, s.m, s.d)

    def box(self, q) -> Box:
        return tensor_power(mix(self.base, self.noise, q), self.k)

    def factor_weights(self, index: int) -> tuple:
        """(P(e_j), N(e_j)) pour chaque copie de l'événement"""
        s = self.base.scenario
        digits = self.scenario.digits(index)
        weights = []
        for copy in range(self.k):
            factor = s.from_digits(digits[copy * s.n:(copy + 1) * s.n])
            weights.append((self.base.table.get(factor, Fraction(0)), self.noise.table.get(factor, Fraction(0))))
        return tuple(weights)


def _rational(value: Fraction) -> sp.Rational:
    return sp.Rational(value.numerator, value.denominator)


def value_polynomial(inequality: LOInequality, family: NoisyFamily) -> sp.Poly:
    """Valeur exacte de l'inégalité sur la famille, polynôme en q"""
    if inequality.scenario != family.scenario:
        raise ScenarioMismatch(f"inégalité {inequality.scenario} et famille sur {family.scenario}")
    counts = Counter(family.factor_weights(index) for index in inequality.events)
    total = sp.Integer(0)
    for weights, count in counts.items():
        term = sp.Integer(count)
        for p, noise in weights:
            term *= Q * _rational(p - noise) + _rational(noise)
        total += term
    return sp.Poly(sp.expand(total), Q)


def _last_crossing(coefficients: list, tolerance: float) -> float:
    """Plus grande racine de [0,1] où la valeur passe de ≤ 0 à > 0, par balayage"""
    grid = np.linspace(0.0, 1.0, SCAN_POINTS)
    values = np.polyval(coefficients, grid)
    below = np.flatnonzero(values <= 0)
    i = int(below[-1])
    if values[i] == 0:
        return float(grid[i])
    return bisect(lambda q: np.polyval(coefficients, q), grid[i], grid[i + 1], xtol=tolerance)


def violation_threshold(inequality: LOInequality, family: NoisyFamily, tolerance: float = 1e-12) -> float:
    """
    Pureté au-delà de laquelle la famille viole l'inégalité

    Args:
        inequality: Inégalité du scénario à k copies de la famille
        family: Famille bruitée
        tolerance: Précision de la bisection

    Returns:
        q ∈ [0, 1] où la valeur vaut 1 ; si la valeur n'est pas croissante,
        la plus grande traversée
    """
    excess = value_polynomial(inequality, family) - 1
    if excess.eval(1) <= 0:
        raise NoCrossingError("la famille ne viole pas l'inégalité, même à q = 1")
    if excess.eval(0) >= 0:
        return 0.0
    coefficients = [float(c) for c in excess.all_coeffs()]
    samples = np.polyval(coefficients, np.linspace(0.0, 1.0, MONOTONY_SAMPLES))
    if np.all(np.diff(samples) >= 0):
        return bisect(lambda q: np.polyval(coefficients, q), 0.0, 1.0, xtol=tolerance)
    log_message("⚠️ valeur non monotone en q, balayage des racines", "warning")
    return _last_crossing(coefficients, tolerance)


def min_threshold_over_cliques(
    family: NoisyFamily,
    budget: Optional[Budget] = None,
    threads: Optional[int] = None,
    progress: bool = False,
) -> Optional[tuple]:
    """
    Plus petit seuil sur toutes les cliques maximales du scénario à k copies

    Seules les cliques violées à q = 1 ont un seuil. Les égalités (à 10⁻¹⁰
    près) sont départagées par la forme normale.

    Returns:
        (seuil, inégalité témoin), ou None si aucune clique n'est violée
    """
    threads = settings.THREADS if threads is None else threads
    scenario = family.scenario
    top = family.box(1)
    violated = []
    for clique in maximal_cliques(orthogonality_graph(scenario), budget, threads=threads, progress=progress):
        inequality = LOInequality(scenario, clique, check=False)
        if evaluate(inequality, top) > 1:
            violated.append(inequality)
    log_message(f"{len(violated)} cliques maximales violées à q = 1 sur {scenario}")
    if not violated:
        return None

    if threads > 1 and len(violated) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            thresholds = list(pool.map(
                violation_threshold, violated, itertools.repeat(family),
                chunksize=max(1, len(violated) // (threads * 8)),
            ))
    else:
        thresholds = [violation_threshold(inequality, family) for inequality in violated]
    return min(
        zip(thresholds, violated),
        key=lambda pair: (round(pair[0], 10), canonical_key(pair[1])),
    )
