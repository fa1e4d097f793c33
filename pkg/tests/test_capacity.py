"""
Capacité : α_k, pureté critique, seuils de violation, empilement de cubes
"""

import math
from fractions import Fraction

import networkx as nx
import pytest
import sympy as sp

from locorth.boxes import mix, pr_box, tensor_power, uniform_box
from locorth.boxes.storage import resolve_box
from locorth.capacity import (
    LOVASZ_NO_PR,
    NoisyFamily,
    alpha_k,
    box_packing,
    box_packing_count,
    capacity_bound,
    capacity_report,
    critical_purity,
    critical_purity_from_capacity,
    min_threshold_over_cliques,
    non_orthogonality_graph,
    packing_graph,
    support_probability,
    value_polynomial,
    violation_threshold,
)
from locorth.capacity.threshold import Q
from locorth.errors import InputError, NoCrossingError, ScenarioMismatch, SizeLimitExceeded
from locorth.inequalities import evaluate, load_inequality, ns_optimum
from locorth.scenario.events import Scenario
from locorth.scenario.graph import circulant_graph
from locorth.settings import DATA_DIR

INEQUALITIES = DATA_DIR / "inequalities"
TEN_TERM_ROOT = (math.sqrt(10) - 1) / 3
PRVIOL_ROOT = 4 / math.sqrt(5) - 1


class TestAlpha:
    def test_non_orthogonality_graph_of_pr(self):
        graph = non_orthogonality_graph(pr_box())
        assert nx.is_isomorphic(graph.to_networkx(), circulant_graph(8, [1, 2]).to_networkx())

    def test_first_powers(self):
        assert alpha_k(pr_box(), 1) == 2
        assert alpha_k(pr_box(), 2) == 5

    @pytest.mark.slow
    def test_third_power(self):
        alpha = alpha_k(pr_box(), 3)
        assert alpha >= 10
        assert alpha == box_packing_count(3)

    def test_support_must_be_uniform(self):
        noisy = mix(pr_box(), uniform_box(Scenario(2, 2, 2)), Fraction(1, 2))
        with pytest.raises(InputError):
            alpha_k(noisy, 1)
        assert support_probability(pr_box()) == Fraction(1, 2)

    def test_power_must_be_positive(self):
        with pytest.raises(InputError):
            alpha_k(pr_box(), 0)


class TestCriticalPurity:
    def test_values(self):
        assert critical_purity(2, 1, Fraction(1, 2), 2, 2) == pytest.approx(1.0)
        assert critical_purity(5, 2, Fraction(1, 2), 2, 2) == pytest.approx(PRVIOL_ROOT)

    def test_clamped_to_unit_interval(self):
        assert critical_purity(1, 1, Fraction(1, 2), 2, 2) == 1.0

    def test_support_probability_above_floor(self):
        with pytest.raises(InputError):
            critical_purity(5, 2, Fraction(1, 4), 2, 2)
        with pytest.raises(InputError):
            critical_purity(0, 2, Fraction(1, 2), 2, 2)

    def test_asymptotic_value_from_lovasz_number(self):
        assert critical_purity_from_capacity(LOVASZ_NO_PR, Fraction(1, 2), 2, 2) == pytest.approx(1 / math.sqrt(2))

    def test_bound(self):
        bound = capacity_bound(pr_box(), 2)
        assert bound.alpha_k == 5
        assert bound.lower_bound_theta == pytest.approx(math.sqrt(5))
        assert bound.reference_upper_theta == LOVASZ_NO_PR
        assert bound.critical_purity == pytest.approx(PRVIOL_ROOT)

    def test_report(self):
        rows = capacity_report(pr_box(), [2, 1, 2])
        assert [row.k for row in rows] == [1, 2]
        assert [row.alpha_k for row in rows] == [2, 5]
        assert all(row.lower_bound_theta <= LOVASZ_NO_PR for row in rows)

    def test_reference_only_for_pr(self):
        assert capacity_bound(resolve_box("det:01,10"), 1).reference_upper_theta is None


class TestThreshold:
    def test_ten_term_polynomial(self):
        ten_term = load_inequality(INEQUALITIES / "ten_term.loineq")
        polynomial = value_polynomial(ten_term, NoisyFamily.white_noise(pr_box(), 2))
        assert polynomial.eval(1) == sp.Rational(5, 4)
        assert polynomial.all_coeffs() == [sp.Rational(3, 8), sp.Rational(1, 4), sp.Rational(5, 8)]
        assert polynomial.gens == (Q,)

    def test_polynomial_agrees_with_boxes(self):
        prviol = load_inequality(INEQUALITIES / "prviol.loineq")
        family = NoisyFamily.white_noise(pr_box(), 2)
        polynomial = value_polynomial(prviol, family)
        for q in (Fraction(0), Fraction(1, 3), Fraction(4, 5)):
            assert polynomial.eval(sp.Rational(q.numerator, q.denominator)) == evaluate(prviol, family.box(q))

    def test_ten_term(self):
        ten_term = load_inequality(INEQUALITIES / "ten_term.loineq")
        family = NoisyFamily.white_noise(pr_box(), 2)
        q = violation_threshold(ten_term, family)
        assert q == pytest.approx(TEN_TERM_ROOT, abs=1e-9)
        below = Fraction(q - 1e-9).limit_denominator(10 ** 12)
        above = Fraction(q + 1e-9).limit_denominator(10 ** 12)
        assert evaluate(ten_term, family.box(below)) < 1 < evaluate(ten_term, family.box(above))

    def test_prviol(self):
        prviol = load_inequality(INEQUALITIES / "prviol.loineq")
        q = violation_threshold(prviol, NoisyFamily.white_noise(pr_box(), 2))
        assert q == pytest.approx(PRVIOL_ROOT, abs=1e-9)

    def test_gyni_with_its_optimal_box(self):
        gyni = load_inequality(INEQUALITIES / "gyni.loineq")
        family = NoisyFamily.white_noise(ns_optimum(gyni).box)
        assert violation_threshold(gyni, family) == pytest.approx(0.6, abs=1e-9)

    def test_no_crossing(self):
        gyni = load_inequality(INEQUALITIES / "gyni.loineq")
        with pytest.raises(NoCrossingError):
            violation_threshold(gyni, NoisyFamily.white_noise(resolve_box("det:000")))

    def test_scenario_mismatch(self):
        gyni = load_inequality(INEQUALITIES / "gyni.loineq")
        with pytest.raises(ScenarioMismatch):
            value_polynomial(gyni, NoisyFamily.white_noise(pr_box(), 2))
        with pytest.raises(ScenarioMismatch):
            NoisyFamily(pr_box(), uniform_box(Scenario(3, 2, 2)))

    def test_family(self):
        family = NoisyFamily.white_noise(pr_box(), 2)
        assert family.scenario == Scenario(4, 2, 2)
        assert family.box(1) == tensor_power(pr_box(), 2)
        with pytest.raises(InputError):
            NoisyFamily.white_noise(pr_box(), 0)


class TestMinThreshold:
    def test_single_pr_box(self):
        assert min_threshold_over_cliques(NoisyFamily.white_noise(pr_box(), 1)) is None

    def test_local_box(self):
        assert min_threshold_over_cliques(NoisyFamily.white_noise(resolve_box("det:000"))) is None

    @pytest.mark.slow
    def test_two_pr_boxes(self):
        family = NoisyFamily.white_noise(pr_box(), 2)
        q, witness = min_threshold_over_cliques(family)
        assert q == pytest.approx(TEN_TERM_ROOT, abs=1e-9)
        assert violation_threshold(witness, family) == q
        assert evaluate(witness, family.box(1)) > 1


class TestPacking:
    def test_counts(self):
        assert box_packing_count(1) == 2
        assert box_packing_count(2) == 5
        assert box_packing_count(2, torus=6, side=3) == 4

    def test_centres_are_far_apart(self):
        centres = box_packing(2)
        assert len(centres) == 5
        for i, u in enumerate(centres):
            for v in centres[i + 1:]:
                gaps = [min(abs(a - b), 8 - abs(a - b)) for a, b in zip(u, v)]
                assert max(gaps) >= 3

    def test_one_dimensional_graph_is_circulant(self):
        assert nx.is_isomorphic(packing_graph(1).to_networkx(), circulant_graph(8, [1, 2]).to_networkx())

    def test_agrees_with_alpha(self):
        assert box_packing_count(2) == alpha_k(pr_box(), 2)

    def test_invalid_arguments(self):
        with pytest.raises(InputError):
            packing_graph(0)
        with pytest.raises(SizeLimitExceeded):
            packing_graph(8)
