"""
Symétries, formes normales et classes d'équivalence
"""

import random
from collections import Counter
from fractions import Fraction

import pytest

from locorth.boxes import pr_box, tensor_power
from locorth.classify import (
    apply_symmetry,
    canonical_sym,
    classify,
    compose,
    enumerate_classes,
    group_order,
    identity,
    inverse,
    ns_quotient,
    orbit_min_quotient,
    symmetry_group,
    write_classes,
)
from locorth.classify.symmetry import anchored_images, canonical_key
from locorth.errors import BudgetExceeded, DimensionMismatch, ScenarioMismatch
from locorth.inequalities import LOInequality, check_lo_k, evaluate, is_optimal, load_inequality
from locorth.scenario.events import Scenario
from locorth.scenario.graph import orthogonality_graph
from locorth.search import maximal_cliques
from locorth.settings import DATA_DIR

INEQUALITIES = DATA_DIR / "inequalities"
GYNI_SCENARIO = Scenario(3, 2, 2)
PR_PAIR = Scenario(4, 2, 2)

# deux cliques de 5 événements du support de PR⊗PR, de classes différentes
WITNESS_512 = ["0000|0000", "0011|0100", "0111|1101", "1100|1010", "1110|0011"]
WITNESS_128 = ["0000|0000", "0011|0101", "0111|1100", "1100|0110", "1110|1011"]

# formes réduites des deux classes
FORM_512 = ["0000|0011", "0001|1101", "0110|0000", "1011|1010", "1100|0100"]
FORM_128 = ["0000|1111", "0011|0001", "0101|0100", "1010|0010", "1100|1000"]


@pytest.fixture(scope="module")
def gyni():
    return load_inequality(INEQUALITIES / "gyni.loineq")


@pytest.fixture(scope="module")
def group():
    return list(symmetry_group(GYNI_SCENARIO))


def sample(group, seed, count=12):
    return random.Random(seed).sample(group, count)


class TestGroup:
    def test_orders(self, group):
        assert group_order(GYNI_SCENARIO) == 3072
        assert group_order(Scenario(2, 2, 2)) == 128
        assert len(group) == 3072
        assert len(list(symmetry_group(Scenario(2, 2, 2)))) == 128

    def test_inverse(self, group):
        e = identity(GYNI_SCENARIO)
        for s in sample(group, 1):
            assert compose(s, inverse(s)) == e
            assert compose(inverse(s), s) == e

    def test_compose_applies_right_factor_first(self, gyni, group):
        for s, t in zip(sample(group, 2), sample(group, 3)):
            assert apply_symmetry(gyni, compose(s, t)) == apply_symmetry(apply_symmetry(gyni, t), s)

    def test_images_stay_orthogonal(self, gyni, group):
        for s in sample(group, 4):
            image = apply_symmetry(gyni, s)
            LOInequality(image.scenario, image.events)
            assert is_optimal(image)

    def test_element_checked_against_scenario(self, gyni):
        with pytest.raises(DimensionMismatch):
            apply_symmetry(gyni, identity(Scenario(2, 2, 2)))

    def test_anchored_images_contain_anchor(self, gyni):
        images = anchored_images(gyni)
        assert images
        assert all(0 in image for image in images)
        assert tuple(gyni.events) in images


class TestCanonicalForm:
    def test_invariant_under_group(self, gyni, group):
        normal = canonical_sym(gyni)
        for s in sample(group, 5, count=30):
            assert canonical_sym(apply_symmetry(gyni, s)) == normal

    @pytest.mark.parametrize("name", ["gyni", "prviol", "class_323_1", "class_422_01", "class_422_35"])
    def test_idempotent(self, name):
        normal = canonical_sym(load_inequality(INEQUALITIES / f"{name}.loineq"))
        assert canonical_sym(normal) == normal

    def test_distinct_classes_have_distinct_forms(self):
        first = canonical_sym(load_inequality(INEQUALITIES / "class_422_01.loineq"))
        second = canonical_sym(load_inequality(INEQUALITIES / "class_422_02.loineq"))
        assert len(first) == len(second) == 8
        assert first != second

    def test_candidate_limit(self, gyni):
        with pytest.raises(BudgetExceeded):
            canonical_sym(gyni, limit=1)

    def test_sort_key(self, gyni):
        assert canonical_key(gyni) == (4, gyni.matrix())


class TestQuotient:
    def test_full_context_is_constant(self):
        s = Scenario(2, 2, 2)
        ineq = LOInequality.from_events(s, [f"{a}{b}|10" for a in range(2) for b in range(2)])
        vector = ns_quotient(ineq)
        assert vector.is_constant()
        assert vector.constant == 1

    def test_gyni_is_not_constant(self, gyni):
        assert not ns_quotient(gyni).is_constant()

    def test_orbit_minimum_is_invariant(self, gyni, group):
        key = orbit_min_quotient(ns_quotient(gyni))
        for s in sample(group, 6):
            assert orbit_min_quotient(ns_quotient(apply_symmetry(gyni, s))) == key

    def test_orbit_limit(self, gyni):
        with pytest.raises(BudgetExceeded):
            orbit_min_quotient(ns_quotient(gyni), limit=100)


class TestEnumeration:
    def test_three_parties_two_outcomes(self):
        records = enumerate_classes(GYNI_SCENARIO)
        assert len(records) == 1
        record = records[0]
        assert record.terms == 4
        assert record.ns_value == Fraction(4, 3)
        assert not record.trivial
        gyni = load_inequality(INEQUALITIES / "gyni.loineq")
        assert record.key == orbit_min_quotient(ns_quotient(gyni))

    def test_bipartite_classes_are_trivial(self):
        assert enumerate_classes(Scenario(2, 2, 2)) == []
        kept = enumerate_classes(Scenario(2, 2, 2), keep_trivial=True)
        assert kept
        assert all(record.trivial for record in kept)

    def test_members_count_every_maximal_clique(self):
        s = Scenario(2, 2, 2)
        records = enumerate_classes(s, keep_trivial=True)
        assert sum(record.members for record in records) == len(maximal_cliques(orthogonality_graph(s)))

    @pytest.mark.slow
    def test_three_parties_three_outcomes(self):
        records = enumerate_classes(Scenario(3, 2, 3))
        assert [record.terms for record in records] == [12, 13, 14, 15]

    @pytest.mark.slow
    def test_four_parties(self):
        records = enumerate_classes(Scenario(4, 2, 2))
        assert len(records) == 35
        assert Counter(record.terms for record in records) == {8: 30, 9: 2, 10: 2, 12: 1}


class TestClassify:
    def test_permuted_copies_merge(self, gyni, group):
        images = [apply_symmetry(gyni, s) for s in sample(group, 7, count=5)]
        records = classify([gyni] + images)
        assert len(records) == 1
        assert records[0].members == 6
        assert records[0].ns_value == Fraction(4, 3)

    def test_distinct_classes_stay_apart(self):
        files = ["class_422_01", "class_422_02", "class_422_31"]
        records = classify([load_inequality(INEQUALITIES / f"{name}.loineq") for name in files])
        assert [record.terms for record in records] == [8, 8, 9]

    def test_without_ns_values(self, gyni):
        records = classify([gyni], ns_values=False)
        assert records[0].ns_value is None
        assert not records[0].trivial

    def test_mixed_scenarios(self, gyni):
        prviol = load_inequality(INEQUALITIES / "prviol.loineq")
        with pytest.raises(ScenarioMismatch):
            classify([gyni, prviol])

    def test_empty_input(self):
        assert classify([]) == []

    def test_write_classes(self, tmp_path, gyni):
        records = classify([gyni])
        paths = write_classes(records, tmp_path)
        assert [p.name for p in paths] == ["class_322_1.loineq"]
        text = paths[0].read_text(encoding="utf-8")
        assert text.startswith("# classe 1 : 4 termes, 1 membres, maximum non-signalant 4/3\n")
        assert load_inequality(paths[0]) == records[0].representative

    def test_four_party_table_classes_are_distinct(self):
        table = [load_inequality(INEQUALITIES / f"class_422_{index:02d}.loineq") for index in range(1, 36)]
        records = classify(table, ns_values=False)
        assert len(records) == 35
        assert all(record.members == 1 for record in records)

    @pytest.mark.slow
    def test_four_party_table_matches_enumeration(self):
        table = [load_inequality(INEQUALITIES / f"class_422_{index:02d}.loineq") for index in range(1, 36)]
        keys = {record.key for record in classify(table)}
        assert keys == {record.key for record in enumerate_classes(Scenario(4, 2, 2))}


class TestPRPairViolations:
    @pytest.mark.parametrize("labels", [WITNESS_512, WITNESS_128])
    def test_witnesses_reach_pr_value(self, labels):
        witness = LOInequality.from_events(PR_PAIR, labels)
        assert evaluate(witness, tensor_power(pr_box(), 2)) == Fraction(5, 4)

    def test_two_classes_of_witnesses(self):
        first = LOInequality.from_events(PR_PAIR, WITNESS_512)
        second = LOInequality.from_events(PR_PAIR, WITNESS_128)
        assert canonical_sym(first) != canonical_sym(second)
        assert len(classify([first, second], ns_values=False)) == 2

    @pytest.mark.parametrize("labels, form", [(WITNESS_512, FORM_512), (WITNESS_128, FORM_128)])
    def test_witness_and_form_share_a_class(self, labels, form):
        witness = LOInequality.from_events(PR_PAIR, labels)
        records = classify([witness, LOInequality.from_events(PR_PAIR, form)], ns_values=False)
        assert len(records) == 1
        assert records[0].members == 2

    @pytest.mark.slow
    def test_every_violation_falls_in_two_classes(self):
        verdict = check_lo_k(pr_box(), 2, all_witnesses=True)
        assert len(verdict.witnesses) == 640
        assert {len(witness) for witness, _ in verdict.witnesses} == {5}
        assert {value for _, value in verdict.witnesses} == {Fraction(5, 4)}
        records = classify([witness for witness, _ in verdict.witnesses], ns_values=False)
        assert sorted(record.members for record in records) == [128, 512]
        forms = [LOInequality.from_events(PR_PAIR, labels) for labels in (FORM_512, FORM_128)]
        assert {record.key for record in records} == {record.key for record in classify(forms, ns_values=False)}
