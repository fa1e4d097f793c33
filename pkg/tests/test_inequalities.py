"""
Inégalités LO : évaluation, optimalité, LO^k et maximum non-signalant
"""

import itertools
import random
from collections import Counter
from fractions import Fraction

import pytest

from locorth.boxes import deterministic_box, pr_box, random_local_box, random_ns_box, tensor_power, validate
from locorth.capacity import NoisyFamily
from locorth.errors import FormatError, NotACliqueError, ScenarioMismatch, SizeLimitExceeded
from locorth.inequalities import (
    LOInequality,
    check_lo_k,
    complete_to_maximal,
    evaluate,
    from_clique,
    is_optimal,
    load_inequality,
    ns_max,
    ns_optimum,
    parse_inequality,
    save_inequality,
    serialize_inequality,
)
from locorth.inequalities.correlators import coordinate_count, expand_event, expand_functional
from locorth.inequalities.simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, maximize
from locorth.scenario.events import Scenario
from locorth.scenario.graph import orthogonality_graph
from locorth.search import maximal_cliques
from locorth.settings import DATA_DIR

CHSH = Scenario(2, 2, 2)
INEQUALITIES = DATA_DIR / "inequalities"
DATA_FILES = sorted(INEQUALITIES.glob("*.loineq"))


def strategies(scenario: Scenario):
    per_party = list(itertools.product(range(scenario.d), repeat=scenario.m))
    return itertools.product(per_party, repeat=scenario.n)


@pytest.fixture(scope="module")
def gyni():
    return load_inequality(INEQUALITIES / "gyni.loineq")


@pytest.fixture(scope="module")
def prviol():
    return load_inequality(INEQUALITIES / "prviol.loineq")


class TestInequality:
    def test_gyni_is_optimal(self, gyni):
        assert len(gyni) == 4
        assert is_optimal(gyni)

    def test_gyni_on_deterministic_box(self, gyni):
        box = deterministic_box(gyni.scenario, [(0, 0)] * 3)
        assert evaluate(gyni, box) == 1

    def test_prviol_is_not_optimal(self, prviol):
        assert not is_optimal(prviol)
        assert evaluate(prviol, tensor_power(pr_box(), 2)) == Fraction(5, 4)

    def test_ten_term_on_two_pr_boxes(self):
        ten_term = load_inequality(INEQUALITIES / "ten_term.loineq")
        assert is_optimal(ten_term)
        assert evaluate(ten_term, tensor_power(pr_box(), 2)) == Fraction(5, 4)

    def test_evaluate_scenario_mismatch(self, gyni):
        with pytest.raises(ScenarioMismatch):
            evaluate(gyni, pr_box())

    def test_non_orthogonal_events(self):
        with pytest.raises(NotACliqueError) as info:
            LOInequality.from_events(CHSH, ["00|00", "00|11"])
        assert info.value.pair == ("00|00", "00|11")

    def test_events_are_sorted_and_deduplicated(self):
        ineq = LOInequality.from_events(CHSH, ["11|00", "00|00", "00|00"])
        assert ineq.events == (0, 5)
        assert ineq.labels() == ["00|00", "11|00"]
        assert str(ineq) == "P(00|00) + P(11|00) ≤ 1"

    def test_from_clique(self):
        graph = orthogonality_graph(CHSH)
        clique = maximal_cliques(graph)[0]
        ineq = from_clique(graph, clique)
        assert ineq.events == tuple(clique)
        assert is_optimal(ineq)

    def test_from_clique_rejects_non_clique(self):
        graph = orthogonality_graph(CHSH)
        with pytest.raises(NotACliqueError):
            from_clique(graph, [0, CHSH.index_of((0, 0), (1, 1))])

    def test_completions_are_maximal(self, prviol):
        completions = complete_to_maximal(prviol)
        assert completions
        for completion in completions:
            assert is_optimal(completion)
            assert set(prviol.events) <= set(completion.events)
        assert [c.events for c in completions] == sorted(c.events for c in completions)

    def test_prviol_completes_to_ten_term_inequalities(self, prviol):
        completions = complete_to_maximal(prviol)
        assert Counter(len(c) for c in completions) == {10: 30, 8: 1}
        ten_term = load_inequality(INEQUALITIES / "ten_term.loineq")
        family = NoisyFamily.white_noise(pr_box(), 2)
        for q in (Fraction(1), Fraction(3, 4), Fraction(1, 2)):
            box = family.box(q)
            expected = evaluate(ten_term, box)
            for completion in completions:
                if len(completion) == 10:
                    assert evaluate(completion, box) == expected

    def test_completion_of_maximal_inequality(self, gyni):
        assert complete_to_maximal(gyni) == [gyni]


class TestLOk:
    def test_pr_satisfies_lo1(self):
        verdict = check_lo_k(pr_box(), 1)
        assert verdict.satisfied
        assert verdict.witness is None
        assert verdict.describe() == "SATISFIED LO^1"

    def test_pr_violates_lo2(self):
        verdict = check_lo_k(pr_box(), 2)
        assert not verdict.satisfied
        assert verdict.value == Fraction(5, 4)
        assert len(verdict.witness) == 5
        assert verdict.describe() == "VIOLATED value 5/4, 5 terms"
        assert evaluate(verdict.witness, tensor_power(pr_box(), 2)) == Fraction(5, 4)

    def test_all_witnesses(self):
        verdict = check_lo_k(pr_box(), 2, all_witnesses=True)
        assert not verdict.satisfied
        assert len(verdict.witnesses) > 1
        assert all(value > 1 for _, value in verdict.witnesses)

    def test_random_bipartite_ns_boxes_satisfy_lo1(self):
        rng = random.Random(5)
        for _ in range(50):
            box = random_ns_box(CHSH, rng)
            assert validate(box).ok
            assert check_lo_k(box, 1).satisfied

    def test_gyni_holds_on_local_boxes(self, gyni):
        rng = random.Random(13)
        for _ in range(20):
            assert evaluate(gyni, random_local_box(gyni.scenario, rng)) <= 1

    @pytest.mark.parametrize("path", DATA_FILES, ids=lambda path: path.stem)
    def test_local_bound_on_data_files(self, path):
        ineq = load_inequality(path)
        s = ineq.scenario
        assert max(evaluate(ineq, deterministic_box(s, strategy)) for strategy in strategies(s)) <= 1
        rng = random.Random(path.stem)
        for _ in range(5):
            assert evaluate(ineq, random_local_box(s, rng)) <= 1

    def test_local_boxes_satisfy_lo2(self):
        rng = random.Random(17)
        for _ in range(3):
            assert check_lo_k(random_local_box(CHSH, rng), 2).satisfied


class TestNSMax:
    def test_gyni(self, gyni):
        optimum = ns_optimum(gyni)
        assert optimum.value == Fraction(4, 3)
        assert validate(optimum.box).ok
        assert evaluate(gyni, optimum.box) == Fraction(4, 3)

    def test_full_context(self):
        ineq = LOInequality.from_events(CHSH, ["00|01", "01|01", "10|01", "11|01"])
        assert ns_max(ineq) == 1

    def test_prviol_reaches_pr_value(self, prviol):
        assert ns_max(prviol) >= Fraction(5, 4)

    def test_bipartite_cliques_bound_ns_boxes(self):
        graph = orthogonality_graph(CHSH)
        rng = random.Random(31)
        boxes = [random_ns_box(CHSH, rng) for _ in range(20)]
        for clique in maximal_cliques(graph):
            ineq = from_clique(graph, clique)
            assert ns_max(ineq) <= 1
            assert all(evaluate(ineq, box) <= 1 for box in boxes)

    @pytest.mark.parametrize("name", ["gyni", "prviol", "ten_term", "class_422_01", "class_422_35"])
    def test_ns_max_bounds_sampled_boxes(self, name):
        ineq = load_inequality(INEQUALITIES / f"{name}.loineq")
        bound = ns_max(ineq)
        rng = random.Random(name)
        for _ in range(50):
            assert evaluate(ineq, random_ns_box(ineq.scenario, rng)) <= bound

    def test_variable_limit(self, gyni):
        with pytest.raises(SizeLimitExceeded):
            ns_max(gyni, limit=10)

    def test_collins_gisin_expansion(self):
        assert coordinate_count(CHSH) == 9
        # P(00|00) est une coordonnée ; P(11|00) = 1 − P_A(0|0) − P_B(0|0) + P(00|00)
        assert expand_event(CHSH, CHSH.index_of((0, 0), (0, 0))) == {4: 1}
        assert expand_event(CHSH, CHSH.index_of((1, 1), (0, 0))) == {0: 1, 1: -1, 3: -1, 4: 1}
        context = [CHSH.index_of((a, b), (0, 0)) for a in range(2) for b in range(2)]
        assert expand_functional(CHSH, context) == {0: 1}


class TestSimplex:
    def test_optimum(self):
        result = maximize(2, {0: 1, 1: 1}, [{0: 1, 1: 2}, {0: 1}], [4, 1])
        assert result.status == OPTIMAL
        assert result.value == Fraction(5, 2)
        assert result.solution == {0: 1, 1: Fraction(3, 2)}

    def test_unbounded(self):
        assert maximize(2, {0: 1}, [{1: 1}], [1]).status == UNBOUNDED

    def test_infeasible(self):
        assert maximize(1, {0: 1}, [{0: 1}], [-1]).status == INFEASIBLE


class TestStorage:
    def test_file_with_several_events_per_line(self, gyni):
        text = "scenario 3 2 2\n000|000 110|011\n011|101 101|110\n"
        assert parse_inequality(text) == gyni

    def test_non_orthogonal_reports_line(self):
        with pytest.raises(FormatError) as info:
            parse_inequality("scenario 2 2 2\n00|00\n# commentaire\n00|11\n")
        assert info.value.line == 4

    def test_repeated_event(self):
        with pytest.raises(FormatError) as info:
            parse_inequality("scenario 2 2 2\n00|00\n00|00\n")
        assert info.value.line == 3

    def test_bad_header(self):
        with pytest.raises(FormatError) as info:
            parse_inequality("box 2 2 2\n00|00\n")
        assert info.value.line == 1

    def test_save_with_comment(self, tmp_path, gyni):
        path = tmp_path / "out" / "gyni.loineq"
        save_inequality(gyni, path, comment="GYNI")
        text = path.read_text(encoding="utf-8")
        assert text.startswith("# GYNI\nscenario 3 2 2\n")
        assert load_inequality(path) == gyni
        assert serialize_inequality(gyni).splitlines()[1:] == gyni.labels()

    @pytest.mark.parametrize("name, terms", [("class_323_1", 12), ("class_323_2", 13), ("class_323_3", 14), ("class_323_4", 15)])
    def test_three_outcome_classes(self, name, terms):
        ineq = load_inequality(INEQUALITIES / f"{name}.loineq")
        assert len(ineq) == terms
        assert is_optimal(ineq)

    @pytest.mark.parametrize("path", [p for p in DATA_FILES if p.stem != "prviol"], ids=lambda path: path.stem)
    def test_data_files_are_maximal(self, path):
        assert is_optimal(load_inequality(path))

    def test_four_party_table(self):
        table = [load_inequality(path) for path in DATA_FILES if path.stem.startswith("class_422_")]
        assert len(table) == 35
        assert {ineq.scenario for ineq in table} == {Scenario(4, 2, 2)}
        assert Counter(len(ineq) for ineq in table) == {8: 30, 9: 2, 10: 2, 12: 1}
