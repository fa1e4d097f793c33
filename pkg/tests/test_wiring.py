"""
Câblages : boîte câblée, protocoles usuels, développement des inégalités
"""

import itertools
import random
from fractions import Fraction

import pytest

from locorth.boxes import LHVModel, pr_box, pr_box_variant, random_local_box, tensor_power, uniform_box, validate
from locorth.errors import ArityMismatch, FormatError, ProtocolError, ScenarioMismatch
from locorth.inequalities import LOInequality, check_lo_k, evaluate, load_inequality
from locorth.scenario.events import Scenario, are_orthogonal
from locorth.scenario.graph import orthogonality_graph
from locorth.settings import DATA_DIR
from locorth.wiring import (
    StochasticWiring,
    WiringGroup,
    WiringProtocol,
    coarse_graining_protocol,
    expand_inequality,
    identity_protocol,
    load_wiring,
    parse_wiring,
    random_protocol,
    restrict_settings_protocol,
    save_wiring,
    stochastic_wire,
    wire,
)

CHSH = Scenario(2, 2, 2)

NOT_GATE = """\
# la partie 2 inverse sa sortie
wiring r=1 base 2 2 2
group 0: parties 0 inputs 2 outputs 2
group 1: parties 1 inputs 2 outputs 2
order 0 0 - 0
order 0 1 - 0
input 0 0 - 0
input 0 1 - 1
output 0 0 0 0
output 0 0 1 1
output 0 1 0 0
output 0 1 1 1
order 1 0 - 1
order 1 1 - 1
input 1 0 - 0
input 1 1 - 1
output 1 0 0 1
output 1 0 1 0
output 1 1 0 1
output 1 1 1 0
"""


class TestUsualProtocols:
    def test_identity(self):
        assert wire(pr_box(), identity_protocol(CHSH)) == pr_box()

    def test_restrict_settings(self):
        wired = wire(pr_box(), restrict_settings_protocol(CHSH, [0]))
        assert wired.scenario == Scenario(2, 1, 2)
        assert wired["00|00"] == Fraction(1, 2)
        assert wired["11|00"] == Fraction(1, 2)
        assert validate(wired).ok

    def test_restrict_to_unknown_setting(self):
        with pytest.raises(ProtocolError):
            restrict_settings_protocol(CHSH, [2])

    def test_coarse_graining(self):
        base = Scenario(2, 2, 3)
        wired = wire(uniform_box(base), coarse_graining_protocol(base, (0, 1, 1)))
        assert wired.scenario == Scenario(2, 2, 2)
        assert wired["00|01"] == Fraction(1, 9)
        assert wired["01|01"] == Fraction(2, 9)
        assert wired["11|01"] == Fraction(4, 9)

    def test_coarse_graining_needs_consecutive_outputs(self):
        with pytest.raises(ProtocolError):
            coarse_graining_protocol(Scenario(2, 2, 3), (0, 2, 2))


def random_maximal_clique(graph, rng: random.Random) -> tuple:
    """Clique maximale obtenue en parcourant les sommets dans un ordre aléatoire"""
    order = list(range(graph.vertex_count))
    rng.shuffle(order)
    chosen, common = [], graph.full_mask
    for v in order:
        if common >> v & 1:
            chosen.append(v)
            common &= graph.adjacency[v]
    return tuple(sorted(chosen))


class TestWire:
    def test_wired_local_boxes_stay_local(self):
        rng = random.Random(2024)
        for _ in range(200):
            box = random_local_box(CHSH, rng)
            groups = rng.choice([2, 3])
            protocol = random_protocol(CHSH, 2, rng, groups=groups, dynamic=rng.random() < 0.5)
            wired = wire(box, protocol)
            assert wired.scenario == Scenario(groups, 2, 2)
            assert validate(wired).ok
            assert check_lo_k(wired, 1).satisfied

    @pytest.mark.parametrize("seed", range(4))
    def test_wired_pr_boxes_are_valid(self, seed):
        protocol = random_protocol(CHSH, 2, random.Random(seed), groups=2, dynamic=seed % 2 == 0)
        assert validate(wire(pr_box(), protocol)).ok

    def test_expanded_inequalities_match_wired_values(self):
        rng = random.Random(21)
        two_pr = tensor_power(pr_box(), 2)
        graphs = {}
        for _ in range(100):
            protocol = random_protocol(CHSH, 2, rng, groups=rng.choice([2, 3]), dynamic=rng.random() < 0.5)
            wired = protocol.wired_scenario
            graph = graphs.setdefault(wired, orthogonality_graph(wired))
            inequality = LOInequality(wired, random_maximal_clique(graph, rng))
            expanded = expand_inequality(inequality, protocol)
            assert expanded.scenario == Scenario(4, 2, 2)
            events = [expanded.scenario.decode(index) for index in expanded.events]
            assert all(are_orthogonal(expanded.scenario, e, f) for e, f in itertools.combinations(events, 2))
            assert evaluate(inequality, wire(pr_box(), protocol)) == evaluate(expanded, two_pr)

    def test_gyni_on_parties_grouped_in_pairs(self):
        gyni = load_inequality(DATA_DIR / "inequalities" / "gyni.loineq")
        rng = random.Random(6)
        three_pr = tensor_power(pr_box(), 3)
        for _ in range(3):
            parties = list(range(6))
            rng.shuffle(parties)
            pairs = [parties[0:2], parties[2:4], parties[4:6]]
            protocol = random_protocol(CHSH, 3, rng, partition=pairs)
            assert [len(group.parties) for group in protocol.groups] == [2, 2, 2]
            expanded = expand_inequality(gyni, protocol)
            assert expanded.scenario == Scenario(6, 2, 2)
            assert evaluate(gyni, wire(pr_box(), protocol)) == evaluate(expanded, three_pr)

    def test_expand_scenario_mismatch(self):
        gyni = load_inequality(DATA_DIR / "inequalities" / "gyni.loineq")
        with pytest.raises(ScenarioMismatch):
            expand_inequality(gyni, identity_protocol(CHSH))

    def test_box_scenario_mismatch(self):
        with pytest.raises(ScenarioMismatch):
            wire(uniform_box(Scenario(3, 2, 2)), identity_protocol(CHSH))

    def test_groups_with_different_arities(self):
        groups = (identity_protocol(CHSH).groups[0], restrict_settings_protocol(CHSH, [0]).groups[1])
        with pytest.raises(ArityMismatch):
            wire(pr_box(), WiringProtocol(CHSH, 1, groups))

    def test_groups_must_cover_every_party(self):
        with pytest.raises(ProtocolError):
            wire(pr_box(), WiringProtocol(CHSH, 1, identity_protocol(CHSH).groups[:1]))

    def test_incomplete_tables(self):
        group = WiringGroup((0, 1), 2, 2, {(0, ()): 0}, {(0, ()): 0}, {})
        with pytest.raises(ProtocolError):
            WiringProtocol(CHSH, 1, (group,)).check()


SHARED_BIT = LHVModel(Scenario(1, 2, 2), (Fraction(1, 2), Fraction(1, 2)), (((0, 0),), ((1, 1),)))


class TestStochasticWiring:
    def test_shared_random_bit_gives_uniform_box(self):
        extended = Scenario(3, 2, 2)
        first = WiringGroup(
            (0,), 2, 2,
            {(y, ()): 0 for y in range(2)},
            {(y, ()): y for y in range(2)},
            {(y, (a,)): a for y in range(2) for a in range(2)},
        )
        # la partie 2 fournit un bit aléatoire c ; la sortie vaut b ⊕ c
        order, settings, output = {}, {}, {}
        for y in range(2):
            order[(y, ())] = 2
            settings[(y, ())] = 0
            for c in range(2):
                order[(y, (c,))] = 1
                settings[(y, (c,))] = y
                for b in range(2):
                    output[(y, (c, b))] = b ^ c
        second = WiringGroup((1, 2), 2, 2, order, settings, output)
        wiring = StochasticWiring(SHARED_BIT, WiringProtocol(extended, 1, (first, second)), 1)
        assert wiring.local_box == uniform_box(Scenario(1, 2, 2))
        assert stochastic_wire(pr_box(), wiring) == uniform_box(CHSH)

    @pytest.mark.parametrize("local", [pr_box(), uniform_box(Scenario(1, 2, 2))])
    def test_shared_randomness_must_be_a_local_model(self, local):
        with pytest.raises(ProtocolError):
            StochasticWiring(local, identity_protocol(Scenario(4, 2, 2)), 1)

    def test_at_least_one_copy(self):
        with pytest.raises(ProtocolError):
            StochasticWiring(SHARED_BIT, identity_protocol(Scenario(3, 2, 2)), 0)


class TestStorage:
    def test_not_gate(self):
        protocol = parse_wiring(NOT_GATE)
        assert wire(pr_box(), protocol) == pr_box_variant(0, 0, 1)

    def test_save_and_load(self, tmp_path):
        protocol = random_protocol(CHSH, 2, random.Random(3), groups=2)
        path = tmp_path / "random.wiring"
        save_wiring(protocol, path)
        assert load_wiring(path) == protocol

    def test_bad_header(self):
        with pytest.raises(FormatError) as info:
            parse_wiring("wiring base 2 2 2\n")
        assert info.value.line == 1

    def test_table_before_group(self):
        with pytest.raises(FormatError) as info:
            parse_wiring("wiring r=1 base 2 2 2\norder 0 0 - 0\n")
        assert info.value.line == 2

    def test_repeated_entry(self):
        text = NOT_GATE.replace("order 0 1 - 0\n", "order 0 0 - 0\n")
        with pytest.raises(FormatError) as info:
            parse_wiring(text)
        assert info.value.line == 6
