"""
Scénarios, encodage des événements et graphes d'orthogonalité
"""

import networkx as nx
import pytest

from locorth.errors import DimensionMismatch, FormatError, ScenarioError
from locorth.scenario.events import Event, Scenario, are_orthogonal
from locorth.scenario.graph import (
    circulant_graph,
    complement,
    complete_graph,
    conormal_product,
    edgeless_graph,
    induced_subgraph,
    orthogonality_graph,
    orthogonality_subgraph,
    strong_power,
    strong_product,
)
from locorth.boxes.box import pr_box

CHSH = Scenario(2, 2, 2)


class TestEncoding:
    def test_first_event_is_zero(self):
        assert CHSH.encode(Event((0, 0), (0, 0))) == 0

    def test_digits_put_setting_before_outcome(self):
        # partie 1 : 1 + 2·0, partie 2 : 0 + 2·1
        assert CHSH.index_of((1, 0), (0, 1)) == 6
        assert CHSH.decode(6) == Event((1, 0), (0, 1))

    def test_event_count(self):
        assert CHSH.event_count == 16
        assert Scenario(3, 2, 3).event_count == 216
        assert Scenario(4, 2, 2).event_count == 256

    def test_every_index_decodes_back(self):
        s = Scenario(3, 2, 3)
        assert all(s.encode(s.decode(index)) == index for index in range(s.event_count))

    def test_invalid_scenario(self):
        with pytest.raises(ScenarioError):
            Scenario(2, 2, 1)
        with pytest.raises(ScenarioError):
            Scenario(0, 2, 2)

    def test_event_outside_scenario(self):
        with pytest.raises(DimensionMismatch):
            CHSH.encode(Event((2, 0), (0, 0)))
        with pytest.raises(DimensionMismatch):
            CHSH.decode(16)

    def test_parse_event(self):
        assert Scenario(3, 2, 2).parse_event("110|011") == Event((1, 1, 0), (0, 1, 1))
        assert Scenario(3, 2, 2).parse_event("110|011").label() == "110|011"

    @pytest.mark.parametrize("text", ["110-011", "11|011", "1a0|011", "120|011", "1²0|011", "110|0١1"])
    def test_parse_event_rejects(self, text):
        with pytest.raises(FormatError):
            Scenario(3, 2, 2).parse_event(text, line=4)


class TestOrthogonality:
    def test_same_setting_different_outcome(self):
        assert are_orthogonal(CHSH, Event((0, 0), (0, 0)), Event((1, 0), (0, 0)))
        assert are_orthogonal(CHSH, Event((0, 0), (0, 0)), Event((1, 1), (0, 1)))

    def test_different_settings_everywhere(self):
        assert not are_orthogonal(CHSH, Event((0, 0), (0, 0)), Event((0, 0), (1, 1)))

    def test_event_not_orthogonal_to_itself(self):
        e = Event((1, 0), (1, 1))
        assert not are_orthogonal(CHSH, e, e)

    @pytest.mark.parametrize("scenario", [Scenario(2, 2, 2), Scenario(3, 2, 2), Scenario(2, 3, 3)])
    def test_graph_is_regular(self, scenario):
        graph = orthogonality_graph(scenario)
        # non orthogonaux : même chiffre ou autre réglage, partie par partie
        expected = scenario.event_count - (1 + (scenario.m - 1) * scenario.d) ** scenario.n
        assert {graph.degree(v) for v in range(graph.vertex_count)} == {expected}

    def test_chsh_graph(self):
        graph = orthogonality_graph(CHSH)
        assert graph.vertex_count == 16
        assert graph.edge_count() == 56
        assert graph.label(6) == "10|01"

    def test_graph_agrees_with_pairwise_check(self):
        s = Scenario(2, 2, 3)
        graph = orthogonality_graph(s)
        for u in range(0, s.event_count, 5):
            for v in range(s.event_count):
                if u != v:
                    assert graph.has_edge(u, v) == are_orthogonal(s, s.decode(u), s.decode(v))

    def test_subgraph_matches_induced(self):
        events = pr_box().support()
        direct = orthogonality_subgraph(CHSH, events)
        induced = induced_subgraph(orthogonality_graph(CHSH), events)
        assert direct.adjacency == induced.adjacency
        assert direct.labels == induced.labels

    def test_vertex_limit(self):
        from locorth.errors import SizeLimitExceeded

        with pytest.raises(SizeLimitExceeded):
            orthogonality_graph(Scenario(3, 2, 2), limit=10)


class TestProducts:
    def test_pr_non_orthogonality_graph_is_circulant(self):
        box = pr_box()
        graph = complement(orthogonality_subgraph(CHSH, box.support()))
        assert nx.is_isomorphic(graph.to_networkx(), circulant_graph(8, [1, 2]).to_networkx())

    def test_strong_product_matches_networkx(self):
        c5 = circulant_graph(5, [1])
        ours = strong_product(c5, c5).to_networkx()
        oracle = nx.strong_product(c5.to_networkx(), c5.to_networkx())
        assert ours.number_of_edges() == oracle.number_of_edges()
        assert nx.is_isomorphic(ours, oracle)

    def test_strong_product_vertex_numbering(self):
        g = circulant_graph(4, [1])
        h = complete_graph(3)
        product = strong_product(g, h)
        # (0, 0) ~ (1, 2) : 0~1 dans g, 0~2 dans h
        assert product.has_edge(0 * 3 + 0, 1 * 3 + 2)
        # (0, 0) et (2, 0) : 0 et 2 non adjacents dans g
        assert not product.has_edge(0, 2 * 3)

    def test_strong_power(self):
        assert strong_power(circulant_graph(5, [1]), 1).vertex_count == 5
        assert strong_power(circulant_graph(5, [1]), 3).vertex_count == 125

    def test_conormal_product(self):
        product = conormal_product(complete_graph(2), edgeless_graph(2))
        assert product.edge_count() == 4
        oracle = nx.lexicographic_product(complete_graph(2).to_networkx(), nx.empty_graph(2))
        assert nx.is_isomorphic(product.to_networkx(), oracle)

    def test_complement_of_complete_is_edgeless(self):
        assert complement(complete_graph(6)).edge_count() == 0
