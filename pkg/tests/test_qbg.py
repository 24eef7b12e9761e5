# -*- coding: utf-8 -*-
"""qbg 単体テスト"""
import pytest

from core.dbg import box_window
from core.errors import DomainRejection
from core.qbg import build_qbg, edge_respects_label_bound, qbg_dbg_compare, qbg_distance_weight
from core.rootsys import build_root_system


def _edge(graph, source, target):
    return next((e for e in graph.edges if e.source == source and e.target == target), None)


class TestBuildQbg:

    def test_a1(self):
        a1 = build_root_system("A1")
        graph = build_qbg(a1)
        s = a1.parse_word("s1")
        up = _edge(graph, a1.identity, s)
        down = _edge(graph, s, a1.identity)
        assert (up.kind, up.weight) == ("up", (0,))
        assert (down.kind, down.weight) == ("down", (1,))
        assert len(graph.edges) == 2

    def test_a2_highest_root(self):
        a2 = build_root_system("A2")
        graph = build_qbg(a2)
        down = _edge(graph, a2.w0, a2.identity)
        assert down.kind == "down"
        assert down.rid == a2.root_id((1, 1))
        assert down.weight == (1, 1)
        assert _edge(graph, a2.identity, a2.w0) is None

    @pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
    def test_strongly_connected(self, label):
        assert build_qbg(build_root_system(label)).is_strongly_connected()

    @pytest.mark.parametrize("label", ["A2", "B2", "G2"])
    def test_edges_are_labelled_dbg_edges(self, label):
        graph = build_qbg(build_root_system(label))
        assert all(edge_respects_label_bound(e) for e in graph.edges)

    def test_to_dict(self):
        data = build_qbg(build_root_system("A1")).to_dict()
        assert data["vertices"] == ["e", "s1"]
        assert {e["kind"] for e in data["edges"]} == {"up", "down"}


class TestDistanceWeight:

    def test_same_vertex(self):
        a2 = build_root_system("A2")
        for u in a2.elements():
            assert qbg_distance_weight(u, u) == (0, (0, 0))

    def test_up_chain(self):
        a2 = build_root_system("A2")
        assert qbg_distance_weight(a2.identity, a2.w0) == (3, (0, 0))

    def test_single_down_edge(self):
        a2 = build_root_system("A2")
        assert qbg_distance_weight(a2.w0, a2.identity) == (1, (1, 1))

    @pytest.mark.parametrize("label", ["B2", "G2", "A3"])
    def test_weight_well_defined(self, label):
        # 最短道の重みが一意でなければ ConsistencyError になる
        system = build_root_system(label)
        for u in system.elements():
            for v in system.elements():
                d, wt = qbg_distance_weight(u, v)
                assert d >= 0
                assert all(c >= 0 for c in wt)


class TestCompare:

    def test_trivial(self):
        a2 = build_root_system("A2")
        report = qbg_dbg_compare(a2.identity, a2.identity, frozenset({(0, 0)}))
        assert report.ok
        assert report.checked == 1

    def test_identity_to_w0(self):
        a2 = build_root_system("A2")
        report = qbg_dbg_compare(a2.identity, a2.w0, frozenset({(0, 0)}))
        assert report.ok
        assert (report.distance, report.weight) == (3, (0, 0))
        assert report.checked == 2

    def test_window_must_contain_weight(self):
        a2 = build_root_system("A2")
        with pytest.raises(DomainRejection) as info:
            qbg_dbg_compare(a2.w0, a2.identity, frozenset({(0, 0)}))
        assert info.value.code == "window_misses_weight"

    @pytest.mark.parametrize("label", ["A2", "B2"])
    def test_exhaustive(self, label):
        system = build_root_system(label)
        for u in system.elements():
            for v in system.elements():
                _, wt = qbg_distance_weight(u, v)
                corner = tuple(max(a, b) for a, b in zip(system.two_rho_check, wt))
                report = qbg_dbg_compare(u, v, box_window(corner))
                assert report.ok, report.to_dict()
