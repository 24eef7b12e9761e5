# -*- coding: utf-8 -*-
"""admtypes 単体テスト"""
import pytest

from core.admtypes import (
    admissible_from_values,
    brute_force_admissible_types,
    enumerate_admissible_types,
    intersection_counts_from_wts,
    intersection_via_types,
    path_to_type,
    semi_infinite_intersection,
    type_dimension,
    type_to_path,
)
from core.affine import AffineElement, affine_identity, ell_u, parse_affine
from core.dbg import LabelledPath
from core.errors import DomainRejection
from core.reforder import enumerate_orders, order_from_reduced_word, pi_gt
from core.rootsys import build_root_system


@pytest.fixture
def a2():
    return build_root_system("A2")


@pytest.fixture
def order(a2):
    # α₁ ≺ α₁+α₂ ≺ α₂
    return order_from_reduced_word(a2, (0, 1, 0))


@pytest.fixture
def gl3_x(a2):
    return parse_affine(a2, "s1 s2 s1;1,1")


class TestAdmissibleFromValues:

    def test_empty(self, a2, order):
        for u in a2.elements():
            tau = admissible_from_values([], u, order)
            assert tau.x.is_identity
            assert tau.cardinality == 0

    def test_cardinality_one(self, a2, order, gl3_x):
        tau = admissible_from_values([(2, -1)], a2.w0, order)
        assert tau.x == gl3_x
        (b,) = tau.affine_roots()
        assert (b.root, b.level) == ((-1, -1), -1)

    def test_level_zero_is_admissible(self, a2, order):
        tau = admissible_from_values([(2, 0)], a2.w0, order)
        assert tau.x == AffineElement(a2.w0, (0, 0))

    def test_sign_condition(self, a2, order):
        with pytest.raises(DomainRejection) as info:
            admissible_from_values([(2, 1)], a2.w0, order)
        assert info.value.code == "not_admissible"
        assert info.value.detail["h"] == 1

    def test_not_increasing(self, a2, order):
        with pytest.raises(DomainRejection) as info:
            admissible_from_values([(2, -1), (1, 0)], a2.w0, order)
        assert info.value.code == "not_increasing"

    def test_index_out_of_range(self, a2, order):
        with pytest.raises(DomainRejection) as info:
            admissible_from_values([(4, 0)], a2.w0, order)
        assert info.value.code == "index_out_of_range"


class TestTypesAndPaths:

    def test_empty_type(self, a2, order):
        tau = admissible_from_values([], a2.w0, order)
        assert type_to_path(tau) == LabelledPath(a2.w0, ())

    def test_single_edge(self, a2, order):
        tau = admissible_from_values([(2, -1)], a2.w0, order)
        path = type_to_path(tau)
        assert path.start == a2.identity
        assert path.edges == ((a2.root_id((1, 1)), 1),)
        assert path.end == a2.w0
        assert path.weight == (1, 1)

    def test_single_edge_back(self, a2, order, gl3_x):
        path = LabelledPath(a2.identity, ((a2.root_id((1, 1)), 1),))
        tau = path_to_type(path, order, 3)
        assert tau.entries == ((2, -1),)
        assert tau.x == gl3_x

    def test_empty_path(self, a2, order):
        tau = path_to_type(LabelledPath(a2.parse_word("s1"), ()), order, 3)
        assert tau.entries == ()
        assert tau.x.is_identity

    def test_not_increasing_path(self, a2, order):
        path = LabelledPath(a2.identity, ((a2.root_id((0, 1)), 0), (a2.root_id((1, 0)), 0)))
        with pytest.raises(DomainRejection) as info:
            path_to_type(path, order, 3)
        assert info.value.code == "not_increasing"


class TestEnumerateAdmissibleTypes:

    def test_identity(self, a2, order):
        for u in a2.elements():
            types = enumerate_admissible_types(affine_identity(a2), u, order, 3)
            assert [t.entries for t in types] == [()]
            assert type_dimension(types[0]) == 0

    def test_gl3(self, a2, order, gl3_x):
        types = enumerate_admissible_types(gl3_x, a2.w0, order, 3)
        assert [t.cardinality for t in types] == [1, 3, 3]
        assert [type_dimension(t) for t in types] == [4, 5, 5]
        assert types[0].entries == ((2, -1),)

    def test_gl3_paths(self, a2, order, gl3_x):
        types = enumerate_admissible_types(gl3_x, a2.w0, order, 3)
        labels = sorted(tuple(m for _, m in type_to_path(t).edges) for t in types)
        assert labels == [(0, 1, 0), (1,), (1, 0, 1)]

    def test_gl3_bounded(self, a2, order, gl3_x):
        types = enumerate_admissible_types(gl3_x, a2.w0, order, 2)
        assert [t.cardinality for t in types] == [1]

    def test_round_trips(self, a2):
        for order in enumerate_orders(a2):
            for u in a2.elements():
                for w in a2.elements():
                    x = AffineElement(w, (1, 2))
                    for tau in enumerate_admissible_types(x, u, order, 3):
                        path = type_to_path(tau)
                        assert path_to_type(path, order, 3) == tau
                        assert type_to_path(path_to_type(path, order, 3)) == path

    def test_brute_force_gl3(self, a2, order, gl3_x):
        found = brute_force_admissible_types(a2.w0, order, 3, 2)
        expected = {t.entries for t in enumerate_admissible_types(gl3_x, a2.w0, order, 3)}
        assert {t.entries for t in found[gl3_x]} == expected

    def test_brute_force_agrees(self, a2):
        bound = 2
        for order in enumerate_orders(a2):
            for u in a2.elements():
                found = brute_force_admissible_types(u, order, 3, bound)
                for x, types in found.items():
                    enumerated = enumerate_admissible_types(x, u, order, 3)
                    within = {t.entries for t in enumerated if all(abs(nu) <= bound for _, nu in t.entries)}
                    assert {t.entries for t in types} == within

    def test_dimension_parity(self):
        b2 = build_root_system("B2")
        order = next(enumerate_orders(b2))
        for u in b2.elements():
            for w in b2.elements():
                for tau in enumerate_admissible_types(AffineElement(w, (1, 1)), u, order, 4):
                    # 奇数なら ConsistencyError
                    assert type_dimension(tau) * 2 == tau.cardinality - ell_u(tau.x, tau.u)


class TestSemiInfiniteIntersection:

    def test_gl3(self, a2):
        u = a2.w0
        x = affine_identity(a2)
        y = parse_affine(a2, "s1 s2 s1;1,1")
        census = semi_infinite_intersection(u, u, x, y)
        assert census.dimension == 5
        assert census.top_count == 2
        assert census.counts_by_dim() == {4: 1, 5: 2}
        assert census.to_dict()["dim"] == 5

    def test_gl3_other_routes(self, a2):
        u = a2.w0
        x = affine_identity(a2)
        y = parse_affine(a2, "s1 s2 s1;1,1")
        assert intersection_via_types(u, u, x, y).counts_by_dim() == {4: 1, 5: 2}
        assert intersection_counts_from_wts(u, u, x, y) == {4: 1, 5: 2}

    def test_same_element(self, a2):
        x = parse_affine(a2, "s2;2,-1")
        for u in a2.elements():
            census = semi_infinite_intersection(u, u, x, x)
            assert census.counts_by_dim() == {0: 1}

    def test_infeasible_weight(self, a2):
        u = a2.w0
        census = semi_infinite_intersection(u, u, parse_affine(a2, "s1 s2 s1;1,1"), affine_identity(a2))
        assert census.pieces == []
        assert census.to_dict()["dim"] == "empty"
        assert census.top_count == 0

    def test_three_routes_agree(self, a2):
        y = parse_affine(a2, "e;1,1")
        for u in a2.elements():
            for v in a2.elements():
                for w in a2.elements():
                    x = AffineElement(w, (0, 1))
                    paths = semi_infinite_intersection(u, v, x, y).counts_by_dim()
                    assert intersection_via_types(u, v, x, y).counts_by_dim() == paths
                    assert intersection_counts_from_wts(u, v, x, y) == paths

    def _orders_ending_in(self, system, g):
        n = system.num_positive - g.length
        return [o for o in enumerate_orders(system) if pi_gt(o, n) == g]

    def test_any_order_with_same_suffix(self, a2):
        xs = [affine_identity(a2), parse_affine(a2, "s1;0,1")]
        ys = [parse_affine(a2, "s1 s2 s1;1,1"), parse_affine(a2, "s2;1,0")]
        for u in a2.elements():
            for v in a2.elements():
                orders = self._orders_ending_in(a2, u.inverse * v)
                assert orders
                for x in xs:
                    for y in ys:
                        expected = semi_infinite_intersection(u, v, x, y).counts_by_dim()
                        for o in orders:
                            assert semi_infinite_intersection(u, v, x, y, o).counts_by_dim() == expected
                            assert intersection_via_types(u, v, x, y, o).counts_by_dim() == expected

    def test_any_order_with_same_suffix_a3(self):
        a3 = build_root_system("A3")
        u = a3.identity
        x = affine_identity(a3)
        y = AffineElement(a3.w0, (1, 1, 1))
        for v in a3.elements():
            orders = self._orders_ending_in(a3, v)
            assert orders
            counts = [semi_infinite_intersection(u, v, x, y, o).counts_by_dim() for o in orders]
            assert all(c == counts[0] for c in counts)

    def test_order_mismatch(self, a2, order):
        # order の最後のルートは α₂ なので π_{≻2} = s2
        with pytest.raises(DomainRejection) as info:
            semi_infinite_intersection(a2.identity, a2.parse_word("s1"), affine_identity(a2), affine_identity(a2), order)
        assert info.value.code == "order_mismatch"
