# -*- coding: utf-8 -*-
"""reforder 単体テスト"""
import pytest

from core.errors import DomainRejection
from core.reforder import (
    canonical_order,
    count_reduced_words,
    enumerate_orders,
    is_reflection_order,
    order_from_reduced_word,
    order_from_roots,
    order_with_suffix,
    parse_order,
    pi_gt,
)
from core.rootsys import build_root_system


@pytest.fixture
def a2():
    return build_root_system("A2")


class TestOrderFromReducedWord:

    def test_s1_s2_s1(self, a2):
        order = order_from_reduced_word(a2, (0, 1, 0))
        assert order.root_vectors() == [[1, 0], [1, 1], [0, 1]]

    def test_s2_s1_s2(self, a2):
        order = order_from_reduced_word(a2, (1, 0, 1))
        assert order.root_vectors() == [[0, 1], [1, 1], [1, 0]]

    def test_a1(self):
        a1 = build_root_system("A1")
        assert order_from_reduced_word(a1, (0,)).root_vectors() == [[1]]

    def test_not_reduced(self, a2):
        with pytest.raises(DomainRejection) as info:
            order_from_reduced_word(a2, (0, 0, 1))
        assert info.value.code == "not_reduced"
        assert info.value.detail["position"] == 2

    def test_not_longest(self, a2):
        with pytest.raises(DomainRejection) as info:
            order_from_reduced_word(a2, (0, 1))
        assert info.value.code == "not_longest"


class TestEnumerateOrders:

    @pytest.mark.parametrize("label, count", [("A1", 1), ("A2", 2), ("B2", 2), ("G2", 2), ("A3", 16)])
    def test_counts(self, label, count):
        system = build_root_system(label)
        orders = list(enumerate_orders(system))
        assert len(orders) == count
        assert count_reduced_words(system.w0) == count

    def test_all_convex(self):
        b2 = build_root_system("B2")
        for order in enumerate_orders(b2):
            assert is_reflection_order(b2, order.roots)

    def test_size_cap(self):
        with pytest.raises(DomainRejection) as info:
            list(enumerate_orders(build_root_system("A3"), max_rank=2))
        assert info.value.code == "size_cap"

    def test_b3_reduced_words(self):
        assert count_reduced_words(build_root_system("B3").w0) == 42


class TestIsReflectionOrder:

    def test_convex(self, a2):
        assert is_reflection_order(a2, [(1, 0), (1, 1), (0, 1)])

    def test_not_convex(self, a2):
        assert not is_reflection_order(a2, [(1, 0), (0, 1), (1, 1)])

    def test_a1(self):
        assert is_reflection_order(build_root_system("A1"), [(1,)])

    def test_not_a_permutation(self, a2):
        with pytest.raises(DomainRejection) as info:
            is_reflection_order(a2, [(1, 0), (1, 0), (0, 1)])
        assert info.value.code == "not_a_permutation"

    def test_order_from_roots_rejects_nonconvex(self, a2):
        with pytest.raises(DomainRejection) as info:
            order_from_roots(a2, [(1, 0), (0, 1), (1, 1)])
        assert info.value.code == "not_a_reflection_order"


class TestPiGt:

    def test_bounds(self, a2):
        order = canonical_order(a2)
        assert pi_gt(order, 3).is_identity
        assert pi_gt(order, 0) == a2.w0

    def test_n2(self, a2):
        order = order_from_reduced_word(a2, (0, 1, 0))
        assert pi_gt(order, 2) == a2.parse_word("s2")

    def test_out_of_range(self, a2):
        with pytest.raises(DomainRejection) as info:
            pi_gt(canonical_order(a2), 4)
        assert info.value.code == "index_out_of_range"

    def test_suffix_lengths(self):
        for label in ("B2", "G2", "A3"):
            system = build_root_system(label)
            for order in enumerate_orders(system):
                for n in range(len(order) + 1):
                    assert pi_gt(order, n).length == len(order) - n
                break


class TestOrderWithSuffix:

    def test_identity(self, a2):
        order, n = order_with_suffix(a2.identity)
        assert n == 3
        assert pi_gt(order, n).is_identity

    def test_w0(self, a2):
        order, n = order_with_suffix(a2.w0)
        assert n == 0

    def test_s2(self, a2):
        order, n = order_with_suffix(a2.parse_word("s2"))
        assert order.root_vectors() == [[1, 0], [1, 1], [0, 1]]
        assert n == 2

    def test_every_element(self):
        for label in ("B2", "G2", "A3"):
            system = build_root_system(label)
            for g in system.elements():
                order, n = order_with_suffix(g)
                assert pi_gt(order, n) == g


class TestOrderTransforms:

    def test_reversed_and_transported(self):
        for label in ("A2", "B2", "G2"):
            system = build_root_system(label)
            for order in enumerate_orders(system):
                assert is_reflection_order(system, order.reversed().roots)
                assert is_reflection_order(system, order.transported().roots)

    def test_roots_roundtrip(self):
        system = build_root_system("A3")
        for order in enumerate_orders(system):
            assert order_from_roots(system, order.roots) == order


class TestParseOrder:

    def test_empty_is_canonical(self, a2):
        assert parse_order(a2, None) == canonical_order(a2)
        assert parse_order(a2, "") == canonical_order(a2)

    def test_word(self, a2):
        assert parse_order(a2, "s2 s1 s2").root_vectors() == [[0, 1], [1, 1], [1, 0]]

    def test_roots(self, a2):
        assert parse_order(a2, "1,0;1,1;0,1").format_word() == "s1 s2 s1"

    def test_bad_letter(self, a2):
        with pytest.raises(DomainRejection) as info:
            parse_order(a2, "s1 s4 s1")
        assert info.value.code == "bad_word"
