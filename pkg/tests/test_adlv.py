# -*- coding: utf-8 -*-
"""adlv 単体テスト"""
from fractions import Fraction

import pytest

from core.adlv import (
    adlv_analyze,
    e_multiset,
    generic_newton_superregular,
    hyperspecial_crosscheck,
    kostant_partition,
    make_sigma_class,
    superparabolic_witness,
)
from core.affine import affine_identity, affine_length, length_positive_set, parse_affine
from core.errors import DomainRejection
from core.rootsys import build_root_system


@pytest.fixture
def a2():
    return build_root_system("A2")


@pytest.fixture
def x_large(a2):
    return parse_affine(a2, "s1 s2 s1;10,10")


class TestSigmaClass:

    def test_regular(self, a2):
        b = make_sigma_class(a2, (9, 9))
        assert b.regular
        assert b.defect == 0
        assert b.to_dict() == {"nu": [9, 9], "defect": 0, "regular": True}

    def test_not_regular(self, a2):
        assert not make_sigma_class(a2, (1, 2)).regular

    def test_not_dominant(self, a2):
        with pytest.raises(DomainRejection) as info:
            make_sigma_class(a2, (-1, 0))
        assert info.value.code == "not_dominant"

    def test_dimension_mismatch(self, a2):
        with pytest.raises(DomainRejection) as info:
            make_sigma_class(a2, (1, 1, 1))
        assert info.value.code == "dimension_mismatch"


class TestSuperparabolicWitness:

    def test_regular_translation(self, a2, x_large):
        assert superparabolic_witness(x_large, [], 6) == a2.identity

    def test_identity_full_J(self, a2):
        assert superparabolic_witness(affine_identity(a2), [0, 1], 3) == a2.identity

    def test_identity_empty_J(self, a2):
        assert superparabolic_witness(affine_identity(a2), [], 1) is None

    def test_half_integer_constant(self, a2, x_large):
        assert superparabolic_witness(x_large, [], Fraction(13, 2)) == a2.identity

    def test_too_large_constant(self, a2, x_large):
        # <μ, α₁> = 10 は C = 10 を超えない
        assert superparabolic_witness(x_large, [], 10) is None

    def test_negative_constant(self, a2, x_large):
        with pytest.raises(DomainRejection) as info:
            superparabolic_witness(x_large, [], -1)
        assert info.value.code == "bad_constant"

    def test_constant_not_half_integer(self, a2, x_large):
        with pytest.raises(DomainRejection) as info:
            superparabolic_witness(x_large, [], Fraction(1, 3))
        assert info.value.code == "bad_constant"


class TestEMultiset:

    def test_large_translation(self, a2, x_large):
        b = make_sigma_class(a2, (9, 9))
        assert e_multiset(x_large, b, a2.identity, a2.identity) == [1, 3, 3]

    def test_negative_weight(self, a2, x_large):
        b = make_sigma_class(a2, (20, 20))
        assert e_multiset(x_large, b, a2.identity, a2.identity) == []

    def test_not_length_positive(self, a2, x_large):
        assert length_positive_set(x_large) == [a2.identity]
        b = make_sigma_class(a2, (9, 9))
        with pytest.raises(DomainRejection) as info:
            e_multiset(x_large, b, a2.identity, a2.parse_word("s1"))
        assert info.value.code == "not_length_positive"


class TestAnalyze:

    def test_two_components(self, a2, x_large):
        report = adlv_analyze(x_large, make_sigma_class(a2, (9, 9)))
        assert report.verdict == "nonempty_exact"
        assert report.union == [1, 3, 3]
        assert (report.e, report.d) == (3, 5)
        assert report.dimension == {"kind": "exact", "value": 5}
        assert report.components == {"kind": "exact", "value": 2}
        assert report.superparabolic.J == ()
        assert report.superparabolic.witness == a2.identity

    def test_basic_class(self, a2, x_large):
        report = adlv_analyze(x_large, make_sigma_class(a2, (10, 10)), threads=2)
        assert report.verdict == "nonempty_exact"
        assert report.union == [1, 3]
        assert (report.e, report.d) == (3, 3)
        assert report.components["value"] == 1

    def test_empty(self, a2, x_large):
        report = adlv_analyze(x_large, make_sigma_class(a2, (20, 20)))
        assert report.is_empty
        assert report.e is None and report.d is None
        assert report.to_dict()["verdict"] == "empty"

    def test_to_dict(self, a2, x_large):
        data = adlv_analyze(x_large, make_sigma_class(a2, (9, 9))).to_dict()
        assert data["x"] == "s1 s2 s1;10,10"
        assert data["LP"] == ["e"]
        assert data["superparabolic"]["J"] == []
        assert len(data["E"]) == 6

    def test_threads_do_not_change_result(self, a2, x_large):
        b = make_sigma_class(a2, (9, 9))
        assert adlv_analyze(x_large, b, 1).table == adlv_analyze(x_large, b, 4).table


class TestGenericNewton:

    def test_w0(self, x_large):
        assert generic_newton_superregular(x_large) == (10, 10)

    def test_s1(self, a2):
        assert generic_newton_superregular(parse_affine(a2, "s1;10,10")) == (10, 10)

    def test_generic_class_dimension(self, a2, x_large):
        nu = generic_newton_superregular(x_large)
        report = adlv_analyze(x_large, make_sigma_class(a2, nu))
        assert report.d == affine_length(x_large) - a2.pair(nu, a2.two_rho)
        assert report.components["value"] == 1


class TestKostantPartition:

    @pytest.mark.parametrize("lam, expected", [
        ((0, 0), 1),
        ((-1, 0), 0),
        ((1, 0), 1),
        ((1, 1), 2),
        ((2, 2), 3),
    ])
    def test_a2(self, a2, lam, expected):
        assert kostant_partition(a2, lam) == expected

    def test_a1(self):
        a1 = build_root_system("A1")
        assert kostant_partition(a1, (5,)) == 1


class TestHyperspecial:

    def test_two_components(self, a2):
        out = hyperspecial_crosscheck(a2, (10, 10), make_sigma_class(a2, (9, 9)))
        assert out.ok
        assert (out.kostant, out.expected_dimension) == (2, 5)

    def test_simple_coroot_difference(self, a2):
        out = hyperspecial_crosscheck(a2, (10, 10), make_sigma_class(a2, (10, 9)))
        assert out.ok
        assert (out.kostant, out.expected_dimension) == (1, 4)
        assert out.report.components["value"] == 1

    def test_all_small_differences(self, a2):
        for a in range(4):
            for c in range(4 - a):
                out = hyperspecial_crosscheck(a2, (10, 10), make_sigma_class(a2, (10 - a, 10 - c)), threads=2)
                assert out.ok, out.to_dict()["mismatches"]

    def test_gate(self, a2):
        with pytest.raises(DomainRejection) as info:
            hyperspecial_crosscheck(a2, (10, 10), make_sigma_class(a2, (8, 8)))
        assert info.value.code == "gate_failed"

    def test_mu_not_dominant(self, a2):
        with pytest.raises(DomainRejection) as info:
            hyperspecial_crosscheck(a2, (-1, 2), make_sigma_class(a2, (0, 0)))
        assert info.value.code == "not_dominant"
