# -*- coding: utf-8 -*-
"""affine 単体テスト"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.affine import (
    AffineElement,
    affine_identity,
    affine_length,
    affine_reflection,
    affine_root,
    ell_u,
    eta_shrunken,
    length_functional,
    length_positive_set,
    parse_affine,
    reduced_length_by_descents,
    translation,
    virtual_dimension,
)
from core.errors import DomainRejection
from core.rootsys import build_root_system


class _Class:
    """nu / defect だけを持つ σ 共役類"""

    def __init__(self, nu, defect=0):
        self.nu = nu
        self.defect = defect


@pytest.fixture
def a2():
    return build_root_system("A2")


class TestAffineAction:

    def test_translation_on_simple_root(self):
        a1 = build_root_system("A1")
        image = translation(a1, (1,)).act(affine_root(a1, (1,), 0))
        assert (image.root, image.level) == ((1,), -2)

    def test_w0_translation(self, a2):
        x = parse_affine(a2, "s1 s2 s1;1,1")
        image = x.act(affine_root(a2, (1, 0), 0))
        assert (image.root, image.level) == ((0, -1), -1)

    def test_reflection_is_involution(self, a2):
        r = affine_reflection(affine_root(a2, (1, 1), 2))
        assert (r * r).is_identity

    def test_reflection_negates_its_root(self, a2):
        a = affine_root(a2, (0, 1), -1)
        image = affine_reflection(a).act(a)
        assert image == -a

    def test_inverse(self, a2):
        x = parse_affine(a2, "s1 s2;3,-1")
        assert (x * x.inverse).is_identity
        assert (x.inverse * x).is_identity

    def test_parse_rejects(self, a2):
        with pytest.raises(DomainRejection) as info:
            parse_affine(a2, "s1 s2")
        assert info.value.code == "bad_affine_element"

    def test_positivity(self, a2):
        assert affine_root(a2, (1, 0), 0).is_positive
        assert not affine_root(a2, (-1, 0), 0).is_positive
        assert affine_root(a2, (-1, 0), 1).is_positive


class TestLengthFunctional:

    def test_identity(self, a2):
        x = affine_identity(a2)
        assert all(length_functional(x, r) == 0 for r in a2.roots)

    def test_w0_rho(self, a2):
        x = parse_affine(a2, "s1 s2 s1;1,1")
        assert length_functional(x, (1, 0)) == 2
        assert length_functional(x, (-1, 0)) == -2


class TestEllU:

    def test_identity(self, a2):
        x = affine_identity(a2)
        assert all(ell_u(x, u) == 0 for u in a2.elements())

    def test_w0_rho(self, a2):
        assert ell_u(parse_affine(a2, "s1 s2 s1;1,1"), a2.w0) == -7

    def test_translation_rho(self, a2):
        assert ell_u(translation(a2, (1, 1)), a2.identity) == -4

    def test_bounded_by_length(self):
        b2 = build_root_system("B2")
        for w in b2.elements():
            x = AffineElement(w, (2, -1))
            lp_inverse = set(length_positive_set(x.inverse))
            for u in b2.elements():
                value = ell_u(x, u)
                assert abs(value) <= affine_length(x)
                assert (value == affine_length(x)) == (u in lp_inverse)


class TestAffineLength:

    def test_identity(self, a2):
        assert affine_length(affine_identity(a2)) == 0

    def test_a1_translation(self):
        a1 = build_root_system("A1")
        assert affine_length(translation(a1, (1,))) == 2

    def test_w0_rho(self, a2):
        assert affine_length(parse_affine(a2, "s1 s2 s1;1,1")) == 7

    def test_w0_large(self, a2):
        assert affine_length(parse_affine(a2, "s1 s2 s1;10,10")) == 43

    def test_finite_part(self, a2):
        for w in a2.elements():
            assert affine_length(AffineElement(w, (0, 0))) == w.length

    @pytest.mark.parametrize("label", ["A2", "B2", "G2"])
    def test_descent_oracle(self, label):
        system = build_root_system(label)
        for w in system.elements():
            for mu in [(0, 0), (1, 0), (-2, 1), (3, -3)]:
                x = AffineElement(w, mu)
                assert reduced_length_by_descents(x) == affine_length(x)

    @settings(max_examples=40, deadline=None)
    @given(
        index=st.integers(min_value=0, max_value=7),
        mu=st.tuples(st.integers(min_value=-3, max_value=3), st.integers(min_value=-3, max_value=3)),
        index2=st.integers(min_value=0, max_value=7),
        mu2=st.tuples(st.integers(min_value=-3, max_value=3), st.integers(min_value=-3, max_value=3)),
    )
    def test_action_associative(self, index, mu, index2, mu2):
        b2 = build_root_system("B2")
        x = AffineElement(b2.elements()[index], mu)
        y = AffineElement(b2.elements()[index2], mu2)
        for a in [affine_root(b2, r, 1) for r in b2.roots]:
            assert (x * y).act(a) == x.act(y.act(a))

    @settings(max_examples=40, deadline=None)
    @given(
        index=st.integers(min_value=0, max_value=5),
        mu=st.tuples(st.integers(min_value=-4, max_value=4), st.integers(min_value=-4, max_value=4)),
    )
    def test_length_parity(self, index, mu):
        a2 = build_root_system("A2")
        x = AffineElement(a2.elements()[index], mu)
        assert (affine_length(x) - x.w.length) % 2 == 0


class TestLengthPositive:

    def test_identity(self, a2):
        assert len(length_positive_set(affine_identity(a2))) == 6

    def test_w0_rho(self, a2):
        assert length_positive_set(parse_affine(a2, "s1 s2 s1;1,1")) == [a2.identity]

    def test_a1_reflection(self):
        a1 = build_root_system("A1")
        assert length_positive_set(parse_affine(a1, "s1;0")) == [a1.identity]

    def test_never_empty(self):
        b2 = build_root_system("B2")
        for w in b2.elements():
            assert length_positive_set(AffineElement(w, (1, -2)))


class TestEtaAndVirtualDimension:

    def test_identity_undefined(self, a2):
        assert eta_shrunken(affine_identity(a2)) is None
        assert virtual_dimension(affine_identity(a2), _Class((0, 0))) is None

    def test_regular_translation(self, a2):
        assert eta_shrunken(translation(a2, (1, 1))).is_identity

    def test_w0_large(self, a2):
        x = parse_affine(a2, "s1 s2 s1;10,10")
        assert virtual_dimension(x, _Class((9, 9))) == 5

    def test_w0_rho(self, a2):
        x = parse_affine(a2, "s1 s2 s1;1,1")
        assert virtual_dimension(x, _Class((0, 0))) == 5
