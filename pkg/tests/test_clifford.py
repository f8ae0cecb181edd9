from collections import Counter

import pytest
from conftest import clifford_elements, qsqrt2, spin_elements
from hypothesis import given, settings
from hypothesis import strategies as st

from spincover.clifford import (
    CliffordElement,
    cl3_to_quaternion,
    embed,
    eps_tilde,
    eta_l_tilde,
    eta_p_tilde,
    quaternion_to_cl3,
    spin4_pair,
    spin4_project,
    spin4_split,
    spin_generator_S,
    twisted_adjoint,
)
from spincover.errors import (
    DimensionMismatch,
    InputError,
    NotInvertible,
    NotSpin,
    NotSpin4,
)
from spincover.exactmatrix import ExactMatrix, rank
from spincover.matgroups import D, closure, eps
from spincover.quaternion import Quaternion, UnitQuaternion
from spincover.scalars import HALF_SQRT2, QSqrt2

quaternions = st.builds(Quaternion, qsqrt2, qsqrt2, qsqrt2, qsqrt2)


# -- quaternions and exact matrices ----------------------------------------------------------------


def test_quaternion_units():
    i, j, k = Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)
    minus_one = Quaternion(-1)
    assert i * i == j * j == k * k == i * j * k == minus_one
    assert i * j == k and j * i == -k
    with pytest.raises(InputError):
        UnitQuaternion(1, 1)


@given(quaternions, quaternions, quaternions)
def test_quaternion_algebra(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert (x * y).norm() == x.norm() * y.norm()
    assert (x * y).conjugate() == y.conjugate() * x.conjugate()
    if not x.norm().is_zero():
        assert x * x.inverse() == Quaternion.one()


def test_exact_matrix_basics():
    m = ExactMatrix.from_ints([[1, 2], [3, 4]])
    assert m.det() == QSqrt2(-2)
    assert (m * m.inverse()).is_identity()
    assert ExactMatrix.from_ints([[0, 1], [1, 0]]).det() == QSqrt2(-1)
    assert m.transpose().rows[0] == (QSqrt2(1), QSqrt2(3))
    assert ExactMatrix.block_diag(D(1), D(2)).nrows == 4
    assert rank([[QSqrt2(1), QSqrt2(2)], [QSqrt2(2), QSqrt2(4)]]) == 1
    with pytest.raises(NotInvertible):
        ExactMatrix.from_ints([[1, 2], [2, 4]]).inverse()
    with pytest.raises(DimensionMismatch):
        ExactMatrix.from_ints([[1, 2]]) * ExactMatrix.from_ints([[1, 2]])
    with pytest.raises(DimensionMismatch):
        ExactMatrix([[QSqrt2(1)], []])


@given(st.integers(-16, 16), st.integers(-16, 16))
def test_rotation_group_law(a, b):
    assert D(a) * D(b) == D(a + b)
    assert D(a).is_orthogonal() and D(a).det() == QSqrt2.one()
    assert D(8).is_identity()


# -- Clifford algebra ------------------------------------------------------------------------------


def test_generator_relations():
    for n in (1, 2, 3, 4):
        for i in range(1, n + 1):
            ei = CliffordElement.blade(n, i)
            assert ei * ei == CliffordElement.scalar(n, -1)
            for j in range(i + 1, n + 1):
                ej = CliffordElement.blade(n, j)
                assert ei * ej == -(ej * ei)
    assert CliffordElement.blade(3, 2, 1) == -CliffordElement.blade(3, 1, 2)
    with pytest.raises(DimensionMismatch):
        CliffordElement.blade(2, 3)
    with pytest.raises(DimensionMismatch):
        CliffordElement.one_of(2) * CliffordElement.one_of(3)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(*(clifford_elements(n) for _ in range(3)))))
def test_ring_laws(xyz):
    x, y, z = xyz
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z
    assert (x * y).reverse() == y.reverse() * x.reverse()
    assert (x * y).grade_involution() == x.grade_involution() * y.grade_involution()
    assert (x * y).clifford_conj() == y.clifford_conj() * x.clifford_conj()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(clifford_elements))
def test_text_round_trip(x):
    assert CliffordElement.parse(x.n, str(x)) == x


def test_parse_errors():
    with pytest.raises(InputError):
        CliffordElement.parse(2, "(1) * e1 - junk")
    with pytest.raises(InputError):
        CliffordElement.parse(2, "e1")


def test_spin_generator_values():
    s2 = spin_generator_S(2)
    assert s2 == CliffordElement.blade(2, 1, 2)
    assert spin_generator_S(1) == CliffordElement(2, {0: HALF_SQRT2, 0b11: HALF_SQRT2})
    assert spin_generator_S(4) == CliffordElement.scalar(2, -1)
    assert spin_generator_S(8) == CliffordElement.one_of(2)
    for k in range(16):
        assert spin_generator_S(k).is_spin()
        assert spin_generator_S(k) * spin_generator_S(-k) == CliffordElement.one_of(2)
        assert twisted_adjoint(spin_generator_S(k)) == D(2 * k)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(spin_elements(n), spin_elements(n))))
def test_twisted_adjoint_properties(xy):
    x, y = xy
    assert x.is_spin() and x.spinor_norm() == x.one()
    assert x * x.inverse() == x.one()
    mx, my = twisted_adjoint(x), twisted_adjoint(y)
    assert mx.is_orthogonal() and mx.det() == QSqrt2.one()
    # rows are images of basis vectors, so products come out reversed
    assert twisted_adjoint(x * y) == my * mx
    assert twisted_adjoint(-x) == mx


def test_not_spin():
    with pytest.raises(NotSpin):
        twisted_adjoint(CliffordElement.blade(2, 1))
    assert not CliffordElement.scalar(2, 2).is_spin()
    assert CliffordElement.blade(3, 1).is_pin()
    with pytest.raises(NotInvertible):
        CliffordElement(2).inverse()


def test_double_cover_of_octahedral_rotations():
    planes = [(1, 2), (2, 3)]
    gens = [embed(spin_generator_S(1), p, 3) for p in planes]
    group = closure(gens)
    assert group.order == 48
    images = Counter(twisted_adjoint(g) for g in group.elements)
    assert len(images) == 24 and set(images.values()) == {2}
    assert closure([eps(1, 2, D(2), 3), eps(2, 3, D(2), 3)]).order == 24


@given(st.integers(-8, 8), st.integers(-8, 8))
def test_embeddings_are_homomorphisms(a, b):
    sa, sb = spin_generator_S(a), spin_generator_S(b)
    for idx in [(1, 2), (3, 1), (2, 4)]:
        assert embed(sa * sb, idx, 4) == embed(sa, idx, 4) * embed(sb, idx, 4)
    assert eps_tilde(3, 4, sa, 4) == eta_p_tilde(a)
    assert eta_l_tilde(a) * eta_l_tilde(b) == eta_l_tilde(a + b)
    with pytest.raises(InputError):
        embed(sa, (1, 1), 3)


def test_eta_l_tilde_is_injective_on_eighth_turns():
    assert len({eta_l_tilde(k) for k in range(8)}) == 8
    assert eta_l_tilde(8) == CliffordElement.one_of(4)


@settings(max_examples=40, deadline=None)
@given(spin_elements(4), spin_elements(4))
def test_spin4_splitting(x, y):
    u, v = spin4_split(x)
    vol = CliffordElement.blade(4, 1, 2, 3, 4)
    assert embed(quaternion_to_cl3(u), (1, 2, 3), 4) + vol * embed(quaternion_to_cl3(v), (1, 2, 3), 4) == x
    lx, rx = spin4_pair(x)
    ly, ry = spin4_pair(y)
    assert spin4_pair(x * y) == (lx * ly, rx * ry)
    assert lx.is_unit() and rx.is_unit()
    assert cl3_to_quaternion(spin4_project(x, "left")) == lx


@given(quaternions, quaternions)
def test_quaternion_to_cl3_is_an_isomorphism(p, q):
    assert quaternion_to_cl3(p * q) == quaternion_to_cl3(p) * quaternion_to_cl3(q)
    assert cl3_to_quaternion(quaternion_to_cl3(p)) == p


def test_spin4_errors():
    with pytest.raises(NotSpin4):
        spin4_split(spin_generator_S(1))
    with pytest.raises(InputError):
        spin4_project(eta_p_tilde(1), "middle")


def test_right_projection_of_rank_two_embeddings():
    for k in range(8):
        assert spin4_project(eta_p_tilde(k), "right") == embed(spin_generator_S(k), (1, 2), 3)
        assert spin4_project(eta_l_tilde(k), "right") == embed(spin_generator_S(k), (2, 3), 3)
