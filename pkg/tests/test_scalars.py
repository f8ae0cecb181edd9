from fractions import Fraction

import pytest
from conftest import fractions, qsqrt2
from hypothesis import given
from hypothesis import strategies as st

from spincover.errors import InputError
from spincover.scalars import HALF_SQRT2, QSqrt2, QZeta8, cos_eighth, sin_eighth

qzeta8 = st.builds(QZeta8, fractions, fractions, fractions, fractions)


def test_product_rule():
    # (a + b sqrt2)(c + d sqrt2) = (ac + 2bd) + (ad + bc) sqrt2
    assert QSqrt2(1, 2) * QSqrt2(3, 4) == QSqrt2(1 * 3 + 2 * 2 * 4, 1 * 4 + 2 * 3)
    assert QSqrt2.sqrt2() * QSqrt2.sqrt2() == QSqrt2(2)
    assert HALF_SQRT2 * HALF_SQRT2 == QSqrt2(Fraction(1, 2))


@given(qsqrt2, qsqrt2, qsqrt2)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x - x == QSqrt2.zero()


@given(qsqrt2)
def test_inverse_and_galois(x):
    if x.is_zero():
        with pytest.raises(ArithmeticError):
            x.inverse()
    else:
        assert x * x.inverse() == QSqrt2.one()
    assert x * x.galois() == QSqrt2(x.norm())


@given(qsqrt2)
def test_text_round_trip(x):
    assert QSqrt2.parse(str(x)) == x


@given(qsqrt2, qsqrt2)
def test_order_matches_floats(x, y):
    if x != y:
        assert (x < y) == (float(x) < float(y))


def test_parse_rejects_garbage():
    with pytest.raises(InputError):
        QSqrt2.parse("one and a half")


def test_eighth_turn_table():
    for k in range(16):
        c, s = cos_eighth(k), sin_eighth(k)
        assert c * c + s * s == QSqrt2.one()
    assert cos_eighth(1) == HALF_SQRT2 == sin_eighth(1)
    assert cos_eighth(4) == QSqrt2(-1)
    assert sin_eighth(-2) == QSqrt2(-1)


@given(qzeta8, qzeta8, qzeta8)
def test_qzeta8_ring(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


def test_qzeta8_units():
    i = QZeta8.imag_unit()
    assert i * i == -QZeta8.one()
    assert QZeta8(0, 1) * QZeta8(0, 1) == QZeta8(2)
    assert QZeta8(1, 0, 1).conjugate() == QZeta8(1, 0, -1)


@given(qzeta8)
def test_qzeta8_inverse(x):
    if not x.is_zero():
        assert x * x.inverse() == QZeta8.one()


def test_integrality():
    assert QZeta8(1, 2, 3, 4).in_ring_of_integers_part()
    assert not QZeta8(Fraction(1, 2)).in_ring_of_integers_part()
