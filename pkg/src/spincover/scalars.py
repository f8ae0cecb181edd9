"""Exact scalar rings used throughout the package.

``QSqrt2`` is the field Q(sqrt 2) and ``QZeta8`` is Q(sqrt 2, i), which
contains the eighth roots of unity.  Both store integer numerators over a
single positive common denominator kept in lowest terms, so equality and
hashing are plain tuple comparisons.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Union

from .errors import InputError, NotInvertible, UnsupportedAngle

Rational = Union[int, Fraction]


def _frac_text(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


_FRAC = r"[+-]?\d+(?:/\d+)?"


def _parse_frac(text: str) -> Fraction:
    return Fraction(text.replace(" ", ""))


class QSqrt2:
    """An element ``(a + b*sqrt2) / den`` with integers ``a, b`` and ``den > 0``."""

    __slots__ = ("_a", "_b", "_d", "_hash")

    def __init__(self, a: Rational = 0, b: Rational = 0) -> None:
        fa, fb = Fraction(a), Fraction(b)
        d = fa.denominator * fb.denominator // gcd(fa.denominator, fb.denominator)
        self._set(fa.numerator * (d // fa.denominator), fb.numerator * (d // fb.denominator), d)

    def _set(self, a: int, b: int, d: int) -> None:
        g = gcd(gcd(a, b), d)
        if g != 1:
            a, b, d = a // g, b // g, d // g
        self._a, self._b, self._d = a, b, d
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> QSqrt2:
        obj = cls.__new__(cls)
        obj._set(a, b, d)
        return obj

    @classmethod
    def zero(cls) -> QSqrt2:
        return cls._raw(0, 0, 1)

    @classmethod
    def one(cls) -> QSqrt2:
        return cls._raw(1, 0, 1)

    @classmethod
    def sqrt2(cls) -> QSqrt2:
        return cls._raw(0, 1, 1)

    @classmethod
    def coerce(cls, x: object) -> QSqrt2:
        if isinstance(x, QSqrt2):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to QSqrt2")

    # -- components ---------------------------------------------------------

    @property
    def a(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def b(self) -> Fraction:
        return Fraction(self._b, self._d)

    def key(self) -> tuple[int, int, int]:
        return (self._a, self._b, self._d)

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_rational(self) -> bool:
        return self._b == 0

    # -- ring structure -----------------------------------------------------

    def __add__(self, other: object) -> QSqrt2:
        if not isinstance(other, QSqrt2):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = QSqrt2(other)
        d1, d2 = self._d, other._d
        if d1 == d2:
            return QSqrt2._raw(self._a + other._a, self._b + other._b, d1)
        return QSqrt2._raw(self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> QSqrt2:
        out = QSqrt2.__new__(QSqrt2)
        out._a, out._b, out._d, out._hash = -self._a, -self._b, self._d, None
        return out

    def __sub__(self, other: object) -> QSqrt2:
        if not isinstance(other, (QSqrt2, int, Fraction)):
            return NotImplemented
        return self + (-QSqrt2.coerce(other))

    def __rsub__(self, other: object) -> QSqrt2:
        return QSqrt2.coerce(other) - self

    def __mul__(self, other: object) -> QSqrt2:
        if not isinstance(other, QSqrt2):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = QSqrt2(other)
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        return QSqrt2._raw(a1 * a2 + 2 * b1 * b2, a1 * b2 + b1 * a2, self._d * other._d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm ``a^2 - 2 b^2`` (as a rational)."""
        return Fraction(self._a * self._a - 2 * self._b * self._b, self._d * self._d)

    def galois(self) -> QSqrt2:
        """The automorphism sqrt2 -> -sqrt2."""
        return QSqrt2._raw(self._a, -self._b, self._d)

    def conjugate(self) -> QSqrt2:
        """Complex conjugation, the identity on a real field."""
        return self

    def inverse(self) -> QSqrt2:
        n = self._a * self._a - 2 * self._b * self._b
        if n == 0:
            raise NotInvertible("division by zero in Q(sqrt2)")
        # 1/x = d * (a - b sqrt2) / (a^2 - 2 b^2)
        if n < 0:
            return QSqrt2._raw(-self._d * self._a, self._d * self._b, -n)
        return QSqrt2._raw(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, other: object) -> QSqrt2:
        if not isinstance(other, (QSqrt2, int, Fraction)):
            return NotImplemented
        return self * QSqrt2.coerce(other).inverse()

    def __rtruediv__(self, other: object) -> QSqrt2:
        return QSqrt2.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> QSqrt2:
        if k < 0:
            return self.inverse() ** (-k)
        out, base = QSqrt2.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def sign(self) -> int:
        """Sign of the real number ``a + b sqrt2``, computed exactly."""
        a, b = self._a, self._b
        if a >= 0 and b >= 0:
            return 0 if a == 0 and b == 0 else 1
        if a <= 0 and b <= 0:
            return -1
        # opposite signs: compare a^2 with 2 b^2
        if a > 0:
            return 1 if a * a > 2 * b * b else -1
        return 1 if 2 * b * b > a * a else -1

    def __float__(self) -> float:
        return (self._a + self._b * 2**0.5) / self._d

    # -- comparison and hashing ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QSqrt2):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and Fraction(self._a, self._d) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._a, self._b, self._d))
        return self._hash

    def __lt__(self, other: QSqrt2) -> bool:
        return (self - other).sign() < 0

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        a, b = self.a, self.b
        if b < 0:
            return f"{_frac_text(a)} - {_frac_text(-b)}√2"
        return f"{_frac_text(a)} + {_frac_text(b)}√2"

    def __repr__(self) -> str:
        return f"QSqrt2({self.a!s}, {self.b!s})"

    _PATTERN = re.compile(rf"^\s*({_FRAC})\s*([+-])\s*(\d+(?:/\d+)?)\s*√2\s*$")

    @classmethod
    def parse(cls, text: str) -> QSqrt2:
        """Inverse of ``str``: accepts ``"p/q + r/s√2"`` and ``"p/q - r/s√2"``."""
        m = cls._PATTERN.match(text)
        if m is None:
            try:
                return cls(_parse_frac(text.strip()))
            except (ValueError, ZeroDivisionError):
                raise InputError(f"cannot parse QSqrt2 from {text!r}") from None
        b = _parse_frac(m.group(3))
        return cls(_parse_frac(m.group(1)), -b if m.group(2) == "-" else b)


HALF_SQRT2 = QSqrt2(0, Fraction(1, 2))


class QZeta8:
    """An element ``(a + b sqrt2 + c i + d i sqrt2) / den`` of Q(sqrt2, i)."""

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, a: Rational = 0, b: Rational = 0, c: Rational = 0, d: Rational = 0) -> None:
        fs = [Fraction(x) for x in (a, b, c, d)]
        den = 1
        for f in fs:
            den = den * f.denominator // gcd(den, f.denominator)
        self._set(tuple(f.numerator * (den // f.denominator) for f in fs), den)

    def _set(self, nums: tuple[int, int, int, int], den: int) -> None:
        g = gcd(gcd(gcd(nums[0], nums[1]), gcd(nums[2], nums[3])), den)
        if g != 1:
            nums = tuple(x // g for x in nums)
            den //= g
        self._n, self._d, self._hash = nums, den, None

    @classmethod
    def _raw(cls, nums: tuple[int, int, int, int], den: int) -> QZeta8:
        obj = cls.__new__(cls)
        obj._set(nums, den)
        return obj

    @classmethod
    def zero(cls) -> QZeta8:
        return cls._raw((0, 0, 0, 0), 1)

    @classmethod
    def one(cls) -> QZeta8:
        return cls._raw((1, 0, 0, 0), 1)

    @classmethod
    def imag_unit(cls) -> QZeta8:
        return cls._raw((0, 0, 1, 0), 1)

    @classmethod
    def coerce(cls, x: object) -> QZeta8:
        if isinstance(x, QZeta8):
            return x
        if isinstance(x, QSqrt2):
            return cls(x.a, x.b)
        if isinstance(x, (int, Fraction)):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to QZeta8")

    @property
    def a(self) -> Fraction:
        return Fraction(self._n[0], self._d)

    @property
    def b(self) -> Fraction:
        return Fraction(self._n[1], self._d)

    @property
    def c(self) -> Fraction:
        return Fraction(self._n[2], self._d)

    @property
    def d(self) -> Fraction:
        return Fraction(self._n[3], self._d)

    def real(self) -> QSqrt2:
        return QSqrt2(self.a, self.b)

    def imag(self) -> QSqrt2:
        return QSqrt2(self.c, self.d)

    def key(self) -> tuple[int, ...]:
        return self._n + (self._d,)

    def is_zero(self) -> bool:
        return not any(self._n)

    def __add__(self, other: object) -> QZeta8:
        if not isinstance(other, QZeta8):
            try:
                other = QZeta8.coerce(other)
            except TypeError:
                return NotImplemented
        d1, d2 = self._d, other._d
        x, y = self._n, other._n
        if d1 == d2:
            return QZeta8._raw((x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]), d1)
        return QZeta8._raw(tuple(p * d2 + q * d1 for p, q in zip(x, y)), d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> QZeta8:
        return QZeta8._raw(tuple(-x for x in self._n), self._d)

    def __sub__(self, other: object) -> QZeta8:
        try:
            return self + (-QZeta8.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other: object) -> QZeta8:
        return QZeta8.coerce(other) - self

    def __mul__(self, other: object) -> QZeta8:
        if not isinstance(other, QZeta8):
            try:
                other = QZeta8.coerce(other)
            except TypeError:
                return NotImplemented
        a1, b1, c1, d1 = self._n
        a2, b2, c2, d2 = other._n
        # (A1 + C1 i)(A2 + C2 i) with A, C in Z[sqrt2]
        ra = a1 * a2 + 2 * b1 * b2 - (c1 * c2 + 2 * d1 * d2)
        rb = a1 * b2 + b1 * a2 - (c1 * d2 + d1 * c2)
        rc = a1 * c2 + 2 * b1 * d2 + c1 * a2 + 2 * d1 * b2
        rd = a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2
        return QZeta8._raw((ra, rb, rc, rd), self._d * other._d)

    __rmul__ = __mul__

    def conjugate(self) -> QZeta8:
        """Complex conjugation i -> -i."""
        a, b, c, d = self._n
        return QZeta8._raw((a, b, -c, -d), self._d)

    def inverse(self) -> QZeta8:
        # 1/z = conj(z) / |z|^2 with |z|^2 in Q(sqrt2)
        n2 = self.real() * self.real() + self.imag() * self.imag()
        return self.conjugate() * QZeta8.coerce(n2.inverse())

    def __truediv__(self, other: object) -> QZeta8:
        return self * QZeta8.coerce(other).inverse()

    def in_ring_of_integers_part(self) -> bool:
        """True when all four coordinates are integers, i.e. the value lies in Z[i, sqrt2]."""
        return self._d == 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QZeta8):
            return self._n == other._n and self._d == other._d
        if isinstance(other, (QSqrt2, int, Fraction)):
            return self == QZeta8.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._d))
        return self._hash

    def __str__(self) -> str:
        re_part, im_part = self.real(), self.imag()
        if im_part.is_zero():
            return str(re_part)
        return f"({re_part}) + ({im_part})i"

    def __repr__(self) -> str:
        return f"QZeta8({self.a!s}, {self.b!s}, {self.c!s}, {self.d!s})"


# -- exact trigonometry at multiples of pi/4 -----------------------------------

_COS_TABLE = (
    QSqrt2(1),
    HALF_SQRT2,
    QSqrt2(0),
    -HALF_SQRT2,
    QSqrt2(-1),
    -HALF_SQRT2,
    QSqrt2(0),
    HALF_SQRT2,
)


def cos_eighth(k: int) -> QSqrt2:
    """``cos(k * pi / 4)`` exactly."""
    return _COS_TABLE[k % 8]


def sin_eighth(k: int) -> QSqrt2:
    """``sin(k * pi / 4)`` exactly."""
    return _COS_TABLE[(k - 2) % 8]


def eighths(theta: Fraction) -> int:
    """Convert an angle in units of pi to an integer count of pi/4 steps.

    Raises :class:`~spincover.errors.UnsupportedAngle` for other angles.
    """
    q = Fraction(theta) * 4
    if q.denominator != 1:
        raise UnsupportedAngle(f"angle {theta}*pi is not a multiple of pi/4")
    return int(q)
