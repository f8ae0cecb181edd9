"""Quaternions over Q(sqrt2) and the unit quaternion group."""

from __future__ import annotations

from .errors import InputError
from .scalars import QSqrt2


class Quaternion:
    """``a + b i + c j + d k`` with coefficients in Q(sqrt2)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: object = 0, b: object = 0, c: object = 0, d: object = 0) -> None:
        self.a, self.b, self.c, self.d = (QSqrt2.coerce(x) for x in (a, b, c, d))

    @property
    def coords(self) -> tuple[QSqrt2, QSqrt2, QSqrt2, QSqrt2]:
        return (self.a, self.b, self.c, self.d)

    @classmethod
    def one(cls) -> Quaternion:
        return cls(1)

    def __mul__(self, other: Quaternion) -> Quaternion:
        a1, b1, c1, d1 = self.coords
        a2, b2, c2, d2 = other.coords
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __add__(self, other: Quaternion) -> Quaternion:
        return Quaternion(*(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: Quaternion) -> Quaternion:
        return Quaternion(*(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> Quaternion:
        return Quaternion(*(-x for x in self.coords))

    def conjugate(self) -> Quaternion:
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> QSqrt2:
        return sum((x * x for x in self.coords[1:]), self.a * self.a)

    def is_unit(self) -> bool:
        return self.norm() == QSqrt2.one()

    def inverse(self) -> Quaternion:
        n = self.norm().inverse()
        return Quaternion(*(x * n for x in self.conjugate().coords))

    def __pow__(self, k: int) -> Quaternion:
        if k < 0:
            return self.inverse() ** (-k)
        out, base = Quaternion.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def key(self) -> tuple:
        return tuple(x.key() for x in self.coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return "Quaternion({})".format(", ".join(str(x) for x in self.coords))


class UnitQuaternion(Quaternion):
    """A quaternion of norm exactly 1 (checked on construction)."""

    __slots__ = ()

    def __init__(self, a: object = 0, b: object = 0, c: object = 0, d: object = 0) -> None:
        super().__init__(a, b, c, d)
        if not self.is_unit():
            raise InputError(f"quaternion {self!r} does not have norm 1")

    @classmethod
    def of(cls, q: Quaternion) -> UnitQuaternion:
        return cls(*q.coords)

    def __mul__(self, other: Quaternion) -> Quaternion:
        prod = super().__mul__(other)
        return UnitQuaternion.of(prod) if isinstance(other, UnitQuaternion) else prod

    def inverse(self) -> UnitQuaternion:
        return UnitQuaternion.of(self.conjugate())
