"""Exact real Clifford algebras ``Cl(n)`` with ``e_i^2 = -1``.

Elements are finite sums of blades with coefficients in Q(sqrt2).  A blade
``e_{i1} ... e_{ik}`` with ``i1 < ... < ik`` is stored as the bitmask with
bits ``i1-1, ..., ik-1`` set.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, InputError, NotInvertible, NotSpin, NotSpin4
from .exactmatrix import ExactMatrix
from .quaternion import Quaternion
from .scalars import QSqrt2, cos_eighth, sin_eighth


@lru_cache(maxsize=None)
def blade_sign(a: int, b: int) -> int:
    """Sign of ``blade(a) * blade(b)`` before cancelling shared generators."""
    swaps = 0
    x = a >> 1
    while x:
        swaps += bin(x & b).count("1")
        x >>= 1
    # each shared generator contributes e_i^2 = -1
    swaps += bin(a & b).count("1")
    return -1 if swaps & 1 else 1


def grade(mask: int) -> int:
    return bin(mask).count("1")


def blade_indices(mask: int) -> list[int]:
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def blade_mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


class CliffordElement:
    """An element of ``Cl(n)``; immutable, hashable, with no stored zero terms."""

    __slots__ = ("n", "terms", "_key")

    def __init__(self, n: int, terms: Mapping[int, object] | None = None) -> None:
        self.n = n
        clean: dict[int, QSqrt2] = {}
        for mask, c in (terms or {}).items():
            if mask >> n:
                raise DimensionMismatch(f"blade {blade_indices(mask)} outside Cl({n})")
            c = QSqrt2.coerce(c)
            if not c.is_zero():
                clean[mask] = c
        self.terms: dict[int, QSqrt2] = dict(sorted(clean.items()))
        self._key = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def scalar(cls, n: int, c: object) -> CliffordElement:
        return cls(n, {0: c})

    @classmethod
    def one_of(cls, n: int) -> CliffordElement:
        return cls(n, {0: 1})

    @classmethod
    def blade(cls, n: int, *indices: int, coef: object = 1) -> CliffordElement:
        """``coef * e_{i1} e_{i2} ...`` with the indices in the given (any) order."""
        out = cls.scalar(n, coef)
        for i in indices:
            if not 1 <= i <= n:
                raise DimensionMismatch(f"e{i} outside Cl({n})")
            out = out * cls(n, {1 << (i - 1): 1})
        return out

    def one(self) -> CliffordElement:
        return CliffordElement.one_of(self.n)

    # -- ring structure -----------------------------------------------------

    def _check(self, other: CliffordElement) -> None:
        if self.n != other.n:
            raise DimensionMismatch(f"Cl({self.n}) versus Cl({other.n})")

    def __mul__(self, other: object) -> CliffordElement:
        if isinstance(other, (QSqrt2, int)):
            return CliffordElement(self.n, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, CliffordElement):
            return NotImplemented
        self._check(other)
        out: dict[int, QSqrt2] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                if blade_sign(m1, m2) < 0:
                    c = -c
                m = m1 ^ m2
                out[m] = out[m] + c if m in out else c
        return CliffordElement(self.n, out)

    def __rmul__(self, other: object) -> CliffordElement:
        if isinstance(other, (QSqrt2, int)):
            return self * other
        return NotImplemented

    def __add__(self, other: CliffordElement) -> CliffordElement:
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return CliffordElement(self.n, out)

    def __sub__(self, other: CliffordElement) -> CliffordElement:
        return self + (-other)

    def __neg__(self) -> CliffordElement:
        return CliffordElement(self.n, {m: -c for m, c in self.terms.items()})

    def __pow__(self, k: int) -> CliffordElement:
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- involutions and norm -------------------------------------------------

    def _grade_sign(self, sign_of_grade) -> CliffordElement:
        return CliffordElement(self.n, {m: c if sign_of_grade(grade(m)) > 0 else -c for m, c in self.terms.items()})

    def reverse(self) -> CliffordElement:
        """The transposition ``tau``."""
        return self._grade_sign(lambda k: -1 if (k * (k - 1) // 2) & 1 else 1)

    def grade_involution(self) -> CliffordElement:
        """The parity automorphism ``Pi``."""
        return self._grade_sign(lambda k: -1 if k & 1 else 1)

    def clifford_conj(self) -> CliffordElement:
        """The Clifford conjugation ``sigma = tau o Pi``."""
        return self._grade_sign(lambda k: -1 if ((k * (k - 1) // 2) + k) & 1 else 1)

    def spinor_norm(self) -> CliffordElement:
        return self * self.clifford_conj()

    # -- predicates -----------------------------------------------------------

    def is_scalar(self) -> bool:
        return all(m == 0 for m in self.terms)

    def scalar_part(self) -> QSqrt2:
        return self.terms.get(0, QSqrt2.zero())

    def is_even(self) -> bool:
        return all(grade(m) % 2 == 0 for m in self.terms)

    def is_grade(self, k: int) -> bool:
        return all(grade(m) == k for m in self.terms)

    def coefficient(self, *indices: int) -> QSqrt2:
        """Coefficient of the blade with the given increasing indices."""
        return self.terms.get(blade_mask(indices), QSqrt2.zero())

    def inverse(self) -> CliffordElement:
        """``sigma(x) / N(x)`` when the spinor norm is a nonzero scalar."""
        norm = self.spinor_norm()
        if not norm.is_scalar() or norm.scalar_part().is_zero():
            raise NotInvertible("spinor norm is not a nonzero scalar")
        return self.clifford_conj() * norm.scalar_part().inverse()

    def _adjoint_rows(self) -> list[CliffordElement] | None:
        try:
            inv = self.inverse()
        except NotInvertible:
            return None
        par = self.grade_involution()
        images = []
        for i in range(1, self.n + 1):
            img = par * CliffordElement(self.n, {1 << (i - 1): 1}) * inv
            if not img.is_grade(1) and img.terms:
                return None
            images.append(img)
        return images

    def is_spin(self) -> bool:
        if not self.is_even():
            return False
        if self.spinor_norm() != self.one():
            return False
        return self._adjoint_rows() is not None

    def is_pin(self) -> bool:
        norm = self.spinor_norm()
        if not all(grade(m) % 2 == 0 for m in self.terms) and not all(grade(m) % 2 == 1 for m in self.terms):
            return False
        return norm == self.one() and self._adjoint_rows() is not None

    # -- identity -------------------------------------------------------------

    def key(self) -> tuple:
        if self._key is None:
            self._key = (self.n, tuple((m, c.key()) for m, c in self.terms.items()))
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.key())

    # -- text -----------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "(0/1 + 0/1√2) * 1"
        parts = []
        for m, c in self.terms.items():
            blade = "".join(f"e{i}" for i in blade_indices(m)) or "1"
            parts.append(f"({c}) * {blade}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"CliffordElement({self.n}, {self})"

    _TERM = re.compile(r"\(([^()]*)\)\s*\*\s*((?:e\d+)+|1)")

    @classmethod
    def parse(cls, n: int, text: str) -> CliffordElement:
        """Inverse of ``str``: a sum of ``(coef) * e1e2...`` terms."""
        pos, out = 0, cls(n)
        text = text.strip()
        while pos < len(text):
            m = cls._TERM.match(text, pos)
            if m is None:
                raise InputError(f"cannot parse Clifford term at offset {pos} of {text!r}")
            coef = QSqrt2.parse(m.group(1))
            idx = [] if m.group(2) == "1" else [int(x) for x in re.findall(r"\d+", m.group(2))]
            out = out + cls.blade(n, *idx, coef=coef)
            pos = m.end()
            rest = re.match(r"\s*\+\s*", text[pos:])
            if rest is None:
                if text[pos:].strip():
                    raise InputError(f"unexpected text {text[pos:]!r}")
                break
            pos += rest.end()
        return out


def mul(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    return x * y


def require_spin(x: CliffordElement) -> None:
    if not x.is_spin():
        raise NotSpin(f"{x} is not in Spin({x.n})")


def twisted_adjoint(x: CliffordElement, n: int | None = None) -> ExactMatrix:
    """The matrix of ``rho_x : v -> Pi(x) v x^{-1}`` on grade one.

    Row ``i`` holds the coordinates of ``rho_x(e_i)``.  With this layout the
    image of ``S(alpha)`` is ``D(2 alpha)`` and the map reverses products,
    ``M(xy) = M(y) M(x)``.
    """
    if n is not None and n != x.n:
        raise DimensionMismatch(f"element of Cl({x.n}) used as Cl({n})")
    require_spin(x)
    rows = x._adjoint_rows()
    assert rows is not None
    return ExactMatrix([[img.coefficient(j) for j in range(1, x.n + 1)] for img in rows])


# -- named elements and embeddings ---------------------------------------------


def spin_generator_S(k: int) -> CliffordElement:
    """``S(k pi / 4) = cos + sin e1e2`` in ``Cl(2)``."""
    return CliffordElement(2, {0: cos_eighth(k), 0b11: sin_eighth(k)})


def embed(x: CliffordElement, index_map: Sequence[int], n: int) -> CliffordElement:
    """``eps~_I``: send ``e_p`` to ``e_{I[p-1]}`` in ``Cl(n)``."""
    if len(index_map) != x.n or len(set(index_map)) != x.n or not all(1 <= i <= n for i in index_map):
        raise InputError(f"index map {list(index_map)} is not injective from 1..{x.n} into 1..{n}")
    out = CliffordElement(n)
    for m, c in x.terms.items():
        out = out + CliffordElement.blade(n, *(index_map[i - 1] for i in blade_indices(m)), coef=c)
    return out


def eps_tilde(i: int, j: int, x: CliffordElement, n: int) -> CliffordElement:
    """``eps~_ij`` applied to an element of ``Cl(2)``."""
    return embed(x, (i, j), n)


def eta_p_tilde(k: int) -> CliffordElement:
    """``eta~_p(S(k pi/4)) = eps~_34(S(k pi/4))`` in ``Cl(4)``."""
    return eps_tilde(3, 4, spin_generator_S(k), 4)


def eta_l_tilde(k: int) -> CliffordElement:
    """``eta~_l(S(alpha)) = eps~_14(S(2 alpha)) eps~_23(S(-alpha))`` in ``Cl(4)``."""
    return eps_tilde(1, 4, spin_generator_S(2 * k), 4) * eps_tilde(2, 3, spin_generator_S(-k), 4)


# -- Spin(4) = Spin(3) x Spin(3) -------------------------------------------------

# blade -> (part, coordinate, sign) for x = u + I v with
# i = e1e2, j = e2e3, k = e3e1, I = e1e2e3e4, iI = e4e3, jI = e4e1, kI = e4e2
_SPLIT = {
    0b0000: ("u", 0, 1),
    0b0011: ("u", 1, 1),
    0b0110: ("u", 2, 1),
    0b0101: ("u", 3, -1),
    0b1111: ("v", 0, 1),
    0b1100: ("v", 1, -1),
    0b1001: ("v", 2, -1),
    0b1010: ("v", 3, -1),
}


def spin4_split(x: CliffordElement) -> tuple[Quaternion, Quaternion]:
    """The unique quaternions ``u, v`` with ``x = u + I v``."""
    if x.n != 4 or not x.is_spin():
        raise NotSpin4(f"{x} is not in Spin(4)")
    coords = {"u": [QSqrt2.zero()] * 4, "v": [QSqrt2.zero()] * 4}
    for m, c in x.terms.items():
        part, idx, sign = _SPLIT[m]
        coords[part][idx] = c if sign > 0 else -c
    return Quaternion(*coords["u"]), Quaternion(*coords["v"])


def quaternion_to_cl3(q: Quaternion) -> CliffordElement:
    """``1, i, j, k -> 1, e1e2, e2e3, e3e1`` (an algebra isomorphism onto the even part)."""
    return CliffordElement(3, {0: q.a, 0b011: q.b, 0b110: q.c, 0b101: -q.d})


def cl3_to_quaternion(x: CliffordElement) -> Quaternion:
    if x.n != 3 or not x.is_even():
        raise NotSpin(f"{x} is not an even element of Cl(3)")
    return Quaternion(x.coefficient(), x.coefficient(1, 2), x.coefficient(2, 3), -x.coefficient(1, 3))


def spin4_pair(x: CliffordElement) -> tuple[Quaternion, Quaternion]:
    """``u + I v -> (u + v, u - v)``."""
    u, v = spin4_split(x)
    return u + v, u - v


def spin4_project(x: CliffordElement, side: str) -> CliffordElement:
    """Left (``u + v``) or right (``u - v``) factor as an element of ``Spin(3)``."""
    left, right = spin4_pair(x)
    if side == "left":
        return quaternion_to_cl3(left)
    if side == "right":
        return quaternion_to_cl3(right)
    raise InputError(f"side must be 'left' or 'right', got {side!r}")
