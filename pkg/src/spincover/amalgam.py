"""Normal forms in the rank two groups ``K^{r,s}`` and their spin extensions.

``K^{r,s} = K_1 T *_T K_2 T`` is a free product of two circle groups
amalgamated over a Klein four torus ``T``; the spin extension replaces
``T`` by a group ``U~`` of order 8 or 16.  Circle elements are written
``k_i(theta)`` with ``theta`` a rational in units of ``pi`` taken modulo 2.

A word is stored as ``u . k_{s1}(rho_1) k_{s2}(rho_2) ...`` with ``u`` in
``U~`` (or ``T``), strictly alternating sides and every ``rho`` inside the
open interval ``(0, p_side)``.  Here ``p_side`` is the angle of the torus
generator ``t_side = k_side(p_side)``: ``1/2`` on a doubly covered side and
``1`` on a singly covered or non-spin side.  By Britton's lemma two words
name the same element exactly when their normal forms agree.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .clifford import embed, spin_generator_S
from .colouring import Colouring
from .diagram import rank2
from .errors import BadParityColouring, InputError, RankTwoOnly
from .matgroups import (
    D,
    ProductElement,
    eps,
    iota1,
    iota2,
    zeta_l,
    zeta_l_tilde,
    zeta_p,
    zeta_p_tilde,
)
from .scalars import eighths

UElt = tuple[int, int]


def _frac(x: object) -> Fraction:
    return Fraction(x)  # type: ignore[arg-type]


@dataclass(frozen=True)
class UGroup:
    """The amalgamated subgroup as words ``t1^a t2^b``, ``0 <= a < o1``, ``0 <= b < o2``.

    ``flip`` means ``t2^{-1} t1 t2 = t1^{-1}``; ``wrap`` means ``t2^{o2} = t1^2``
    (otherwise ``t2^{o2} = 1``).
    """

    o1: int
    o2: int
    flip: bool
    wrap: bool

    def mul(self, x: UElt, y: UElt) -> UElt:
        a1, b1 = x
        a2, b2 = y
        if self.flip and b1 % 2:
            a2 = -a2
        a, b = a1 + a2, b1 + b2
        if b >= self.o2:
            b -= self.o2
            if self.wrap:
                a += 2
        return (a % self.o1, b)

    def elements(self) -> list[UElt]:
        return [(a, b) for a in range(self.o1) for b in range(self.o2)]

    def one(self) -> UElt:
        return (0, 0)

    def inverse(self, x: UElt) -> UElt:
        return next(y for y in self.elements() if self.mul(x, y) == (0, 0))

    def power(self, x: UElt, k: int) -> UElt:
        if k < 0:
            x, k = self.inverse(x), -k
        out = (0, 0)
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def order_of(self, x: UElt) -> int:
        k, y = 1, x
        while y != (0, 0):
            y = self.mul(y, x)
            k += 1
        return k


@dataclass(frozen=True)
class AmalgamWord:
    """A normal-form word; build and combine words through an :class:`AmalgamGroup`."""

    group: "AmalgamGroup"
    tail: UElt
    syllables: tuple[tuple[int, Fraction], ...]

    def __mul__(self, other: AmalgamWord) -> AmalgamWord:
        return self.group.mul(self, other)

    def __pow__(self, k: int) -> AmalgamWord:
        return self.group.power(self, k)

    def inverse(self) -> AmalgamWord:
        return self.group.inverse(self)

    def one(self) -> AmalgamWord:
        return self.group.identity()

    def is_identity(self) -> bool:
        return self.tail == (0, 0) and not self.syllables

    def key(self) -> tuple:
        return (self.tail, tuple((s, r.numerator, r.denominator) for s, r in self.syllables))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AmalgamWord):
            return NotImplemented
        return self.group.params == other.group.params and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __len__(self) -> int:
        return len(self.syllables)

    def __str__(self) -> str:
        parts = [f"<{self.tail[0]},{self.tail[1]}>"]
        parts += [f"[{s}:{r.numerator}/{r.denominator}]" for s, r in self.syllables]
        return " · ".join(parts[:1]) + ("" if len(parts) == 1 else " · " + " ".join(parts[1:]))


class AmalgamGroup:
    """Handle for ``K^{r,s}`` (``spin=False``) or its spin extension ``K~^{r,s}``."""

    def __init__(self, r: int, s: int, spin: bool = True, kappa: Colouring | Sequence[int] | None = None) -> None:
        if r < 1 or s < 1 or r * s < 4:
            raise RankTwoOnly(f"need positive r, s with rs >= 4, got ({r}, {s})")
        self.r, self.s, self.spin = r, s, spin
        self.cm = rank2(r, s)
        # n(1,2) = a(1,2) mod 2 = r mod 2, n(2,1) = s mod 2
        self.n12, self.n21 = r % 2, s % 2
        if not spin:
            self.case = "T"
            self.u = UGroup(2, 2, False, False)
            self.period = (Fraction(1), Fraction(1))
            self.singly: int | None = None
        elif self.n12 and self.n21:
            self.case = "Q8"
            self.u = UGroup(4, 2, True, True)
            self.period = (Fraction(1, 2), Fraction(1, 2))
            self.singly = None
        elif not self.n12 and not self.n21:
            self.case = "Z4xZ4"
            self.u = UGroup(4, 4, False, False)
            self.period = (Fraction(1, 2), Fraction(1, 2))
            self.singly = None
        elif not self.n12:
            # r even, s odd: vertex 1 is singly covered
            self.case = "Z4xZ2"
            self.u = UGroup(2, 4, False, False)
            self.period = (Fraction(1), Fraction(1, 2))
            self.singly = 1
        else:
            self.case = "Z4xZ2"
            self.u = UGroup(4, 2, False, False)
            self.period = (Fraction(1, 2), Fraction(1))
            self.singly = 2
        self.kappa = self._check_kappa(kappa)
        self.params = (r, s, spin)

    def _check_kappa(self, kappa: Colouring | Sequence[int] | None) -> Colouring | None:
        if not self.spin:
            return None
        if kappa is None:
            return Colouring(tuple(1 if v == self.singly else 2 for v in (1, 2)))
        kappa = kappa if isinstance(kappa, Colouring) else Colouring.of(kappa)
        if len(kappa) != 2:
            raise BadParityColouring("a rank two colouring needs two values")
        if self.singly is not None and kappa(self.singly) == 2:
            raise BadParityColouring(f"vertex {self.singly} is singly covered and must have colour 1")
        if self.case == "Q8" and kappa(1) != kappa(2):
            raise BadParityColouring("both parities odd forces equal colours")
        return kappa

    # -- the amalgamated subgroup ------------------------------------------------

    def generator_u(self, side: int) -> UElt:
        return (1, 0) if side == 1 else (0, 1)

    def conj_sign(self, u: UElt, side: int) -> int:
        """``+1`` or ``-1`` with ``u^{-1} k_side(theta) u = k_side(sign * theta)``."""
        other_exp = u[1] if side == 1 else u[0]
        n_other = self.n21 if side == 1 else self.n12
        return -1 if (n_other and other_exp % 2) else 1

    def split(self, side: int, theta: object) -> tuple[UElt, Fraction]:
        """``k_side(theta) = u . k_side(rho)`` with ``rho`` in ``[0, p_side)``."""
        theta = _frac(theta) % 2
        p = self.period[side - 1]
        m = math.floor(theta / p)
        return self.u.power(self.generator_u(side), m), theta - m * p

    # -- words ----------------------------------------------------------------------

    def identity(self) -> AmalgamWord:
        return AmalgamWord(self, (0, 0), ())

    def from_u(self, u: UElt) -> AmalgamWord:
        if not (0 <= u[0] < self.u.o1 and 0 <= u[1] < self.u.o2):
            raise InputError(f"{u} is not a canonical element of the amalgamated subgroup")
        return AmalgamWord(self, u, ())

    def k(self, side: int, theta: object) -> AmalgamWord:
        """The circle element ``k_side(theta)`` (``theta`` in units of pi)."""
        if side not in (1, 2):
            raise InputError(f"side must be 1 or 2, got {side}")
        u, rho = self.split(side, theta)
        return AmalgamWord(self, u, ((side, rho),) if rho else ())

    def t(self, side: int) -> AmalgamWord:
        return self.from_u(self.generator_u(side))

    def _push(self, syllables: list[tuple[int, Fraction]], u: UElt) -> UElt:
        """Move ``u`` from the right end to the left end of ``syllables`` in place."""
        for idx in range(len(syllables) - 1, -1, -1):
            side, rho = syllables[idx]
            v, rho2 = self.split(side, self.conj_sign(u, side) * rho)
            syllables[idx] = (side, rho2)
            u = self.u.mul(u, v)
        return u

    def mul(self, w1: AmalgamWord, w2: AmalgamWord) -> AmalgamWord:
        if w1.group.params != self.params or w2.group.params != self.params:
            raise InputError("words from different groups")
        syl = list(w1.syllables)
        tail = self.u.mul(w1.tail, self._push(syl, w2.tail))
        for side, rho in w2.syllables:
            if syl and syl[-1][0] == side:
                v, merged = self.split(side, syl[-1][1] + rho)
                syl.pop()
                tail = self.u.mul(tail, self._push(syl, v))
                if merged:
                    syl.append((side, merged))
            else:
                syl.append((side, rho))
        return AmalgamWord(self, tail, tuple(syl))

    def inverse(self, w: AmalgamWord) -> AmalgamWord:
        out = self.identity()
        for side, rho in reversed(w.syllables):
            out = out * self.k(side, -rho)
        return out * self.from_u(self.u.inverse(w.tail))

    def power(self, w: AmalgamWord, k: int) -> AmalgamWord:
        base = w if k >= 0 else self.inverse(w)
        out = self.identity()
        for _ in range(abs(k)):
            out = out * base
        return out

    def parse(self, text: str) -> AmalgamWord:
        """Inverse of ``str(word)``."""
        m = re.fullmatch(r"\s*<(\d+),(\d+)>((?:\s*·\s*.*)?)\s*", text)
        if m is None:
            raise InputError(f"cannot parse amalgam word {text!r}")
        tail = self.from_u((int(m.group(1)), int(m.group(2))))
        rest = m.group(3).strip().lstrip("·").strip()
        syl = []
        for token in rest.split():
            sm = re.fullmatch(r"\[([12]):(-?\d+)/(\d+)\]", token)
            if sm is None:
                raise InputError(f"cannot parse syllable {token!r}")
            syl.append((int(sm.group(1)), Fraction(int(sm.group(2)), int(sm.group(3)))))
        word = AmalgamWord(self, tail.tail, tuple(syl))
        if not self.is_normal(word):
            raise InputError(f"{text!r} is not in normal form")
        return word

    def is_normal(self, w: AmalgamWord) -> bool:
        for idx, (side, rho) in enumerate(w.syllables):
            if not 0 < rho < self.period[side - 1]:
                return False
            if idx and w.syllables[idx - 1][0] == side:
                return False
        return True

    # -- spin generators ----------------------------------------------------------------

    def wspin_generators(self) -> tuple[AmalgamWord, AmalgamWord]:
        """``x_i = k~_i(1/4)`` when ``kappa(i) = 2`` and ``k~_i(1/2)`` when ``kappa(i) = 1``."""
        if not self.spin or self.kappa is None:
            raise BadParityColouring("spin generators need a spin handle with a colouring")
        angles = [Fraction(1, 4) if self.kappa(i) == 2 else Fraction(1, 2) for i in (1, 2)]
        return self.k(1, angles[0]), self.k(2, angles[1])

    # -- concrete model ---------------------------------------------------------------------

    def delta(self, side: int, theta: object):
        """Image of ``k_side(theta)`` in the concrete group ``H^{r,s}`` or ``H~^{r,s}``."""
        k = eighths(_frac(theta))
        mixed_l, mixed_p = (1, 2) if not self.n12 else (2, 1)
        if not self.spin:
            if not self.n12 and not self.n21:
                return (iota1 if side == 1 else iota2)(D(k))
            if self.n12 and self.n21:
                return eps(side, side + 1, D(k), 3)
            return zeta_l(k) if side == mixed_l else zeta_p(k)
        if self.case == "Z4xZ4":
            # Spin(2) x Spin(2) as an honest direct product of two copies of Cl(2)
            x, one = spin_generator_S(k), spin_generator_S(0)
            return ProductElement((x, one) if side == 1 else (one, x))
        if self.case == "Q8":
            return embed(spin_generator_S(k), (side, side + 1), 3)
        return zeta_l_tilde(k) if side == mixed_l else zeta_p_tilde(k)

    def concrete(self, w: AmalgamWord):
        """Evaluate a word in the concrete model through ``t_i -> delta_i(p_i)``."""
        gen = [self.delta(1, self.period[0]), self.delta(2, self.period[1])]
        out = self._power(gen[0], w.tail[0]) * self._power(gen[1], w.tail[1])
        for side, rho in w.syllables:
            out = out * self.delta(side, rho)
        return out

    @staticmethod
    def _power(x, k: int):
        out = x.one()
        for _ in range(k):
            out = out * x
        return out

    def random_word(self, rng: random.Random, length: int, denominators: Sequence[int] = (2, 3, 4, 5, 6, 12)) -> AmalgamWord:
        out = self.from_u(rng.choice(self.u.elements()))
        side = rng.choice((1, 2))
        for _ in range(length):
            q = rng.choice(denominators)
            out = out * self.k(side, Fraction(rng.randrange(1, 2 * q), q))
            side = 3 - side
        return out


def build_group(r: int, s: int, spin: bool = True, kappa: Colouring | Sequence[int] | None = None) -> AmalgamGroup:
    return AmalgamGroup(r, s, spin, kappa)


def mul(w1: AmalgamWord, w2: AmalgamWord) -> AmalgamWord:
    return w1.group.mul(w1, w2)


def utilde_structure(handle: AmalgamGroup) -> dict:
    """Order, commutativity, element-order census and isomorphism tag of ``U~`` (or ``T``)."""
    u = handle.u
    elems = u.elements()
    abelian = all(u.mul(x, y) == u.mul(y, x) for x in elems for y in elems)
    census: dict[int, int] = {}
    for x in elems:
        o = u.order_of(x)
        census[o] = census.get(o, 0) + 1
    order = len(elems)
    if order == 4:
        tag = "Z2xZ2" if census.get(4, 0) == 0 else "Z4"
    elif order == 8 and not abelian and census.get(2, 0) == 1:
        tag = "Q8"
    elif order == 16 and abelian and census.get(2, 0) == 3 and census.get(8, 0) == 0:
        tag = "Z4xZ4"
    elif order == 8 and abelian and census.get(2, 0) == 3 and census.get(8, 0) == 0:
        tag = "Z4xZ2"
    else:
        tag = "unknown"
    return {
        "order": order,
        "abelian": abelian,
        "element_orders": dict(sorted(census.items())),
        "iso_tag": tag,
    }


def wspin_generators(handle: AmalgamGroup) -> tuple[AmalgamWord, AmalgamWord]:
    return handle.wspin_generators()


def utilde_embedding_check(handle: AmalgamGroup) -> dict:
    """The map ``U~ -> H~^{r,s}`` is an injective homomorphism and respects the torus action."""
    elems = [handle.from_u(x) for x in handle.u.elements()]
    images = {w: handle.concrete(w) for w in elems}
    injective = len(set(images.values())) == len(elems)
    homomorphism = all(images[a * b] == images[a] * images[b] for a in elems for b in elems)
    # conjugation identity in the concrete model at every eighth angle
    torus = True
    for i, j in ((1, 2), (2, 1)):
        ti = handle.concrete(handle.t(i))
        n_ij = handle.n12 if i == 1 else handle.n21
        for k in range(8):
            theta = Fraction(k, 4)
            lhs = ti.inverse() * handle.delta(j, theta) * ti
            rhs = handle.delta(j, (1 - 2 * n_ij) * theta)
            torus &= lhs == rhs
    return {"injective": injective, "homomorphism": homomorphism, "torus_action": torus}


def conjugation_identity(handle: AmalgamGroup, i: int, theta: object) -> bool:
    """``t_i^{-1} k_j(theta) t_i = k_j((1 - 2 n(i,j)) theta)`` as normal forms."""
    j = 3 - i
    n_ij = handle.n12 if i == 1 else handle.n21
    t = handle.t(i)
    return t.inverse() * handle.k(j, theta) * t == handle.k(j, (1 - 2 * n_ij) * _frac(theta))


__all__ = [
    "AmalgamGroup",
    "AmalgamWord",
    "UGroup",
    "build_group",
    "mul",
    "utilde_structure",
    "wspin_generators",
    "utilde_embedding_check",
    "conjugation_identity",
]
