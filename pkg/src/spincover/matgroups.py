"""Exact matrix models of the compact rank one and rank two groups.

All angles are integers ``k`` meaning ``k pi / 4``.  Real orthogonal models
live in ``ExactMatrix`` over ``QSqrt2``; ``U(2)`` and ``SU(2)`` use their
real 4x4 forms in the basis ``e1, i e1, e2, i e2``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Protocol, Sequence, TypeVar

from .clifford import (
    CliffordElement,
    embed,
    quaternion_to_cl3,
    spin4_pair,
    spin_generator_S,
)
from .errors import CapExceeded, InputError
from .exactmatrix import ExactMatrix, rank
from .quaternion import Quaternion, UnitQuaternion
from .scalars import QSqrt2, cos_eighth, sin_eighth

__all__ = [
    "ExactMatrix",
    "rank",
    "UnitQuaternion",
    "D",
    "eps",
    "iota1",
    "iota2",
    "zeta_p",
    "zeta_l",
    "eta_p",
    "eta_l",
    "L",
    "R",
    "SO2xSU2Element",
    "zeta_p_tilde",
    "zeta_l_tilde",
    "rho_hat",
    "zeta_tilde",
    "SO4Pair",
    "eta",
    "spin4_to_so2su2",
    "closure",
    "ClosureResult",
    "ProductElement",
    "conjugation_identity_suite",
]


# -- rotations and embeddings ----------------------------------------------------


def D(k: int) -> ExactMatrix:
    """``D(k pi/4) = [[cos, sin], [-sin, cos]]``."""
    c, s = cos_eighth(k), sin_eighth(k)
    return ExactMatrix([[c, s], [-s, c]])


def eps(i: int, j: int, m: ExactMatrix, n: int) -> ExactMatrix:
    """``eps_ij``: place a 2x2 matrix on coordinates ``i, j`` of the n x n identity."""
    rows = [list(r) for r in ExactMatrix.identity(n).rows]
    for a, p in enumerate((i, j)):
        for b, q in enumerate((i, j)):
            rows[p - 1][q - 1] = m.rows[a][b]
    return ExactMatrix(rows)


def iota1(m: ExactMatrix) -> ExactMatrix:
    """First factor of ``SO(2) x SO(2)`` inside ``SO(4)``."""
    return eps(1, 2, m, 4)


def iota2(m: ExactMatrix) -> ExactMatrix:
    """Second factor of ``SO(2) x SO(2)`` inside ``SO(4)``."""
    return eps(3, 4, m, 4)


def zeta_p(k: int) -> ExactMatrix:
    """Point-stabilizing circle in ``U(2)``: ``diag(1, 1, D)``."""
    return eps(3, 4, D(k), 4)


def D_tilde(k: int) -> ExactMatrix:
    c, s = cos_eighth(k), sin_eighth(k)
    z = QSqrt2.zero()
    return ExactMatrix([[c, z, s, z], [z, c, z, s], [-s, z, c, z], [z, -s, z, c]])


def zeta_l(k: int) -> ExactMatrix:
    """Line-stabilizing circle in ``U(2)``: ``D~(alpha)``."""
    return D_tilde(k)


def eta_p(k: int) -> ExactMatrix:
    return eps(3, 4, D(k), 4)


def eta_l(k: int) -> ExactMatrix:
    """``eta_l(D(alpha)) = eps_14(D(2 alpha)) eps_23(D(-alpha))``."""
    return eps(1, 4, D(2 * k), 4) * eps(2, 3, D(-k), 4)


# -- quaternion translations --------------------------------------------------------


def L(x: Quaternion) -> ExactMatrix:
    """Matrix of left multiplication by ``x`` in the basis ``1, i, j, k``."""
    a, b, c, d = x.coords
    return ExactMatrix([[a, -b, -c, -d], [b, a, -d, c], [c, d, a, -b], [d, -c, b, a]])


def R(x: Quaternion) -> ExactMatrix:
    """The companion right translation matrix; ``R_x R_y = R_{xy}``."""
    a, b, c, d = x.coords
    return ExactMatrix([[a, b, c, d], [-b, a, -d, c], [-c, d, a, -b], [-d, -c, b, a]])


def quaternion_from_R(m: ExactMatrix) -> Quaternion:
    """``psi^{-1}``: read ``q`` off the first row of ``R_q``."""
    return Quaternion(*m.rows[0])


_J = Quaternion(0, 0, 1, 0)


def _conj_by_j(q: Quaternion) -> Quaternion:
    return _J * q * _J.conjugate()


@dataclass(frozen=True)
class SO2xSU2Element:
    """``(z, A)`` with ``z = D(k pi/4)`` and ``A = R_q`` for a unit quaternion ``q``."""

    k: int
    q: UnitQuaternion

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", self.k % 8)
        if not isinstance(self.q, UnitQuaternion):
            object.__setattr__(self, "q", UnitQuaternion.of(self.q))

    def __mul__(self, other: SO2xSU2Element) -> SO2xSU2Element:
        return SO2xSU2Element(self.k + other.k, UnitQuaternion.of(self.q * other.q))

    def __pow__(self, e: int) -> SO2xSU2Element:
        base = self if e >= 0 else self.inverse()
        out = self.one()
        for _ in range(abs(e)):
            out = out * base
        return out

    def inverse(self) -> SO2xSU2Element:
        return SO2xSU2Element(-self.k, self.q.inverse())

    def one(self) -> SO2xSU2Element:
        return SO2xSU2Element(0, UnitQuaternion(1))

    def z(self) -> ExactMatrix:
        return D(self.k)

    def A(self) -> ExactMatrix:
        return R(self.q)

    def key(self) -> tuple:
        return (self.k, self.q.key())

    def __hash__(self) -> int:
        return hash(self.key())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SO2xSU2Element):
            return NotImplemented
        return self.k == other.k and self.q == other.q

    def __str__(self) -> str:
        return f"(D({self.k}pi/4), R[{', '.join(str(c) for c in self.q.coords)}])"


def zeta_p_tilde(k: int) -> SO2xSU2Element:
    """``S(alpha) -> (D(alpha), diag(D(-alpha), D(alpha)))``."""
    return SO2xSU2Element(k, UnitQuaternion(cos_eighth(k), -sin_eighth(k), 0, 0))


def zeta_l_tilde(k: int) -> SO2xSU2Element:
    """``S(alpha) -> (id, D~(alpha))``."""
    return SO2xSU2Element(0, UnitQuaternion(cos_eighth(k), 0, sin_eighth(k), 0))


def rho_hat(e: SO2xSU2Element) -> ExactMatrix:
    """``(z, A) -> diag(z, z) A`` in ``U(2)`` as a real 4x4 matrix."""
    return ExactMatrix.block_diag(e.z(), e.z()) * e.A()


def zeta_tilde(e: SO2xSU2Element) -> CliffordElement:
    """The epimorphism ``SO(2) x SU(2) -> Spin(3)``: ``(z, A) -> psi^{-1}(A)``."""
    return quaternion_to_cl3(quaternion_from_R(e.A()))


def spin4_to_so2su2(x: CliffordElement) -> SO2xSU2Element:
    """Identify the image of ``SO(2) x SU(2)`` inside ``Spin(4)``.

    With ``x = u + I v`` the left factor ``u + v`` must lie in the circle
    ``cos - sin i`` and gives ``z``; the right factor ``u - v`` is
    conjugated by ``j`` to give the ``SU(2)`` quaternion.  This is the
    normalization under which ``zeta~_p = eps~_34`` and
    ``zeta~_l o sq = eps~_23 . eps~_14`` hold simultaneously.
    """
    left, right = spin4_pair(x)
    if not (left.c.is_zero() and left.d.is_zero()):
        raise InputError("left factor is not in the circle of SO(2)")
    for k in range(8):
        if left.a == cos_eighth(k) and left.b == -sin_eighth(k):
            return SO2xSU2Element(k, UnitQuaternion.of(_conj_by_j(right)))
    raise InputError("left factor is not at a multiple of pi/4")


# -- SO(4) as quaternion pairs -------------------------------------------------------


@dataclass(frozen=True)
class SO4Pair:
    """An element of ``SO(4)`` carried as ``(a, b)`` acting by ``x -> a x b^{-1}``."""

    a: UnitQuaternion
    b: UnitQuaternion

    def __mul__(self, other: SO4Pair) -> SO4Pair:
        return SO4Pair(UnitQuaternion.of(self.a * other.a), UnitQuaternion.of(self.b * other.b))

    def matrix(self) -> ExactMatrix:
        return L(self.a) * R(self.b)

    def inverse(self) -> SO4Pair:
        return SO4Pair(self.a.inverse(), self.b.inverse())

    def one(self) -> SO4Pair:
        return SO4Pair(UnitQuaternion(1), UnitQuaternion(1))

    def key(self) -> tuple:
        return (self.a.key(), self.b.key())


def eta(m: SO4Pair) -> ExactMatrix:
    """``(x -> a x b^{-1}) -> (x -> a x a^{-1})`` restricted to the pure quaternions."""
    full = L(m.a) * R(m.a)
    return ExactMatrix([row[1:] for row in full.rows[1:]])


# -- generic closure ---------------------------------------------------------------


class GroupElement(Protocol):
    def __mul__(self, other): ...

    def __eq__(self, other) -> bool: ...

    def __hash__(self) -> int: ...

    def key(self) -> Hashable: ...


G = TypeVar("G", bound=GroupElement)


@dataclass(frozen=True)
class ClosureResult:
    order: int
    elements: list

    def to_dict(self, generator_count: int) -> dict:
        return {"order": self.order, "cap_hit": False, "generator_count": generator_count}


def closure(generators: Sequence[G], cap: int = 10**6, identity: G | None = None) -> ClosureResult:
    """Breadth-first closure of a finite group; elements sorted by ``key()``."""
    if cap <= 0:
        raise InputError("cap must be positive")
    gens = list(generators)
    if identity is None:
        if not gens:
            raise InputError("closure of an empty generator list needs an identity")
        identity = gens[0].one()
    seen = {identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for h in gens:
            x = g * h
            if x not in seen:
                seen.add(x)
                if len(seen) > cap:
                    raise CapExceeded(cap, len(queue))
                queue.append(x)
    return ClosureResult(len(seen), sorted(seen, key=lambda e: e.key()))


@dataclass(frozen=True)
class ProductElement:
    """Componentwise product of elements of several groups."""

    parts: tuple

    def __mul__(self, other: ProductElement) -> ProductElement:
        return ProductElement(tuple(a * b for a, b in zip(self.parts, other.parts)))

    def inverse(self) -> ProductElement:
        return ProductElement(tuple(a.inverse() for a in self.parts))

    def one(self) -> ProductElement:
        return ProductElement(tuple(a.one() for a in self.parts))

    def key(self) -> tuple:
        return tuple(a.key() for a in self.parts)

    def __pow__(self, e: int) -> ProductElement:
        base = self if e >= 0 else self.inverse()
        out = self.one()
        for _ in range(abs(e)):
            out = out * base
        return out


# -- conjugation automorphisms ------------------------------------------------------

GAMMA_D_SO3 = ExactMatrix.from_ints([[0, 0, 1], [0, -1, 0], [1, 0, 0]])
GAMMA_B_SO3 = ExactMatrix.diag([1, -1, -1])
GAMMA_C_SO3 = ExactMatrix.diag([-1, -1, 1])
GAMMA_B_G2 = ExactMatrix.diag([-1, 1, 1, -1])
GAMMA_C_G2 = ExactMatrix.diag([-1, -1, 1, 1])
GAMMA_B_C2 = ExactMatrix.diag([-1, 1, -1, 1])
GAMMA_C_C2 = ExactMatrix.diag([-1, -1, 1, 1])

# e1 <-> e2 relabelling under which the SO(4) forms of zeta_p, zeta_l match eps_34, eps_23 . eps_14
SWAP12 = ExactMatrix.from_ints([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])


def _conj(g: ExactMatrix) -> Callable[[ExactMatrix], ExactMatrix]:
    gi = g.inverse()
    return lambda m: g * m * gi


def conjugation_identity_suite() -> dict[str, bool]:
    """Check every conjugation and coordinate identity on all angles ``k pi/4``."""
    e12 = lambda k: eps(1, 2, D(k), 3)  # noqa: E731
    e23 = lambda k: eps(2, 3, D(k), 3)  # noqa: E731
    gD, gB, gC = _conj(GAMMA_D_SO3), _conj(GAMMA_B_SO3), _conj(GAMMA_C_SO3)
    gBg, gCg = _conj(GAMMA_B_G2), _conj(GAMMA_C_G2)
    gBc, gCc = _conj(GAMMA_B_C2), _conj(GAMMA_C_C2)
    swap = _conj(SWAP12)
    checks: dict[str, Callable[[int], bool]] = {
        "A2: gamma_D o eps12 = eps23": lambda k: gD(e12(k)) == e23(k),
        "A2: gamma_D o eps23 = eps12": lambda k: gD(e23(k)) == e12(k),
        "A2: gamma_B o eps12 = eps12 o inv": lambda k: gB(e12(k)) == e12(-k),
        "A2: gamma_B o eps23 = eps23": lambda k: gB(e23(k)) == e23(k),
        "A2: gamma_C o eps12 = eps12": lambda k: gC(e12(k)) == e12(k),
        "A2: gamma_C o eps23 = eps23 o inv": lambda k: gC(e23(k)) == e23(-k),
        "C2: gamma_B o zeta_p = zeta_p o inv": lambda k: gBc(zeta_p(k)) == zeta_p(-k),
        "C2: gamma_B o zeta_l = zeta_l": lambda k: gBc(zeta_l(k)) == zeta_l(k),
        "C2: gamma_C o zeta_p = zeta_p": lambda k: gCc(zeta_p(k)) == zeta_p(k),
        "C2: gamma_C o zeta_l = zeta_l o inv": lambda k: gCc(zeta_l(k)) == zeta_l(-k),
        "G2: gamma_B o eta_p = eta_p o inv": lambda k: gBg(eta_p(k)) == eta_p(-k),
        "G2: gamma_B o eta_l = eta_l": lambda k: gBg(eta_l(k)) == eta_l(k),
        "G2: gamma_C o eta_p = eta_p": lambda k: gCg(eta_p(k)) == eta_p(k),
        "G2: gamma_C o eta_l = eta_l o inv": lambda k: gCg(eta_l(k)) == eta_l(-k),
        "C2: zeta_p = eps34 (e1,e2 relabelled)": lambda k: swap(eps(3, 4, D(k), 4)) == zeta_p(k),
        "C2: zeta_l = eps23 . eps14 (e1,e2 relabelled)": lambda k: swap(eps(2, 3, D(k), 4) * eps(1, 4, D(k), 4))
        == zeta_l(k),
        "C2: rho_hat o zeta~_p = zeta_p o rho_2": lambda k: rho_hat(zeta_p_tilde(k)) == zeta_p(2 * k),
        "C2: rho_hat o zeta~_l o sq = zeta_l o rho_2": lambda k: rho_hat(zeta_l_tilde(k) ** 2) == zeta_l(2 * k),
        "C2: zeta~ o zeta~_p = eps~12 o inv": lambda k: zeta_tilde(zeta_p_tilde(k))
        == embed(spin_generator_S(-k), (1, 2), 3),
        "C2: zeta~ o zeta~_l = eps~23": lambda k: zeta_tilde(zeta_l_tilde(k)) == embed(spin_generator_S(k), (2, 3), 3),
        "C2: zeta~_p = eps~34 in Spin(4)": lambda k: spin4_to_so2su2(embed(spin_generator_S(k), (3, 4), 4))
        == zeta_p_tilde(k),
        "C2: zeta~_l o sq = eps~23 . eps~14 in Spin(4)": lambda k: spin4_to_so2su2(
            embed(spin_generator_S(k), (2, 3), 4) * embed(spin_generator_S(k), (1, 4), 4)
        )
        == zeta_l_tilde(k) ** 2,
        "G2: eta_p = L_a R_a, a = cos(alpha/2) - sin(alpha/2) i": lambda k: eta_p(2 * k)
        == L(Quaternion(cos_eighth(k), -sin_eighth(k))) * R(Quaternion(cos_eighth(k), -sin_eighth(k))),
    }
    return {name: all(f(k) for k in range(8)) for name, f in checks.items()}


def orthogonal_everywhere(mats: Iterable[ExactMatrix]) -> bool:
    return all(m.is_orthogonal() for m in mats)
