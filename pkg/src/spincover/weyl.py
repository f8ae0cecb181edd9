"""Weyl groups, extended Weyl groups and spin-extended Weyl groups.

Presentations are emitted as relator words (lists of signed 1-based
generator indices).  Relations are checked by evaluating words in concrete
finite models: the integer reflection representation for ``W``, orthogonal
and unitary matrix models for ``W~`` and Clifford or ``SO(2) x SU(2)``
models for the spin level.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .amalgam import build_group, conjugation_identity
from .clifford import (
    CliffordElement,
    embed,
    eps_tilde,
    eta_l_tilde,
    eta_p_tilde,
    spin_generator_S,
)
from .colouring import Colouring, c_value, kappa_max, require_admissible
from .diagram import (
    A2,
    C2,
    G2,
    CartanMatrix,
    braid_order_m,
    components,
    is_simply_laced,
    parity_n,
    q_value,
    source_target,
    validate_gcm,
)
from .errors import (
    FormulaMismatch,
    InconsistentColour,
    InputError,
    UnsupportedGlobalModel,
)
from .exactmatrix import ExactMatrix
from .matgroups import (
    D,
    ProductElement,
    SO2xSU2Element,
    closure,
    eps,
    eta_l,
    eta_p,
    zeta_l,
    zeta_l_tilde,
    zeta_p,
    zeta_p_tilde,
)
from .quaternion import UnitQuaternion
from .transform import unfold

FAMILIES = ("W", "Wext", "Wspin", "WspinColoured")
LEVEL_OF_FAMILY = {"W": "W", "Wext": "Wtilde", "Wspin": "What", "WspinColoured": "What"}
GENERATOR_PREFIX = {"W": "s", "Wext": "t", "Wspin": "r", "WspinColoured": "r"}
R2_VARIANTS = ("R2", "R2'", "R2''")

Word = list[int]


# -- presentations --------------------------------------------------------------------


@dataclass(frozen=True)
class Relator:
    tag: str
    word: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"tag": self.tag, "word": list(self.word)}


@dataclass(frozen=True)
class Presentation:
    n: int
    family: str
    relators: tuple[Relator, ...]

    @property
    def generators(self) -> list[str]:
        return [f"{GENERATOR_PREFIX[self.family]}{i}" for i in range(1, self.n + 1)]

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "generators": self.generators,
            "relators": [r.to_dict() for r in self.relators],
        }


def _power(i: int, k: int) -> Word:
    return [i] * k if k >= 0 else [-i] * (-k)


def _inverse(word: Sequence[int]) -> Word:
    return [-g for g in reversed(word)]


def _alternating(i: int, j: int, m: int) -> Word:
    return [i if k % 2 == 0 else j for k in range(m)]


def braid_relator(i: int, j: int, m: int) -> Word:
    """``i j i ... (m factors) = j i j ... (m factors)`` as a relator."""
    return _alternating(i, j, m) + _inverse(_alternating(j, i, m))


def conjugation_relator(i: int, j: int, n_ij: int, variant: str = "R2") -> Word:
    """(R2) and its alternates for the ordered pair ``i != j``."""
    if variant == "R2":
        # r_j^-1 r_i^2 r_j = r_i^2 r_j^{2n}
        return [-j, i, i, j] + _inverse([i, i] + _power(j, 2 * n_ij))
    if variant == "R2'":
        # r_j r_i^2 r_j^-1 = r_i^2 r_j^{-2n}
        return [j, i, i, -j] + _inverse([i, i] + _power(j, -2 * n_ij))
    if variant == "R2''":
        # r_j r_i^2 r_j^-1 = r_j^{2n} r_i^2
        return [j, i, i, -j] + _inverse(_power(j, 2 * n_ij) + [i, i])
    raise InputError(f"unknown conjugation variant {variant!r}")


def presentation(
    cm: CartanMatrix, family: str, kappa: Colouring | None = None, variant: str = "R2"
) -> Presentation:
    if family not in FAMILIES:
        raise InputError(f"family must be one of {FAMILIES}, got {family!r}")
    if family == "WspinColoured":
        if kappa is None:
            raise InputError("the coloured family needs a colouring")
        require_admissible(cm, kappa)
    rels: list[Relator] = []
    order = {"W": 2, "Wext": 4, "Wspin": 8, "WspinColoured": 8}[family]
    first = {"W": "W1", "Wext": "T1", "Wspin": "R1", "WspinColoured": "R1"}[family]
    for i in cm.vertices:
        rels.append(Relator(f"{first}({i})", tuple(_power(i, order))))
    if family != "W":
        tag = "T2" if family == "Wext" else variant
        for i in cm.vertices:
            for j in cm.vertices:
                if i != j:
                    rels.append(Relator(f"{tag}({i},{j})", tuple(conjugation_relator(i, j, parity_n(cm, i, j), variant))))
    braid_tag = {"W": "W2", "Wext": "T3", "Wspin": "R3", "WspinColoured": "R3"}[family]
    for i, j in cm.pairs():
        m = braid_order_m(cm, i, j)
        if m == 0:
            continue
        word = [i, j] * m if family == "W" else braid_relator(i, j, m)
        rels.append(Relator(f"{braid_tag}({i},{j})", tuple(word)))
    if family == "WspinColoured":
        assert kappa is not None
        for i in sorted(kappa.J):
            rels.append(Relator(f"R4({i})", tuple(_power(i, 4))))
    return Presentation(cm.n, family, tuple(rels))


# -- word evaluation ------------------------------------------------------------------------


def evaluate(word: Sequence[int], gens: Sequence[Any], inverses: Sequence[Any] | None = None) -> Any:
    """Product of ``gens[|g|-1]^{sign g}`` over the word (identity for the empty word)."""
    if inverses is None:
        inverses = [g.inverse() for g in gens]
    out = gens[0].one()
    for g in word:
        out = out * (gens[g - 1] if g > 0 else inverses[-g - 1])
    return out


def is_identity(x: Any) -> bool:
    return x == x.one()


# -- the reflection representation -----------------------------------------------------------


class Reflection:
    """An integer matrix in the reflection representation ``s_i(e_j) = e_j - a(i,j) e_i``."""

    __slots__ = ("m", "_key")

    def __init__(self, m: np.ndarray) -> None:
        self.m = m
        self._key = tuple(int(x) for x in m.flat)

    def __mul__(self, other: Reflection) -> Reflection:
        return Reflection(self.m @ other.m)

    def inverse(self) -> Reflection:
        # integer inverse by repeated multiplication is unavailable in general; use the adjugate
        inv = np.rint(np.linalg.inv(self.m)).astype(np.int64)
        if not (self.m @ inv == np.eye(len(self.m), dtype=np.int64)).all():
            raise ArithmeticError("reflection product has no integer inverse")
        return Reflection(inv)

    def one(self) -> Reflection:
        return Reflection(np.eye(len(self.m), dtype=np.int64))

    def key(self) -> tuple:
        return self._key

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Reflection) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)


def reflection_generators(cm: CartanMatrix) -> list[Reflection]:
    a = np.array(cm.a, dtype=np.int64)
    gens = []
    for i in range(cm.n):
        m = np.eye(cm.n, dtype=np.int64)
        m[i, :] -= a[i, :]
        gens.append(Reflection(m))
    return gens


def element_order(x: Any, bound: int = 64) -> int:
    """Order of ``x`` or 0 when it exceeds ``bound``."""
    y = x
    for k in range(1, bound + 1):
        if is_identity(y):
            return k
        y = y * x
    return 0


def reflection_sanity(cm: CartanMatrix) -> bool:
    """``s_i^2 = 1`` and ``s_i s_j`` has order ``m_ij`` (0 meaning infinite)."""
    gens = reflection_generators(cm)
    if not all(is_identity(g * g) for g in gens):
        return False
    for i, j in cm.pairs():
        if element_order(gens[i - 1] * gens[j - 1], 12) != braid_order_m(cm, i, j):
            return False
    return True


# -- rank two generator tables -----------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorTable:
    """Concrete images of the generators of one family in one finite (or amalgam) model."""

    tag: str
    elements: tuple[Any, ...]
    notes: dict = field(default_factory=dict)


def _so_pair(q: int) -> tuple[str, Any, Any]:
    """SO-level images ``(source, target)`` of ``D(pi/2)`` for a spherical rank two edge."""
    if q == 0:
        i2 = ExactMatrix.identity(2)
        return "SO2xSO2", ProductElement((D(2), i2)), ProductElement((i2, D(2)))
    if q == 1:
        return "SO3", eps(1, 2, D(2), 3), eps(2, 3, D(2), 3)
    if q == 2:
        return "U2", zeta_p(2), zeta_l(2)
    if q == 3:
        return "SO4", eta_p(2), eta_l(2)
    raise InputError(f"no SO-level model for q = {q}")


def rank2_table(cm: CartanMatrix, kappa: Colouring, i: int, j: int, level: str = "What") -> tuple[str, Any, Any]:
    """Model tag and images of the generators for vertices ``i`` and ``j``.

    The source ``u`` of the oriented pair ``u -> v`` receives the first
    embedding of the model and the target the second.
    """
    require_admissible(cm, kappa)
    q = q_value(cm, i, j)
    src, tgt = source_target(cm, kappa, i, j)
    ks, kt = kappa(src), kappa(tgt)

    def ordered(tag: str, xs: Any, xt: Any) -> tuple[str, Any, Any]:
        return (tag, xs, xt) if src == i else (tag, xt, xs)

    if level == "W":
        sub = cm.submatrix([src, tgt])
        gs = reflection_generators(sub)
        return ordered("reflection", gs[0], gs[1])
    if q >= 4:
        r, s = -cm(src, tgt), -cm(tgt, src)
        if level == "Wtilde" or ks == kt == 1:
            g = build_group(r, s, spin=False)
            return ordered("K", g.k(1, "1/2"), g.k(2, "1/2"))
        g = build_group(r, s, spin=True, kappa=(ks, kt))
        x1, x2 = g.wspin_generators()
        return ordered(f"K~({g.case})", x1, x2)
    if level == "Wtilde":
        return ordered(*_so_pair(q))
    if level != "What":
        raise InputError(f"unknown level {level!r}")
    if q == 0:
        one = spin_generator_S(0)
        xs = ProductElement((spin_generator_S(1 if ks == 2 else 2), one))
        xt = ProductElement((one, spin_generator_S(1 if kt == 2 else 2)))
        return ordered("Spin2xSpin2", xs, xt)
    if ks == kt == 1:
        return ordered(*_so_pair(q))
    if q == 1 and ks == kt == 2:
        return ordered("Spin3", embed(spin_generator_S(1), (1, 2), 3), embed(spin_generator_S(1), (2, 3), 3))
    if q == 2 and (ks, kt) == (2, 1):
        return ordered("SO2xSU2", zeta_p_tilde(1), zeta_l_tilde(2))
    if q == 3 and ks == kt == 2:
        return ordered("Spin4", eta_p_tilde(1), eta_l_tilde(1))
    raise InconsistentColour(f"colours ({ks}, {kt}) on the oriented pair {src} -> {tgt} with q = {q}")


def _derived_relations(n_ij: int, n_ji: int, xi: Any, xj: Any) -> dict[str, bool]:
    """The consequences of (R2) for one ordered pair."""

    def comm(a: Any, b: Any) -> Any:
        return a.inverse() * b.inverse() * a * b

    def pw(x: Any, k: int) -> Any:
        out = x.one()
        for _ in range(k):
            out = out * x
        return out

    out = {
        "[ri^2,rj^2] = rj^(4n(i,j))": comm(pw(xi, 2), pw(xj, 2)) == pw(xj, 4 * n_ij),
        "ri^(4n(j,i)) = rj^(4n(i,j))": pw(xi, 4 * n_ji) == pw(xj, 4 * n_ij),
        "[rj,ri^4] = 1": is_identity(comm(xj, pw(xi, 4))),
    }
    if n_ij == 1 and n_ji == 1:
        out["ri^4 = rj^4"] = pw(xi, 4) == pw(xj, 4)
    if n_ij == 0 and n_ji == 1:
        out["ri^4 = 1"] = is_identity(pw(xi, 4))
    return out


def verify_relations(cm: CartanMatrix, kappa: Colouring, family: str = "WspinColoured", variant: str = "R2") -> dict:
    """Evaluate every relator of the family pair by pair in the rank two models."""
    require_admissible(cm, kappa)
    level = LEVEL_OF_FAMILY[family]
    pairs = []
    all_pass = True
    for i, j in cm.pairs():
        sub = cm.submatrix([i, j])
        sub_kappa = Colouring((kappa(i), kappa(j)))
        tag, xi, xj = rank2_table(sub, sub_kappa, 1, 2, level)
        pres = presentation(sub, family, sub_kappa if family == "WspinColoured" else None, variant)
        gens = [xi, xj]
        inverses = [xi.inverse(), xj.inverse()]
        results = {r.tag: is_identity(evaluate(r.word, gens, inverses)) for r in pres.relators}
        derived: dict[str, bool] = {}
        if level == "What":
            for (a, b), (xa, xb) in (((1, 2), (xi, xj)), ((2, 1), (xj, xi))):
                for name, ok in _derived_relations(parity_n(sub, a, b), parity_n(sub, b, a), xa, xb).items():
                    derived[f"{name} @ (i,j)=({[i, j][a - 1]},{[i, j][b - 1]})"] = ok
        ok = all(results.values()) and all(derived.values())
        all_pass &= ok
        pairs.append({"pair": [i, j], "model": tag, "relators": results, "derived": derived, "pass": ok})
    return {"family": family, "pairs": pairs, "pass": all_pass}


# -- global models of spherical diagrams --------------------------------------------------------


def _path_order(cm: CartanMatrix, comp: Sequence[int]) -> list[int] | None:
    """Vertices of a simply laced path component in path order, else None."""
    sub = cm.submatrix(comp)
    if not is_simply_laced(sub):
        return None
    nbrs = {v: [w for w in comp if w != v and cm(v, w) != 0] for v in comp}
    if any(len(x) > 2 for x in nbrs.values()):
        return None
    if len(comp) == 1:
        return list(comp)
    ends = [v for v in comp if len(nbrs[v]) == 1]
    if len(ends) != 2:
        return None
    path, prev = [ends[0]], None
    while len(path) < len(comp):
        nxt = [w for w in nbrs[path[-1]] if w != prev]
        prev = path[-1]
        path.append(nxt[0])
    return path


def component_type(cm: CartanMatrix, comp: Sequence[int]) -> str:
    if _path_order(cm, comp) is not None:
        return f"A{len(comp)}"
    if len(comp) == 2:
        q = q_value(cm, comp[0], comp[1])
        if q == 2:
            return "C2"
        if q == 3:
            return "G2"
    raise UnsupportedGlobalModel(f"no global model for the component {list(comp)}")


def _component_generators(cm: CartanMatrix, kappa: Colouring, comp: Sequence[int], level: str) -> dict[int, Any]:
    kind = component_type(cm, comp)
    if kind.startswith("A"):
        path = _path_order(cm, comp)
        assert path is not None
        dim = len(path) + 1
        spin = level == "What" and kappa(path[0]) == 2
        out = {}
        for pos, v in enumerate(path, start=1):
            if spin:
                out[v] = embed(spin_generator_S(1), (pos, pos + 1), dim)
            else:
                out[v] = eps(pos, pos + 1, D(2), dim)
        return out
    src, tgt = source_target(cm, kappa, comp[0], comp[1])
    if level == "What" and not (kappa(src) == kappa(tgt) == 1):
        _, xs, xt = rank2_table(cm.submatrix([src, tgt]), Colouring((kappa(src), kappa(tgt))), 1, 2, "What")
    else:
        _, xs, xt = _so_pair(2 if kind == "C2" else 3)
    return {src: xs, tgt: xt}


def global_generators(cm: CartanMatrix, kappa: Colouring | None, level: str) -> list[Any]:
    """Generator images in a faithful finite model of the whole diagram."""
    if level == "W":
        return reflection_generators(cm)
    if kappa is None:
        kappa = Colouring.constant(cm.n, 1)
    require_admissible(cm, kappa)
    comps = components(cm)
    per_comp = [_component_generators(cm, kappa, comp, level) for comp in comps]
    if len(comps) == 1:
        return [per_comp[0][v] for v in cm.vertices]
    ones = [next(iter(g.values())).one() for g in per_comp]
    out = []
    for v in cm.vertices:
        k = next(idx for idx, comp in enumerate(comps) if v in comp)
        parts = list(ones)
        parts[k] = per_comp[k][v]
        out.append(ProductElement(tuple(parts)))
    return out


def enumerate_order(cm: CartanMatrix, kappa: Colouring | None, level: str, cap: int = 10**6) -> int:
    """Order of ``W``, ``W~`` or ``W^`` by breadth-first closure in a global model."""
    if level not in ("W", "Wtilde", "What"):
        raise InputError(f"level must be W, Wtilde or What, got {level!r}")
    if level != "W":
        for comp in components(cm):
            component_type(cm, comp)
    return closure(global_generators(cm, kappa, level), cap).order


def order_formula_check(cm: CartanMatrix, kappa: Colouring, cap: int = 10**6) -> dict:
    """``|W^| = 2^c |W~|`` and ``|W~| = 2^n |W|`` from three independent enumerations."""
    require_admissible(cm, kappa)
    for comp in components(cm):
        component_type(cm, comp)
    orders = {lvl: enumerate_order(cm, kappa, lvl, cap) for lvl in ("W", "Wtilde", "What")}
    c = c_value(cm, kappa)
    report = {
        "orders": orders,
        "c": c,
        "rank": cm.n,
        "spin_factor": orders["What"] == 2**c * orders["Wtilde"],
        "torus_factor": orders["Wtilde"] == 2**cm.n * orders["W"],
    }
    report["pass"] = report["spin_factor"] and report["torus_factor"]
    if not report["pass"]:
        raise FormulaMismatch(orders)
    return report


def unfold_generator_check(cm: CartanMatrix, kappa: Colouring) -> dict:
    """Map every folded generator into the unfolded spin model and kill every folded relator."""
    require_admissible(cm, kappa)
    if is_simply_laced(cm):
        gens = global_generators(cm, kappa, "What")
        assignment = {v: [v] for v in cm.vertices}
    else:
        un = unfold(cm, kappa)
        ugens = global_generators(un.cm, un.kappa, "What")
        gens, assignment = [], {}
        for v in cm.vertices:
            idx = [un.index(v, 1)]
            if (v, -1) in un.origin:
                idx.append(un.index(v, -1))
            x = ugens[idx[0] - 1]
            for k in idx[1:]:
                x = x * ugens[k - 1]
            gens.append(x)
            assignment[v] = idx
    pres = presentation(cm, "WspinColoured", kappa)
    inverses = [g.inverse() for g in gens]
    results = {r.tag: is_identity(evaluate(r.word, gens, inverses)) for r in pres.relators}
    return {"assignment": {str(k): v for k, v in assignment.items()}, "relators": results, "pass": all(results.values())}


def central_kernel_check(cm: CartanMatrix, kappa: Colouring) -> bool:
    """Every ``r_i^4`` commutes with every generator in the spin model."""
    gens = global_generators(cm, kappa, "What")
    fourth = [g * g * g * g for g in gens]
    return all(f * g == g * f for f in fourth for g in gens)



# -- replay of the rank two case analysis ---------------------------------------------------------


def _check(value: Any, expected: Any, *others: Any) -> dict:
    ok = value == expected and all(o == expected for o in others)
    return {"value": str(value), "expected": str(expected), "pass": ok}


def g2_displayed_generators() -> tuple[CliffordElement, CliffordElement]:
    """The G2 pair exactly as displayed in the case analysis.

    The target element is written there as ``(e1e4 + e1e2e3e4)/sqrt2``.  That is
    ``eps~_14(S(pi/2)) eps~_23(S(pi/4))``, whereas expanding the stated product
    ``eps~_14(S(pi/2)) eps~_23(S(-pi/4))`` gives ``(e1e4 - e1e2e3e4)/sqrt2``.
    Both pairs satisfy every relator; the replay uses the displayed one.
    """
    return eta_p_tilde(1), eps_tilde(1, 4, spin_generator_S(2), 4) * eps_tilde(2, 3, spin_generator_S(1), 4)


def proof_replay() -> dict:
    """Every displayed computation of the rank two case analysis, evaluated exactly."""
    out: dict[str, dict] = {}

    _, xi, xj = rank2_table(A2, kappa_max(A2), 1, 2)
    e13 = CliffordElement.blade(3, 1, 3)
    out["A2: xi^-1 xj^2 xi = -e1e3 = xj^2 xi^2"] = _check(xi.inverse() * xj * xj * xi, -e13, xj * xj * xi * xi)

    xi, xj = g2_displayed_generators()
    e24 = CliffordElement.blade(4, 2, 4)
    vol = CliffordElement.blade(4, 1, 2, 3, 4)
    out["G2: xj = (e1e4 + e1e2e3e4)/sqrt2"] = _check(
        xj, (CliffordElement.blade(4, 1, 4) + vol) * spin_generator_S(1).scalar_part()
    )
    out["G2: xi^-1 xj^2 xi = e2e4 = xj^2 xi^2"] = _check(xi.inverse() * xj * xj * xi, e24, xj * xj * xi * xi)
    out["G2: xj^-1 xi^2 xj = -e2e4 = xi^2 xj^2"] = _check(xj.inverse() * xi * xi * xj, -e24, xi * xi * xj * xj)
    out["G2: (xj xi)^3 = -e1e2e3e4 = (xi xj)^3"] = _check((xj * xi) ** 3, -vol, (xi * xj) ** 3)
    yi, yj = eta_p_tilde(1), eta_l_tilde(1)
    out["G2 (defining product): (xj xi)^3 = e1e2e3e4 = (xi xj)^3"] = _check((yj * yi) ** 3, vol, (yi * yj) ** 3)
    gens = [xi, xj]
    out["G2: displayed pair satisfies every coloured relator"] = {
        "pass": all(is_identity(evaluate(r.word, gens)) for r in presentation(G2, "WspinColoured", kappa_max(G2)).relators)
    }

    src, tgt = source_target(C2, kappa_max(C2), 1, 2)
    _, xi, xj = rank2_table(C2, kappa_max(C2), src, tgt)
    expected = SO2xSU2Element(2, UnitQuaternion(-1))
    out["C2: (xj xi)^2 = (D(pi/2), -I) = (xi xj)^2"] = _check((xj * xi) ** 2, expected, (xi * xj) ** 2)

    a1a1 = validate_gcm([[2, 0], [0, 2]])
    _, xi, xj = rank2_table(a1a1, kappa_max(a1a1), 1, 2)
    out["A1xA1: xi xj = xj xi"] = _check(xi * xj, xj * xi)

    for r, s in ((5, 5), (4, 4), (4, 5), (5, 4)):
        g = build_group(r, s)
        ok = all(conjugation_identity(g, i, theta) for i in (1, 2) for theta in ("1/8", "1/4", "1/3", "1/2", "3/4"))
        out[f"K({r},{s}): t_i^-1 k_j(theta) t_i = k_j((1-2n(i,j)) theta)"] = {"pass": ok}
    return out
