"""Diagram transforms: the doubly laced reduction and the simply laced unfolding.

``dl_reduce`` rewrites every edge according to its parities and colours so
that the result is doubly laced with the same orientation.  ``unfold``
doubles the colour-1 vertices of every non simply laced component, which
turns a doubly laced diagram into a simply laced one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .colouring import Colouring, c_value, require_admissible
from .diagram import (
    CartanMatrix,
    components,
    direction,
    is_doubly_laced,
    is_simply_laced,
    parity_n,
    q_value,
    validate_gcm,
)
from .errors import C2ColourViolation, NotDoublyLaced


def _odd_even_source(cm: CartanMatrix, kappa: Colouring, i: int, j: int) -> int | None:
    """The endpoint ``u`` with ``a(u,v)`` odd, ``a(v,u)`` even and ``kappa(u) = 2``, if any."""
    for u, v in ((i, j), (j, i)):
        if parity_n(cm, u, v) == 1 and parity_n(cm, v, u) == 0 and kappa(u) == 2:
            return u
    return None


def dl_pair(cm: CartanMatrix, kappa: Colouring, i: int, j: int) -> tuple[int, int]:
    """New ``(a(i,j), a(j,i))`` for one pair under the reduction."""
    q = q_value(cm, i, j)
    if q == 0:
        return (0, 0)
    if q >= 4 and parity_n(cm, i, j) == 0 and parity_n(cm, j, i) == 0:
        return (0, 0)
    if q >= 2 and q != 3:
        u = _odd_even_source(cm, kappa, i, j)
        if u is not None:
            # a double edge u -> v has a(u,v) = -1 and a(v,u) = -2
            return (-1, -2) if u == i else (-2, -1)
    return (-1, -1)


def dl_reduce(cm: CartanMatrix, kappa: Colouring) -> tuple[CartanMatrix, Colouring]:
    """The doubly laced diagram ``Pi^dl`` together with the unchanged colouring."""
    require_admissible(cm, kappa)
    rows = [[2 if r == c else 0 for c in range(cm.n)] for r in range(cm.n)]
    for i, j in cm.pairs():
        rows[i - 1][j - 1], rows[j - 1][i - 1] = dl_pair(cm, kappa, i, j)
    return validate_gcm(rows, cm.labels), kappa


def check_c_preserved(cm: CartanMatrix, kappa: Colouring) -> bool:
    reduced, _ = dl_reduce(cm, kappa)
    return c_value(cm, kappa) == c_value(reduced, kappa)


def orientation_preserved(cm: CartanMatrix, kappa: Colouring) -> bool:
    """Every surviving directed edge of ``Pi^dl`` points the same way as in ``Pi``."""
    reduced, _ = dl_reduce(cm, kappa)
    for i, j in cm.pairs():
        if q_value(reduced, i, j) == 2 and direction(reduced, kappa, i, j) != direction(cm, kappa, i, j):
            return False
    return True


def check_c2_hypothesis(cm: CartanMatrix, kappa: Colouring) -> None:
    """Raise unless every C2 pair ``u -> v`` has ``kappa(u) = 2``."""
    for i, j in cm.pairs():
        if q_value(cm, i, j) == 2:
            u, v = (i, j) if direction(cm, kappa, i, j) else (j, i)
            if kappa(u) != 2:
                raise C2ColourViolation(f"C2 pair {u} -> {v} has kappa({u}) = 1")


@dataclass(frozen=True)
class Unfolded:
    """An unfolded diagram with the origin ``(vertex, sign)`` of every new vertex."""

    cm: CartanMatrix
    kappa: Colouring
    origin: tuple[tuple[int, int], ...]

    def index(self, vertex: int, sign: int = 1) -> int:
        """1-based index of ``+vertex`` or ``-vertex`` in the unfolded diagram."""
        return self.origin.index((vertex, sign)) + 1


def unfold(cm: CartanMatrix, kappa: Colouring) -> Unfolded:
    """Unfold a doubly laced diagram, component by component."""
    if not is_doubly_laced(cm):
        raise NotDoublyLaced("unfolding needs a doubly laced diagram")
    require_admissible(cm, kappa)
    check_c2_hypothesis(cm, kappa)

    comp_of: dict[int, int] = {}
    unfolded_comp: dict[int, bool] = {}
    for k, comp in enumerate(components(cm)):
        for v in comp:
            comp_of[v] = k
        unfolded_comp[k] = not is_simply_laced(cm.submatrix(comp))

    def doubled(v: int) -> bool:
        return unfolded_comp[comp_of[v]] and kappa(v) == 1

    origin = [(v, 1) for v in cm.vertices] + [(v, -1) for v in cm.vertices if doubled(v)]
    labels = [cm.labels[v - 1] for v in cm.vertices] + [cm.labels[v - 1] + "'" for v in cm.vertices if doubled(v)]

    def entry(x: tuple[int, int], y: tuple[int, int]) -> int:
        (i, si), (j, sj) = x, y
        if x == y:
            return 2
        if comp_of[i] != comp_of[j]:
            return 0
        if not unfolded_comp[comp_of[i]]:
            return cm(i, j)
        if kappa(i) != kappa(j):
            return 0 if cm(i, j) == 0 else -1
        if si * sj > 0:
            return cm(i, j)
        return 0

    rows = [[entry(x, y) for y in origin] for x in origin]
    new_kappa = tuple(2 if unfolded_comp[comp_of[v]] else kappa(v) for v, _ in origin)
    return Unfolded(validate_gcm(rows, labels), Colouring(new_kappa), tuple(origin))


def graph_isomorphic(cm1: CartanMatrix, cm2: CartanMatrix) -> bool:
    """Brute-force isomorphism test of two small Cartan matrices."""
    if cm1.n != cm2.n:
        return False
    n = cm1.n
    for perm in itertools.permutations(range(1, n + 1)):
        if all(cm1(i, j) == cm2(perm[i - 1], perm[j - 1]) for i in range(1, n + 1) for j in range(1, n + 1)):
            return True
    return False
