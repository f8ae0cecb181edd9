"""Admissible colourings of augmented Dynkin diagrams.

A colouring assigns 1 or 2 to every vertex.  It is admissible when

(a) ``kappa(i) = 1`` whenever some ``j`` has ``n(i,j) = 0`` and ``n(j,i) = 1``, and
(b) ``kappa`` is constant on each component of the graph ``Pi^adm`` whose
    edges are the pairs with ``n(i,j) = n(j,i) = 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .diagram import CartanMatrix, _components, components, parity_n
from .errors import InputError, NotAdmissible


@dataclass(frozen=True)
class Colouring:
    """Dense vertex colouring; ``kappa(i)`` reads the value at vertex ``i`` (1-based)."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(v not in (1, 2) for v in self.values):
            raise InputError(f"colour values must be 1 or 2, got {list(self.values)}")

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def J(self) -> frozenset[int]:
        """Vertices coloured 1."""
        return frozenset(i for i, v in enumerate(self.values, start=1) if v == 1)

    def kappa_ij(self, i: int, j: int) -> float:
        return (self(i) + self(j)) / 2

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values)

    def to_list(self) -> list[int]:
        return list(self.values)

    @classmethod
    def of(cls, values: Sequence[int]) -> Colouring:
        return cls(tuple(int(v) for v in values))

    @classmethod
    def constant(cls, n: int, value: int) -> Colouring:
        return cls((value,) * n)


@dataclass(frozen=True)
class AdmGraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def components(self) -> list[list[int]]:
        return _components(len(self.vertices), self.edges)


def adm_graph(cm: CartanMatrix) -> AdmGraph:
    edges = tuple((i, j) for i, j in cm.pairs() if parity_n(cm, i, j) == 1 and parity_n(cm, j, i) == 1)
    return AdmGraph(tuple(cm.vertices), edges)


def _condition_a(cm: CartanMatrix) -> set[int]:
    out = set()
    for i in cm.vertices:
        for j in cm.vertices:
            if i != j and parity_n(cm, i, j) == 0 and parity_n(cm, j, i) == 1:
                out.add(i)
                break
    return out


def forced_ones(cm: CartanMatrix) -> frozenset[int]:
    """Vertices every admissible colouring sends to 1."""
    seeds = _condition_a(cm)
    out: set[int] = set()
    for comp in adm_graph(cm).components():
        if seeds.intersection(comp):
            out.update(comp)
    return frozenset(out)


def _check_length(cm: CartanMatrix, kappa: Colouring) -> None:
    if len(kappa) != cm.n:
        raise InputError(f"colouring has {len(kappa)} values for {cm.n} vertices")


def is_admissible(cm: CartanMatrix, kappa: Colouring) -> bool:
    _check_length(cm, kappa)
    if any(kappa(i) != 1 for i in forced_ones(cm)):
        return False
    return all(kappa(i) == kappa(j) for i, j in adm_graph(cm).edges)


def require_admissible(cm: CartanMatrix, kappa: Colouring) -> None:
    if not is_admissible(cm, kappa):
        raise NotAdmissible(f"colouring {kappa.to_list()} is not admissible")


def kappa_max(cm: CartanMatrix) -> Colouring:
    forced = forced_ones(cm)
    return Colouring(tuple(1 if i in forced else 2 for i in cm.vertices))


def trivial(cm: CartanMatrix) -> Colouring:
    return Colouring.constant(cm.n, 1)


def colouring_sum(k1: Colouring, k2: Colouring) -> Colouring:
    """Pointwise maximum of two colourings."""
    if len(k1) != len(k2):
        raise InputError("colourings of different lengths")
    return Colouring(tuple(max(a, b) for a, b in zip(k1.values, k2.values)))


def c_value(cm: CartanMatrix, kappa: Colouring) -> int:
    """Number of ``Pi^adm`` components on which ``kappa`` is 2."""
    require_admissible(cm, kappa)
    return sum(1 for comp in adm_graph(cm).components() if kappa(comp[0]) == 2)


def free_components(cm: CartanMatrix) -> list[list[int]]:
    """``Pi^adm`` components that admissibility leaves free to take value 2."""
    forced = forced_ones(cm)
    return [comp for comp in adm_graph(cm).components() if comp[0] not in forced]


def _colour_components(cm: CartanMatrix, comps: Sequence[Sequence[int]]) -> Colouring:
    vals = [1] * cm.n
    for comp in comps:
        for v in comp:
            vals[v - 1] = 2
    return Colouring(tuple(vals))


def elementary_list(cm: CartanMatrix) -> list[Colouring]:
    """Admissible colourings with ``c = 1``, ordered by their component's least vertex."""
    return [_colour_components(cm, [comp]) for comp in free_components(cm)]


def enumerate_admissible(cm: CartanMatrix) -> list[Colouring]:
    """All admissible colourings in a deterministic order (trivial colouring first)."""
    free = free_components(cm)
    out = []
    for k in range(len(free) + 1):
        for chosen in itertools.combinations(free, k):
            out.append(_colour_components(cm, chosen))
    return out


def is_proper(cm: CartanMatrix, kappa: Colouring) -> bool:
    """Every component of the diagram contains a vertex coloured 2."""
    require_admissible(cm, kappa)
    return all(any(kappa(v) == 2 for v in comp) for comp in components(cm))


def decompose(cm: CartanMatrix, kappa: Colouring) -> list[Colouring]:
    """The elementary colourings whose sum is ``kappa``."""
    require_admissible(cm, kappa)
    return [e for e in elementary_list(cm) if all(e(i) <= kappa(i) for i in cm.vertices)]


def membership_table(cm: CartanMatrix, kappa: Colouring) -> list[dict]:
    """One row per ``Pi^adm`` component: vertices, colour and whether it is forced."""
    forced = forced_ones(cm)
    return [
        {"component": comp, "colour": kappa(comp[0]), "forced": comp[0] in forced}
        for comp in adm_graph(cm).components()
    ]
