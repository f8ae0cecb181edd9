"""Generalized Cartan matrices and their augmented Dynkin diagrams.

The integer matrix is the single source of truth.  Edge classes, parities,
braid orders and orientations are derived views computed on demand.
Vertices are numbered ``1..n`` in every public function.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import (
    DiagonalNotTwo,
    InputError,
    MalformedMatrix,
    PositiveOffDiagonal,
    SameVertex,
    ZeroNotSymmetric,
)

if TYPE_CHECKING:
    from .colouring import Colouring


class EdgeKind(enum.Enum):
    NONE = "None"
    A2 = "A2"
    C2 = "C2"
    G2 = "G2"
    INFINITY = "Infinity"


@dataclass(frozen=True)
class EdgeClass:
    kind: EdgeKind
    q: int
    annotations: tuple[int, int] | None = None

    def to_dict(self) -> dict:
        out: dict = {"class": self.kind.value, "q": self.q}
        if self.annotations is not None:
            out["annotations"] = list(self.annotations)
        return out


@dataclass(frozen=True)
class CartanMatrix:
    """A validated generalized Cartan matrix with optional vertex labels."""

    a: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = field(default=())

    @property
    def n(self) -> int:
        return len(self.a)

    def __post_init__(self) -> None:
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(1, self.n + 1)))

    def __call__(self, i: int, j: int) -> int:
        """The entry ``a(i, j)`` with 1-based indices."""
        return self.a[i - 1][j - 1]

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def pairs(self) -> Iterable[tuple[int, int]]:
        """Unordered pairs ``i < j``."""
        for i in self.vertices:
            for j in range(i + 1, self.n + 1):
                yield i, j

    def to_json_dict(self) -> dict:
        return {"cartan": [list(row) for row in self.a], "labels": list(self.labels)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def submatrix(self, idx: Sequence[int]) -> CartanMatrix:
        return CartanMatrix(
            tuple(tuple(self(i, j) for j in idx) for i in idx),
            tuple(self.labels[i - 1] for i in idx),
        )


def validate_gcm(matrix: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> CartanMatrix:
    """Check the three GCM axioms and return a :class:`CartanMatrix`.

    Errors name the violated axiom and the first offending 1-based entry,
    scanning row by row.
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0:
        raise MalformedMatrix("empty matrix")
    for r, row in enumerate(rows, start=1):
        if len(row) != n:
            raise MalformedMatrix(f"row {r} has length {len(row)}, expected {n}")
        for c, x in enumerate(row, start=1):
            if isinstance(x, bool) or not isinstance(x, int):
                raise MalformedMatrix(f"entry ({r},{c}) is not an integer: {x!r}")
    for i in range(n):
        for j in range(n):
            x = rows[i][j]
            if i == j:
                if x != 2:
                    raise DiagonalNotTwo((i + 1, j + 1), f"a({i+1},{j+1}) = {x}")
            elif x > 0:
                raise PositiveOffDiagonal((i + 1, j + 1), f"a({i+1},{j+1}) = {x}")
            elif x == 0 and rows[j][i] != 0:
                raise ZeroNotSymmetric((i + 1, j + 1), f"a({i+1},{j+1}) = 0 but a({j+1},{i+1}) = {rows[j][i]}")
    if labels is not None:
        if len(labels) != n:
            raise MalformedMatrix(f"{len(labels)} labels for {n} vertices")
        labels = tuple(str(s) for s in labels)
    return CartanMatrix(tuple(tuple(r) for r in rows), tuple(labels or ()))


def from_json(text: str) -> CartanMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or "cartan" not in doc:
        raise InputError('diagram JSON must be an object with a "cartan" key')
    return validate_gcm(doc["cartan"], doc.get("labels"))


def _check_pair(cm: CartanMatrix, i: int, j: int) -> None:
    if i == j:
        raise SameVertex(f"vertex {i} paired with itself")
    for v in (i, j):
        if not 1 <= v <= cm.n:
            raise InputError(f"vertex {v} outside 1..{cm.n}")


def q_value(cm: CartanMatrix, i: int, j: int) -> int:
    _check_pair(cm, i, j)
    return cm(i, j) * cm(j, i)


def edge_class(cm: CartanMatrix, i: int, j: int) -> EdgeClass:
    q = q_value(cm, i, j)
    if q >= 4:
        return EdgeClass(EdgeKind.INFINITY, q, (-cm(i, j), -cm(j, i)))
    kind = (EdgeKind.NONE, EdgeKind.A2, EdgeKind.C2, EdgeKind.G2)[q]
    return EdgeClass(kind, q)


def parity_n(cm: CartanMatrix, i: int, j: int) -> int:
    """``n(i, j)``: 1 if ``a(i, j)`` is odd, else 0."""
    _check_pair(cm, i, j)
    return cm(i, j) % 2


_M_TABLE = {0: 2, 1: 3, 2: 4, 3: 6}


def braid_order_m(cm: CartanMatrix, i: int, j: int) -> int:
    """``m_ij`` in {2, 3, 4, 6, 0}; 0 encodes "no braid relation"."""
    return _M_TABLE.get(q_value(cm, i, j), 0)


def is_directed_edge(cm: CartanMatrix, i: int, j: int) -> bool:
    """True for C2/G2 edges and mixed-parity infinity edges."""
    q = q_value(cm, i, j)
    if q in (2, 3):
        return True
    return q >= 4 and parity_n(cm, i, j) != parity_n(cm, j, i)


def direction(cm: CartanMatrix, kappa: "Colouring | None", i: int, j: int) -> bool:
    """Orientation of the pair: ``True`` means ``i -> j``.

    Directed edges keep their arrow; otherwise the vertex with larger colour
    points to the smaller one; otherwise the larger label points to the
    smaller one.
    """
    q = q_value(cm, i, j)
    if q in (2, 3):
        # i <- j iff a(i,j) = -q < -1 = a(j,i)
        return not cm(i, j) < cm(j, i)
    if q >= 4 and parity_n(cm, i, j) != parity_n(cm, j, i):
        # i <- j iff a(i,j) even
        return parity_n(cm, i, j) == 1
    if kappa is not None and kappa(i) != kappa(j):
        return kappa(i) > kappa(j)
    return i > j


def source_target(cm: CartanMatrix, kappa: "Colouring | None", i: int, j: int) -> tuple[int, int]:
    """The pair ordered as ``(u, v)`` with ``u -> v``."""
    return (i, j) if direction(cm, kappa, i, j) else (j, i)


def components(cm: CartanMatrix) -> list[list[int]]:
    """Connected components of the underlying graph, sorted by least vertex."""
    return _components(cm.n, [(i, j) for i, j in cm.pairs() if cm(i, j) != 0])


def _components(n: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def is_simply_laced(cm: CartanMatrix) -> bool:
    return all(q_value(cm, i, j) in (0, 1) and cm(i, j) in (0, -1) for i, j in cm.pairs())


def is_doubly_laced(cm: CartanMatrix) -> bool:
    return all(q_value(cm, i, j) in (0, 1, 2) for i, j in cm.pairs())


def is_two_spherical(cm: CartanMatrix) -> bool:
    return all(q_value(cm, i, j) <= 3 for i, j in cm.pairs())


def from_edges(n: int, edges: dict[tuple[int, int], tuple[int, int]]) -> CartanMatrix:
    """Rebuild a Cartan matrix from ``{(i, j): (a(i,j), a(j,i))}`` data."""
    rows = [[2 if r == c else 0 for c in range(n)] for r in range(n)]
    for (i, j), (aij, aji) in edges.items():
        rows[i - 1][j - 1] = aij
        rows[j - 1][i - 1] = aji
    return validate_gcm(rows)


def diagram_view(cm: CartanMatrix) -> dict:
    """The augmented diagram as plain data: classes, parities and directions."""
    edges = []
    for i, j in cm.pairs():
        ec = edge_class(cm, i, j)
        if ec.kind is EdgeKind.NONE:
            continue
        entry = {"pair": [i, j], **ec.to_dict(), "n": [parity_n(cm, i, j), parity_n(cm, j, i)]}
        if is_directed_edge(cm, i, j):
            u, v = source_target(cm, None, i, j)
            entry["arrow"] = [u, v]
        edges.append(entry)
    return {"n": cm.n, "edges": edges, "components": components(cm)}


def reconstruct(cm: CartanMatrix) -> CartanMatrix:
    """Rebuild the matrix from the diagram view alone.

    For edges of class A2/C2/G2 only the class and arrow are used, as a
    drawn Dynkin diagram would; infinity edges use their annotations.
    """
    data: dict[tuple[int, int], tuple[int, int]] = {}
    for i, j in cm.pairs():
        ec = edge_class(cm, i, j)
        if ec.kind is EdgeKind.NONE:
            continue
        if ec.kind is EdgeKind.INFINITY:
            assert ec.annotations is not None
            data[(i, j)] = (-ec.annotations[0], -ec.annotations[1])
        elif ec.kind is EdgeKind.A2:
            data[(i, j)] = (-1, -1)
        else:
            u, v = source_target(cm, None, i, j)
            # u -> v means a(v,u) = -q and a(u,v) = -1
            data[(i, j)] = (-1, -ec.q) if (u, v) == (i, j) else (-ec.q, -1)
    return from_edges(cm.n, data)


# -- a few standard matrices ---------------------------------------------------

FIGURE1 = validate_gcm([[2, -2, 0, 0], [-2, 2, -1, 0], [0, -4, 2, -1], [0, 0, -1, 2]])


def type_a(n: int) -> CartanMatrix:
    return validate_gcm([[2 if r == c else (-1 if abs(r - c) == 1 else 0) for c in range(n)] for r in range(n)])


A1 = type_a(1)
A2 = type_a(2)
A3 = type_a(3)
A1xA1 = validate_gcm([[2, 0], [0, 2]])
C2 = validate_gcm([[2, -2], [-1, 2]])
G2 = validate_gcm([[2, -1], [-3, 2]])


def rank2(r: int, s: int) -> CartanMatrix:
    """The matrix ``[[2, -r], [-s, 2]]``."""
    return validate_gcm([[2, -r], [-s, 2]])
