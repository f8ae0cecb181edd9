"""A constructive generalized spin representation of simply laced diagrams.

For a simply laced diagram take one tensor factor ``C^2`` per edge and one
per isolated vertex.  Vertex ``i`` acts by ``sigma_x`` on the factor of
every edge where it is the smaller endpoint, by ``sigma_z`` where it is the
larger endpoint, and by the identity elsewhere (an isolated vertex acts by
``sigma_x`` on its own factor).  Multiplying by ``i`` gives matrices ``X_i``
with ``X_i^2 = -I`` that anticommute exactly across edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .diagram import CartanMatrix, is_simply_laced
from .errors import ConstructionInvariantFailed, InputError, NotSimplyLaced
from .exactmatrix import ExactMatrix, rank
from .matgroups import ClosureResult, closure
from .scalars import HALF_SQRT2, QZeta8

_SIGMA_X = ((0, 1), (1, 0))
_SIGMA_Z = ((1, 0), (0, -1))
_ID2 = ((1, 0), (0, 1))


def _kron(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def _zeta_matrix(rows: Sequence[Sequence[int]], scalar: QZeta8) -> ExactMatrix:
    zero = QZeta8.zero()
    return ExactMatrix([[scalar * x if x else zero for x in r] for r in rows])


@dataclass(frozen=True)
class SpinRep:
    cm: CartanMatrix
    dimension: int
    X: tuple[ExactMatrix, ...]

    def x(self, i: int) -> ExactMatrix:
        """``X_i`` for a 1-based vertex ``i``."""
        return self.X[i - 1]

    def identity(self) -> ExactMatrix:
        return ExactMatrix.identity(self.dimension, QZeta8)

    def invariants(self) -> dict[str, bool]:
        ident = self.identity()
        square = all(x * x == -ident for x in self.X)
        commutation = True
        maximal = True
        for i in self.cm.vertices:
            for j in self.cm.vertices:
                if i == j:
                    continue
                xi, xj = self.x(i), self.x(j)
                anti = xi * xj == -(xj * xi)
                comm = xi * xj == xj * xi
                commutation &= anti if self.cm(i, j) != 0 else comm
                maximal &= _real_rank([ident, xi, xj]) == 3
        return {"square_minus_one": square, "commutation": commutation, "maximal": maximal}


def _real_rank(mats: Sequence[ExactMatrix]) -> int:
    """Rank over the reals of matrices with entries in Q(sqrt2, i)."""
    vectors = []
    for m in mats:
        coords = []
        for row in m.rows:
            for z in row:
                coords.extend((z.real(), z.imag()))
        vectors.append(coords)
    return rank(vectors)


def build_spinrep(cm: CartanMatrix) -> SpinRep:
    if not is_simply_laced(cm):
        raise NotSimplyLaced("the spin representation needs a simply laced diagram")
    edges = [(i, j) for i, j in cm.pairs() if cm(i, j) != 0]
    isolated = [v for v in cm.vertices if all(cm(v, w) == 0 for w in cm.vertices if w != v)]
    factors: list[tuple[str, tuple[int, ...]]] = [("edge", e) for e in edges] + [("vertex", (v,)) for v in isolated]
    imag = QZeta8.imag_unit()
    mats = []
    for v in cm.vertices:
        m: list[list[int]] = [[1]]
        for kind, data in factors:
            if kind == "edge":
                f = _SIGMA_X if v == data[0] else _SIGMA_Z if v == data[1] else _ID2
            else:
                f = _SIGMA_X if v == data[0] else _ID2
            m = _kron(m, f)
        mats.append(_zeta_matrix(m, imag))
    rep = SpinRep(cm, 2 ** len(factors), tuple(mats))
    failed = [name for name, ok in rep.invariants().items() if not ok]
    if failed:
        raise ConstructionInvariantFailed(f"spin representation invariants failed: {failed}")
    return rep


def R_generator(rep: SpinRep, i: int) -> ExactMatrix:
    """``R_i = cos(pi/4) + sin(pi/4) X_i``."""
    c = QZeta8.coerce(HALF_SQRT2)
    return (rep.identity() + rep.x(i)) * c


def evaluate_word(rep: SpinRep, word: Sequence[int]) -> ExactMatrix:
    """Image of ``r_{|w_1|}^{+-1} r_{|w_2|}^{+-1} ...`` under ``r_i -> R_i``."""
    out = rep.identity()
    for g in word:
        if g == 0 or abs(g) > rep.cm.n:
            raise InputError(f"generator index {g} outside 1..{rep.cm.n}")
        r = R_generator(rep, abs(g))
        out = out * (r if g > 0 else r.conj_transpose())
    return out


def xi_image(rep: SpinRep, cap: int = 10**5) -> ClosureResult:
    """The finite group generated by all ``R_i``."""
    return closure([R_generator(rep, i) for i in rep.cm.vertices], cap)


def sqrt2_scaling(m: ExactMatrix, max_power: int = 64) -> int | None:
    """Least ``k`` with ``(sqrt2)^k M`` having all entries in ``Z[i, sqrt2]``."""
    scale = QZeta8.coerce(1)
    sqrt2 = QZeta8(0, 1)
    for k in range(max_power + 1):
        if all((z * scale).in_ring_of_integers_part() for row in m.rows for z in row):
            return k
        scale = scale * sqrt2
    return None
