"""Dense exact matrices over ``QSqrt2`` or ``QZeta8``.

Matrices are immutable tuples of rows.  They act on row vectors from the
right (``v -> v M``), which is the convention under which the twisted
adjoint image of ``S(alpha)`` is literally ``D(2 alpha)``.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence, Union

from .errors import DimensionMismatch, NotInvertible
from .scalars import QSqrt2, QZeta8

Scalar = Union[QSqrt2, QZeta8]


class ExactMatrix:
    __slots__ = ("rows", "_key", "_hash")

    def __init__(self, rows: Iterable[Iterable[Scalar]]) -> None:
        self.rows: tuple[tuple[Scalar, ...], ...] = tuple(tuple(r) for r in rows)
        width = len(self.rows[0]) if self.rows else 0
        if any(len(r) != width for r in self.rows):
            raise DimensionMismatch("ragged matrix rows")
        self._key = None
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_ints(cls, rows: Sequence[Sequence[int]], ring: type = QSqrt2) -> ExactMatrix:
        return cls([[ring.coerce(x) for x in r] for r in rows])

    @classmethod
    def identity(cls, n: int, ring: type = QSqrt2) -> ExactMatrix:
        one, zero = ring.one(), ring.zero()
        return cls([[one if r == c else zero for c in range(n)] for r in range(n)])

    @classmethod
    def diag(cls, values: Sequence[int], ring: type = QSqrt2) -> ExactMatrix:
        n = len(values)
        return cls.from_ints([[values[r] if r == c else 0 for c in range(n)] for r in range(n)], ring)

    @classmethod
    def block_diag(cls, *blocks: ExactMatrix) -> ExactMatrix:
        ring = type(blocks[0].rows[0][0])
        n = sum(b.nrows for b in blocks)
        zero = ring.zero()
        rows = [[zero] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for r in range(b.nrows):
                for c in range(b.ncols):
                    rows[off + r][off + c] = b.rows[r][c]
            off += b.nrows
        return cls(rows)

    # -- shape and access ---------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, rc: tuple[int, int]) -> Scalar:
        r, c = rc
        return self.rows[r][c]

    @property
    def ring(self) -> type:
        return type(self.rows[0][0])

    # -- algebra ------------------------------------------------------------

    def __mul__(self, other: object) -> ExactMatrix:
        if isinstance(other, ExactMatrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"{self.nrows}x{self.ncols} times {other.nrows}x{other.ncols}")
            cols = list(zip(*other.rows))
            out = []
            for row in self.rows:
                new_row = []
                for col in cols:
                    acc = None
                    for x, y in zip(row, col):
                        if x.is_zero() or y.is_zero():
                            continue
                        acc = x * y if acc is None else acc + x * y
                    new_row.append(acc if acc is not None else row[0] * 0)
                out.append(new_row)
            return ExactMatrix(out)
        if isinstance(other, (QSqrt2, QZeta8, int)):
            return self.map(lambda x: x * other)
        return NotImplemented

    def __rmul__(self, other: object) -> ExactMatrix:
        if isinstance(other, (QSqrt2, QZeta8, int)):
            return self.map(lambda x: other * x)
        return NotImplemented

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        self._same_shape(other)
        return ExactMatrix([[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        self._same_shape(other)
        return ExactMatrix([[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self) -> ExactMatrix:
        return self.map(lambda x: -x)

    def __pow__(self, k: int) -> ExactMatrix:
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ExactMatrix.identity(self.nrows, self.ring), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _same_shape(self, other: ExactMatrix) -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("shape mismatch")

    def map(self, f: Callable[[Scalar], Scalar]) -> ExactMatrix:
        return ExactMatrix([[f(x) for x in r] for r in self.rows])

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(zip(*self.rows))

    def conj_transpose(self) -> ExactMatrix:
        return ExactMatrix([[x.conjugate() for x in col] for col in zip(*self.rows)])

    def is_identity(self) -> bool:
        return self == ExactMatrix.identity(self.nrows, self.ring)

    def is_orthogonal(self) -> bool:
        return (self * self.transpose()).is_identity()

    def is_unitary(self) -> bool:
        return (self * self.conj_transpose()).is_identity()

    def inverse(self) -> ExactMatrix:
        """Inverse by Gauss-Jordan elimination (with a fast path for unitary matrices)."""
        ct = self.conj_transpose()
        if (self * ct).is_identity():
            return ct
        n = self.nrows
        ring = self.ring
        aug = [list(r) + [ring.one() if i == j else ring.zero() for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
            if piv is None:
                raise NotInvertible("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = aug[col][col].inverse()
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and not aug[r][col].is_zero():
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return ExactMatrix([row[n:] for row in aug])

    def det(self) -> Scalar:
        n = self.nrows
        if n != self.ncols:
            raise DimensionMismatch("determinant of a non-square matrix")
        m = [list(r) for r in self.rows]
        ring = self.ring
        det = ring.one()
        for col in range(n):
            piv = next((r for r in range(col, n) if not m[r][col].is_zero()), None)
            if piv is None:
                return ring.zero()
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = -det
            det = det * m[col][col]
            inv = m[col][col].inverse()
            for r in range(col + 1, n):
                if not m[r][col].is_zero():
                    f = m[r][col] * inv
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return det

    # -- identity and text ----------------------------------------------------

    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(x.key() for r in self.rows for x in r)
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def __repr__(self) -> str:
        return f"ExactMatrix({self.to_strings()})"

    def one(self) -> ExactMatrix:
        return ExactMatrix.identity(self.nrows, self.ring)


def rank(vectors: Sequence[Sequence[QSqrt2]]) -> int:
    """Rank of a list of vectors over Q(sqrt2) by exact elimination."""
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    width = len(rows[0])
    r = 0
    for col in range(width):
        piv = next((i for i in range(r, len(rows)) if not rows[i][col].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                f = rows[i][col] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r
