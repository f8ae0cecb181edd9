"""Exception hierarchy shared by every module.

All errors derive from :class:`SpincoverError`.  Input-level problems
(malformed matrices, inadmissible colourings, unsupported angles) derive
from :class:`InputError`, which the command line maps to exit code 2.
"""

from __future__ import annotations


class SpincoverError(Exception):
    """Base class for all package errors."""


class InputError(SpincoverError, ValueError):
    """The caller supplied data that violates a documented precondition."""


# -- Cartan matrices -----------------------------------------------------------


class GCMError(InputError):
    """A generalized Cartan matrix axiom is violated.

    ``entry`` holds the offending 1-based ``(row, column)`` pair.
    """

    axiom = "GCM"

    def __init__(self, entry: tuple[int, int], detail: str = "") -> None:
        self.entry = entry
        msg = f"{self.axiom} at ({entry[0]},{entry[1]})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class DiagonalNotTwo(GCMError):
    axiom = "DiagonalNotTwo"


class PositiveOffDiagonal(GCMError):
    axiom = "PositiveOffDiagonal"


class ZeroNotSymmetric(GCMError):
    axiom = "ZeroNotSymmetric"


class MalformedMatrix(InputError):
    """The matrix is not square or contains non-integers."""


class SameVertex(InputError):
    """A pair operation was called with ``i == j``."""


# -- colourings and transforms ------------------------------------------------


class NotAdmissible(InputError):
    """A colouring fails one of the two admissibility conditions."""


class C2ColourViolation(InputError):
    """A C2 pair ``i -> j`` has ``kappa(i) = 1``, so unfolding is undefined."""


class NotDoublyLaced(InputError):
    """The diagram contains G2 or infinity edges."""


class NotSimplyLaced(InputError):
    """The diagram contains an edge that is not of type A2."""


# -- exact algebra ------------------------------------------------------------


class DimensionMismatch(InputError):
    """Operands live in different ambient algebras or matrix sizes."""


class NotInvertible(SpincoverError, ArithmeticError):
    """Division by zero or inversion of an element with spinor norm != 1."""


class NotSpin(InputError):
    """An element expected to lie in Spin(n) does not."""


class NotSpin4(NotSpin):
    """An element expected to lie in Spin(4) does not."""


class UnsupportedAngle(InputError):
    """Angles must be integer multiples of pi/4 for exact evaluation."""


class CapExceeded(SpincoverError):
    """A closure grew beyond its element cap."""

    def __init__(self, cap: int, frontier: int) -> None:
        self.cap = cap
        self.frontier = frontier
        super().__init__(f"closure exceeded cap {cap} (frontier size {frontier})")


# -- rank-2 amalgams and Weyl groups -----------------------------------------


class RankTwoOnly(InputError):
    """The amalgam module only models rank-2 infinity edges (rs >= 4)."""


class BadParityColouring(InputError):
    """The colouring contradicts the parity-forced side of an infinity edge."""


class InconsistentColour(InputError):
    """A colour pattern that admissibility excludes reached the rank-2 table."""


class UnsupportedGlobalModel(InputError):
    """No faithful finite model is implemented for this diagram type."""


class FormulaMismatch(SpincoverError):
    """The central-extension order formulas failed."""

    def __init__(self, orders: dict[str, int]) -> None:
        self.orders = dict(orders)
        super().__init__(f"order formula mismatch: {self.orders}")


class ConstructionInvariantFailed(SpincoverError):
    """A constructed spin representation failed its own verification."""
