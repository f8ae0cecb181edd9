"""The test corpus of generalized Cartan matrices with entries at least -5.

A pair of off-diagonal entries ``(a(i,j), a(j,i))`` is either ``(0, 0)`` or
two values in ``-1..-5``, giving 26 pair values.  Admissibility, ``c`` and the
doubly laced reduction read each pair only through its parity class
``(n(i,j), n(j,i))``.  :func:`pair_locality_report` certifies this at rank two
over all 26 pair values and both colours per vertex, so
:func:`parity_corpus` (one representative per class and pair) covers the
full corpus for these quantities with ``4^6 = 4096`` matrices at ``n = 4``.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .colouring import Colouring, c_value, enumerate_admissible, is_admissible
from .diagram import CartanMatrix, parity_n, validate_gcm
from .transform import check_c_preserved, dl_reduce

MIN_ENTRY = -5

PAIR_VALUES: tuple[tuple[int, int], ...] = ((0, 0),) + tuple(
    (a, b) for a in range(-1, MIN_ENTRY - 1, -1) for b in range(-1, MIN_ENTRY - 1, -1)
)

# one representative per parity class (n(i,j), n(j,i))
PARITY_REPRESENTATIVE: dict[tuple[int, int], tuple[int, int]] = {
    (0, 0): (0, 0),
    (1, 1): (-1, -1),
    (1, 0): (-1, -2),
    (0, 1): (-2, -1),
}


def parity_class(pair: tuple[int, int]) -> tuple[int, int]:
    return (pair[0] % 2, pair[1] % 2)


def matrices(n: int, pair_values: Sequence[tuple[int, int]]) -> Iterator[CartanMatrix]:
    """Every ``n x n`` matrix whose off-diagonal pairs are drawn from ``pair_values``."""
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for choice in itertools.product(pair_values, repeat=len(slots)):
        rows = [[2 if r == c else 0 for c in range(n)] for r in range(n)]
        for (i, j), (a, b) in zip(slots, choice):
            rows[i][j], rows[j][i] = a, b
        yield validate_gcm(rows)


def full_corpus(n: int) -> Iterator[CartanMatrix]:
    return matrices(n, PAIR_VALUES)


def parity_corpus(n: int) -> Iterator[CartanMatrix]:
    return matrices(n, tuple(PARITY_REPRESENTATIVE.values()))


def _pair_profile(pair: tuple[int, int]) -> list[tuple]:
    cm = validate_gcm([[2, pair[0]], [pair[1], 2]])
    out = []
    for kappa in itertools.product((1, 2), repeat=2):
        k = Colouring(kappa)
        if not is_admissible(cm, k):
            out.append((kappa, False))
            continue
        reduced, _ = dl_reduce(cm, k)
        out.append((kappa, True, c_value(cm, k), (parity_n(reduced, 1, 2), parity_n(reduced, 2, 1)), reduced(1, 2) == 0))
    return out


def pair_locality_report() -> dict:
    """Every pair value behaves exactly like its parity representative."""
    mismatches = [
        list(pair) for pair in PAIR_VALUES if _pair_profile(pair) != _pair_profile(PARITY_REPRESENTATIVE[parity_class(pair)])
    ]
    return {"pair_values": len(PAIR_VALUES), "mismatches": mismatches, "pass": not mismatches}


def c_preservation_report(cms: Iterable[CartanMatrix]) -> dict:
    """``c(Pi, kappa) = c(Pi^dl, kappa)`` for every admissible colouring of every matrix."""
    checked = 0
    failures = []
    for cm in cms:
        for kappa in enumerate_admissible(cm):
            checked += 1
            if not check_c_preserved(cm, kappa):
                failures.append({"cartan": [list(r) for r in cm.a], "colouring": kappa.to_list()})
    return {"checked": checked, "failures": failures, "pass": not failures}
