"""Shared strategies and the acceptance summary printed after the run."""

from __future__ import annotations

import itertools
from fractions import Fraction

from hypothesis import strategies as st

from spincover.clifford import CliffordElement, embed, spin_generator_S
from spincover.corpus import PAIR_VALUES
from spincover.diagram import validate_gcm
from spincover.scalars import QSqrt2

# criterion label -> (passed, elapsed seconds, budget seconds)
ACCEPTANCE: dict[str, tuple[bool, float, float]] = {}

fractions = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 12))
qsqrt2 = st.builds(QSqrt2, fractions, fractions)


def clifford_elements(n: int, max_terms: int = 4):
    """Random elements of ``Cl(n)`` with at most ``max_terms`` blades."""
    return st.dictionaries(st.integers(0, 2**n - 1), qsqrt2, max_size=max_terms).map(lambda t: CliffordElement(n, t))


def spin_elements(n: int, max_factors: int = 5):
    """Products of eighth-turn rotations in coordinate planes of ``Cl(n)``."""
    planes = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    factor = st.builds(lambda p, k: embed(spin_generator_S(k), p, n), st.sampled_from(planes), st.integers(0, 7))

    def product(fs):
        out = CliffordElement.one_of(n)
        for f in fs:
            out = out * f
        return out

    return st.lists(factor, max_size=max_factors).map(product)


def gcms(max_n: int = 4):
    """Random valid generalized Cartan matrices drawn from the corpus pair values."""

    def build(n_and_pairs):
        n, pairs = n_and_pairs
        rows = [[2 if r == c else 0 for c in range(n)] for r in range(n)]
        for (i, j), (a, b) in zip(itertools.combinations(range(n), 2), pairs):
            rows[i][j], rows[j][i] = a, b
        return validate_gcm(rows)

    def pairs_for(n):
        size = n * (n - 1) // 2
        return st.tuples(st.just(n), st.lists(st.sampled_from(PAIR_VALUES), min_size=size, max_size=size))

    return st.integers(1, max_n).flatmap(pairs_for).map(build)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        ok, elapsed, budget = ACCEPTANCE[label]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {label}  ({elapsed:.2f} s, budget {budget:g} s)")
