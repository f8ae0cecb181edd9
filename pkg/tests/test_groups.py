import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from spincover.amalgam import (
    build_group,
    conjugation_identity,
    utilde_embedding_check,
    utilde_structure,
    wspin_generators,
)
from spincover.clifford import embed, spin_generator_S
from spincover.diagram import A2, A3, C2, validate_gcm
from spincover.errors import (
    BadParityColouring,
    CapExceeded,
    InputError,
    NotSimplyLaced,
    RankTwoOnly,
)
from spincover.matgroups import (
    D,
    L,
    R,
    SO2xSU2Element,
    SO4Pair,
    closure,
    conjugation_identity_suite,
    eps,
    eta,
    quaternion_from_R,
    rho_hat,
    spin4_to_so2su2,
    zeta_l_tilde,
    zeta_p_tilde,
)
from spincover.quaternion import UnitQuaternion
from spincover.scalars import HALF_SQRT2, QZeta8
from spincover.spinrep import (
    R_generator,
    build_spinrep,
    evaluate_word,
    sqrt2_scaling,
    xi_image,
)

HANDLES = [(5, 5), (4, 4), (4, 5), (5, 4), (1, 4), (4, 1), (2, 2), (3, 3), (2, 3), (6, 7)]
UNIT_QUATERNIONS = [
    UnitQuaternion(1),
    UnitQuaternion(0, 1),
    UnitQuaternion(0, 0, 1),
    UnitQuaternion(HALF_SQRT2, HALF_SQRT2),
    UnitQuaternion(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
]

# -- matrix groups ---------------------------------------------------------------------------------


def test_conjugation_and_coordinate_identities():
    suite = conjugation_identity_suite()
    assert suite and all(suite.values()), [k for k, v in suite.items() if not v]


def test_closure_orders():
    assert closure([eps(1, 2, D(2), 3), eps(2, 3, D(2), 3)]).order == 24
    assert closure([embed(spin_generator_S(1), (1, 2), 3), embed(spin_generator_S(1), (2, 3), 3)]).order == 48
    assert closure([SO2xSU2Element(4, UnitQuaternion(-1))]).order == 2
    with pytest.raises(CapExceeded):
        closure([eps(1, 2, D(2), 3), eps(2, 3, D(2), 3)], cap=10)


def test_generator_order_does_not_matter():
    gens = [eps(1, 2, D(2), 3), eps(2, 3, D(2), 3), eps(1, 2, D(4), 3)]
    orders = {closure(list(p)).order for p in itertools.permutations(gens)}
    assert orders == {24}
    assert [g.key() for g in closure(gens).elements] == [g.key() for g in closure(gens[::-1]).elements]


def test_translations():
    for x, y in itertools.product(UNIT_QUATERNIONS, repeat=2):
        assert L(x) * L(y) == L(x * y)
        assert R(x) * R(y) == R(x * y)
        assert L(x) * R(y) == R(y) * L(x)
        assert quaternion_from_R(R(x)) == x
        m = SO4Pair(x, y)
        assert m.matrix().is_orthogonal()
        assert eta(m).is_orthogonal() and eta(m).nrows == 3


@given(st.integers(-8, 8), st.integers(-8, 8))
def test_rho_hat_is_a_homomorphism(a, b):
    x, y = zeta_p_tilde(a) * zeta_l_tilde(b), zeta_l_tilde(a) * zeta_p_tilde(b)
    assert rho_hat(x * y) == rho_hat(x) * rho_hat(y)
    assert rho_hat(x).is_orthogonal()


def test_rho_hat_kernel():
    group = closure([zeta_p_tilde(1), zeta_l_tilde(1)])
    kernel = [g for g in group.elements if rho_hat(g).is_identity()]
    assert sorted(g.key() for g in kernel) == sorted(
        g.key() for g in (SO2xSU2Element(0, UnitQuaternion(1)), SO2xSU2Element(4, UnitQuaternion(-1)))
    )


def test_spin4_identification_rejects_other_elements():
    with pytest.raises(InputError):
        spin4_to_so2su2(embed(spin_generator_S(2), (1, 3), 4))


# -- amalgams --------------------------------------------------------------------------------------


def test_utilde_structures():
    tags = {rs: utilde_structure(build_group(*rs))["iso_tag"] for rs in [(5, 5), (4, 4), (4, 5), (5, 4)]}
    assert tags == {(5, 5): "Q8", (4, 4): "Z4xZ4", (4, 5): "Z4xZ2", (5, 4): "Z4xZ2"}
    assert utilde_structure(build_group(5, 5))["order"] == 8
    assert utilde_structure(build_group(4, 4))["order"] == 16
    assert utilde_structure(build_group(4, 5, spin=False))["iso_tag"] == "Z2xZ2"


@pytest.mark.parametrize("rs", HANDLES)
def test_conjugation_identity_all_denominators(rs):
    for spin in (False, True):
        g = build_group(*rs, spin=spin)
        for q in range(1, 13):
            for p in range(2 * q):
                for i in (1, 2):
                    assert conjugation_identity(g, i, Fraction(p, q))


@pytest.mark.parametrize("rs", [(5, 5), (4, 4), (4, 5), (5, 4)])
def test_embedding_of_utilde(rs):
    assert all(utilde_embedding_check(build_group(*rs)).values())
    assert all(utilde_embedding_check(build_group(*rs, spin=False)).values())


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(HANDLES), st.booleans(), st.integers(0, 2**32))
def test_group_laws(rs, spin, seed):
    g = build_group(*rs, spin=spin)
    rng = random.Random(seed)
    a, b, c = (g.random_word(rng, rng.randint(0, 6)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity()
    assert g.is_normal(a * b)
    assert g.parse(str(a)) == a


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([(5, 5), (4, 4), (4, 5), (5, 4)]), st.booleans(), st.integers(0, 2**32))
def test_concrete_model_is_a_homomorphism(rs, spin, seed):
    g = build_group(*rs, spin=spin)
    rng = random.Random(seed)
    a, b = (g.random_word(rng, rng.randint(0, 5), denominators=(4,)) for _ in range(2))
    assert g.concrete(a * b) == g.concrete(a) * g.concrete(b)


def test_wspin_generators():
    g = build_group(4, 5)
    x1, x2 = wspin_generators(g)
    assert g.kappa.to_list() == [1, 2]
    assert x1 == g.k(1, Fraction(1, 2)) and x2 == g.k(2, Fraction(1, 4))
    assert x2**2 == g.t(2) and not (x2**4).is_identity()


def test_amalgam_errors():
    with pytest.raises(RankTwoOnly):
        build_group(1, 3)
    with pytest.raises(BadParityColouring):
        build_group(4, 5, kappa=[2, 2])
    with pytest.raises(BadParityColouring):
        build_group(5, 5, kappa=[2, 1])
    with pytest.raises(BadParityColouring):
        build_group(4, 4, spin=False).wspin_generators()
    g = build_group(4, 4)
    with pytest.raises(InputError):
        g.parse("<0,0> · [1:3/4]")  # 3/4 is outside the period 1/2
    with pytest.raises(InputError):
        g.parse("garbage")
    with pytest.raises(InputError):
        g.k(3, 0)
    with pytest.raises(InputError):
        g.identity() * build_group(5, 5).identity()


# -- spin representation ---------------------------------------------------------------------------


@st.composite
def simply_laced(draw, max_n=6, max_factors=3):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_factors)) if pairs else []
    rows = [[2 if r == c else 0 for c in range(n)] for r in range(n)]
    for i, j in edges:
        rows[i][j] = rows[j][i] = -1
    isolated = sum(1 for v in range(n) if all(rows[v][w] == 0 for w in range(n) if w != v))
    assume(len(edges) + isolated <= max_factors)
    return validate_gcm(rows)


@settings(max_examples=40, deadline=None)
@given(simply_laced())
def test_spinrep_invariants(cm):
    rep = build_spinrep(cm)
    assert all(rep.invariants().values())
    for i in cm.vertices:
        r = R_generator(rep, i)
        assert r * r == rep.x(i)
        assert r * r.conj_transpose() == rep.identity()
        assert evaluate_word(rep, [i] * 8) == rep.identity()
        assert evaluate_word(rep, [i, -i]) == rep.identity()


def test_spinrep_examples():
    assert build_spinrep(A2).dimension == 2
    assert build_spinrep(A3).dimension == 4
    assert xi_image(build_spinrep(A2)).order == 48
    assert sqrt2_scaling(R_generator(build_spinrep(A2), 1)) == 1
    assert sqrt2_scaling(build_spinrep(A2).identity()) == 0
    assert QZeta8.imag_unit() * QZeta8.imag_unit() == QZeta8(-1)
    with pytest.raises(NotSimplyLaced):
        build_spinrep(C2)
    with pytest.raises(InputError):
        evaluate_word(build_spinrep(A2), [3])
