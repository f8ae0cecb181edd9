import pytest
from conftest import gcms
from hypothesis import given
from hypothesis import strategies as st

from spincover.colouring import Colouring
from spincover.corpus import PAIR_VALUES, full_corpus
from spincover.diagram import (
    A1,
    A2,
    FIGURE1,
    G2,
    EdgeKind,
    braid_order_m,
    components,
    diagram_view,
    direction,
    edge_class,
    from_json,
    parity_n,
    reconstruct,
    validate_gcm,
)
from spincover.errors import (
    DiagonalNotTwo,
    InputError,
    MalformedMatrix,
    PositiveOffDiagonal,
    SameVertex,
    ZeroNotSymmetric,
)


def test_validation_examples():
    assert FIGURE1.n == 4
    assert validate_gcm([[2]]).n == 1
    with pytest.raises(ZeroNotSymmetric) as err:
        validate_gcm([[2, -1], [0, 2]])
    assert err.value.entry == (2, 1)
    with pytest.raises(DiagonalNotTwo):
        validate_gcm([[1, 0], [0, 2]])
    with pytest.raises(PositiveOffDiagonal) as err:
        validate_gcm([[2, 1], [-1, 2]])
    assert err.value.entry == (1, 2)
    with pytest.raises(MalformedMatrix):
        validate_gcm([[2, -1], [-1]])
    with pytest.raises(MalformedMatrix):
        validate_gcm([[2.0]])
    with pytest.raises(MalformedMatrix):
        validate_gcm([])


def test_edge_classes_of_figure1():
    e12 = edge_class(FIGURE1, 1, 2)
    assert e12.kind is EdgeKind.INFINITY and e12.annotations == (2, 2)
    assert edge_class(FIGURE1, 3, 4).kind is EdgeKind.A2
    assert edge_class(FIGURE1, 1, 3).kind is EdgeKind.NONE
    with pytest.raises(SameVertex):
        edge_class(FIGURE1, 2, 2)


def test_parity_braid_and_direction_examples():
    assert parity_n(FIGURE1, 2, 3) == 1 and parity_n(FIGURE1, 3, 2) == 0
    assert braid_order_m(G2, 1, 2) == 6
    assert braid_order_m(FIGURE1, 1, 2) == 0
    assert direction(FIGURE1, None, 2, 3)  # a(2,3) odd: 2 -> 3
    assert direction(A2, Colouring((2, 2)), 2, 1)  # label tie-break: 2 -> 1
    c2 = validate_gcm([[2, -2], [-1, 2]])  # vertex 1 short, vertex 2 long
    assert direction(c2, Colouring((1, 2)), 2, 1)  # long -> short


def test_components_examples():
    assert components(validate_gcm([[2, 0], [0, 2]])) == [[1], [2]]
    assert components(FIGURE1) == [[1, 2, 3, 4]]
    a2_a1 = validate_gcm([[2, -1, 0], [-1, 2, 0], [0, 0, 2]])
    assert components(a2_a1) == [[1, 2], [3]]
    assert components(A1) == [[1]]


@given(gcms())
def test_json_round_trip(cm):
    assert from_json(cm.to_json()) == cm


@given(gcms())
def test_reconstruction_from_diagram(cm):
    # the augmented view (classes, arrows, infinity annotations) is loss-free
    assert reconstruct(cm).a == cm.a


@given(gcms(), st.data())
def test_direction_total_and_antisymmetric(cm, data):
    kappa = Colouring(tuple(data.draw(st.sampled_from((1, 2))) for _ in cm.vertices))
    for i, j in cm.pairs():
        assert direction(cm, kappa, i, j) != direction(cm, kappa, j, i)


@given(gcms())
def test_parity_and_braid_symmetry(cm):
    for i, j in cm.pairs():
        assert parity_n(cm, i, j) in (0, 1)
        assert braid_order_m(cm, i, j) == braid_order_m(cm, j, i)


def test_from_json_errors_are_located():
    with pytest.raises(InputError, match="line 1 column"):
        from_json("{")
    with pytest.raises(InputError):
        from_json("[]")
    with pytest.raises(ZeroNotSymmetric, match=r"\(1,2\)"):
        from_json('{"cartan": [[2, 0], [-1, 2]]}')


def test_view_lists_arrows_and_annotations():
    view = diagram_view(FIGURE1)
    by_pair = {tuple(e["pair"]): e for e in view["edges"]}
    assert by_pair[(1, 2)]["annotations"] == [2, 2]
    assert by_pair[(2, 3)]["arrow"] == [2, 3]
    assert (1, 3) not in by_pair


def test_rank_two_corpus_is_valid():
    assert sum(1 for _ in full_corpus(2)) == len(PAIR_VALUES) == 26
