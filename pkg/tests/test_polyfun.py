"""Tests for functor expressions, weight spaces and the ψ matrices."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurext.combinat import Partition, kostka_number
from schurext.errors import ParseError, PreconditionError, ShapeMismatchError
from schurext.exactlin import GF, IntegerMatrix
from schurext.polyfun import (
    Divided,
    Exterior,
    Schur,
    Symmetric,
    Weyl,
    generization_matrix,
    hook_reduce,
    kuhn_dual,
    monomial,
    parse_functor,
    specialization_matrix,
    tensor,
    weight_space,
)
from schurext.polyfun.base import insert_zero, merge_weight


def test_parse_functor_round_trips_through_str():
    f = parse_functor("D(2)*L(3)")
    assert f == tensor(Divided(2), Exterior(3))
    assert str(f) == "D(2)*L(3)"
    assert parse_functor("W(5,1^3)") == Weyl(Partition.parse("5,1^3"))
    assert parse_functor("W(2,2)").degree == 4


@pytest.mark.parametrize("text", ["X(2)", "D(2,1)", "D(2)*", "W(1,2)"])
def test_parse_functor_errors(text):
    with pytest.raises(ParseError):
        parse_functor(text)


def test_kuhn_dual():
    assert kuhn_dual(tensor(Symmetric(2), Symmetric(2))) == tensor(Divided(2), Divided(2))
    assert kuhn_dual(Exterior(4)) == Exterior(4)
    assert kuhn_dual(Weyl(Partition.of(2, 1))) == Schur(Partition.of(2, 1))


shapes = st.lists(st.integers(1, 3), min_size=1, max_size=3).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))
atoms = st.one_of(
    st.integers(0, 3).map(Divided),
    st.integers(0, 3).map(Exterior),
    st.integers(0, 3).map(Symmetric),
    shapes.map(Weyl),
    shapes.map(Schur),
)


@settings(max_examples=60, deadline=None)
@given(st.lists(atoms, max_size=4))
def test_kuhn_dual_is_a_degree_preserving_involution(factors):
    f = tensor(*factors)
    assert kuhn_dual(kuhn_dual(f)) == f
    assert kuhn_dual(f).degree == f.degree


def test_weight_helpers():
    assert merge_weight((1, 2, 3), 1) == (3, 3)
    assert insert_zero((1, 2), 0) == (0, 1, 2)
    assert insert_zero((1, 2), 2) == (1, 2, 0)


def test_weight_space_ranks(hook_model):
    assert weight_space(Weyl(Partition.of(2, 2)), (1, 1, 1, 1)).rank == 2
    assert weight_space(Divided(2), (2,)).rank == 1
    assert weight_space(Weyl(Partition.of(2, 1)), (1, 1, 1)).rank == 2
    assert weight_space(Exterior(2), (2, 0)).rank == 0


@pytest.mark.parametrize("shape,w", [((3, 1), (1, 2, 1)), ((2, 2), (1, 1, 2)), ((3, 2), (2, 1, 2)), ((2, 1, 1), (1, 1, 1, 1))])
def test_weyl_ranks_are_kostka_numbers(shape, w):
    lam = Partition(shape)
    assert weight_space(Weyl(lam), w).rank == kostka_number(lam, sorted(w, reverse=True))


def test_weight_space_rejects_wrong_size():
    with pytest.raises(ShapeMismatchError):
        weight_space(Divided(2), (1, 2))
    with pytest.raises(PreconditionError):
        weight_space(Schur(Partition.of(2)), (2,))


def test_rank_one_specialization():
    assert specialization_matrix(Divided(2), (1, 1), 1) == IntegerMatrix.from_rows([[2]])
    assert specialization_matrix(Symmetric(2), (1, 1), 1) == IntegerMatrix.from_rows([[1]])
    assert specialization_matrix(Exterior(2), (1, 1), 1).shape == (0, 1)
    assert specialization_matrix(Divided(2), (1, 1), 1, GF(2)).is_zero()


def test_rank_one_generization():
    assert generization_matrix(Divided(2), (2,), 0) == IntegerMatrix.identity(1)
    assert generization_matrix(Exterior(2), (1, 1), 1) == IntegerMatrix.identity(1)


def test_weyl_specialization_of_standard_tableaux():
    """ψ_1 sends 13/24 to -11/23 and 12/34 to 2·11/23."""
    f = Weyl(Partition.of(2, 2))
    space = weight_space(f, (1, 1, 1, 1))
    m = specialization_matrix(f, (1, 1, 1, 1), 1)
    assert m.shape == (1, 2)
    col = space.index((((1, 3), (2, 4)),))
    other = space.index((((1, 2), (3, 4)),))
    assert m[0, col] == -1
    assert m[0, other] == 2


def test_tensor_weight_space_counts_splittings():
    f = tensor(Divided(1), Exterior(2))
    # splittings of (1,1,1): the D(1) factor takes one coordinate
    assert weight_space(f, (1, 1, 1)).rank == 3


def test_specialization_index_range():
    with pytest.raises(PreconditionError):
        specialization_matrix(Divided(2), (1, 1), 2)
    with pytest.raises(PreconditionError):
        generization_matrix(Divided(2), (2,), 2)


def test_hook_models_agree_on_square_identity(hook_model):
    """ψ_i ψ^i is the identity on W_(3,1)."""
    f = Weyl(Partition.of(3, 1))
    w = (2, 1, 1)
    rank = weight_space(f, w).rank
    for i in (1, 2):
        lifted = insert_zero(w, i)
        m = specialization_matrix(f, lifted, i) @ generization_matrix(f, w, i)
        assert m == IntegerMatrix.identity(rank)


@pytest.mark.parametrize("method", ["rule", "lattice"])
def test_hook_reduce_straightens_first_column(method):
    y = monomial((3, 1, 0), (1, 3))
    assert hook_reduce({y: 1}, method) == {monomial((4, 0, 0), (2, 3)): -1}
    y = monomial((2, 0, 1, 0), (1, 2, 4))
    assert hook_reduce({y: 2}, method) == {monomial((3, 0, 0, 0), (2, 3, 4)): 2}


def test_hook_reduce_keeps_standard_monomials():
    y = monomial((4, 0, 0), (2, 3))
    assert y.is_standard()
    assert hook_reduce({y: 5}) == {y: 5}
    assert hook_reduce({}) == {}


def test_hook_reduce_rejects_mixed_weights():
    with pytest.raises(ShapeMismatchError):
        hook_reduce({monomial((2, 0), (2,)): 1, monomial((1, 1), (2,)): 1})


def test_package_exports_the_tensor_product():
    """The package-level name is the constructor, even after every atom model is loaded."""
    import schurext.polyfun as polyfun
    import schurext.polyfun.registry  # noqa: F401

    assert callable(polyfun.tensor)
    assert polyfun.tensor(Divided(2), Exterior(1)) == parse_functor("D(2)*L(1)")
