"""Tests for integer matrices, Smith form, homology and chain maps."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import ZZ as SYMPY_ZZ
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from schurext.errors import MalformedComplexError, ShapeMismatchError, UsageError
from schurext.exactlin import (
    GF,
    ZZ,
    ChainComplex,
    ChainMap,
    IntegerMatrix,
    Ring,
    homology,
    homology_table,
    identity_map,
    is_acyclic,
    mapping_cone,
    rank,
    smith_normal_form,
    validate_complex,
)


def z121(ring=ZZ) -> ChainComplex:
    """Terms Z, Z^2, Z in degrees 4, 3, 2 with d4 = (3,3)^T and d3 = (-2, 2)."""
    return ChainComplex(
        ring,
        2,
        4,
        {4: ("a",), 3: ("b", "c"), 2: ("e",)},
        {4: IntegerMatrix.from_rows([[3], [3]]), 3: IntegerMatrix.from_rows([[-2, 2]])},
    )


def test_ring_parse():
    assert Ring.parse("int") == ZZ
    assert Ring.parse("gf", 3) == GF(3)
    assert str(GF(5)) == "F_5"
    with pytest.raises(UsageError):
        Ring.parse("gf")
    with pytest.raises(UsageError):
        GF(4)


def test_smith_normal_form_examples():
    assert smith_normal_form(IntegerMatrix.from_rows([[2]])) == [2]
    assert smith_normal_form(IntegerMatrix.identity(3)) == [1, 1, 1]
    assert smith_normal_form(IntegerMatrix.from_rows([[2, 0], [0, 3]])) == [1, 6]


small_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_smith_normal_form_matches_sympy(rows):
    ours = [x for x in smith_normal_form(IntegerMatrix.from_rows(rows)) if x]
    d = sympy_snf(Matrix(rows), domain=SYMPY_ZZ)
    theirs = sorted(abs(int(d[i, i])) for i in range(min(d.shape)) if d[i, i])
    assert sorted(ours) == theirs


@settings(max_examples=40, deadline=None)
@given(small_matrices)
def test_rank_over_q_matches_sympy(rows):
    assert rank(IntegerMatrix.from_rows(rows)) == Matrix(rows).rank()


def test_matrix_shape_checks():
    with pytest.raises(ShapeMismatchError):
        IntegerMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(ShapeMismatchError):
        IntegerMatrix(2, 2, {(2, 0): 1})


def test_integral_homology_of_z121():
    c = z121()
    assert validate_complex(c)
    assert homology(c, 4).is_zero
    assert homology(c, 3).canonical() == (0, (3,))
    assert homology(c, 2).canonical() == (0, (2,))
    assert str(homology(c, 3)) == "Z/3"


def test_mod_two_homology_of_z121():
    table = homology_table(z121(GF(2)))
    assert [table[n].dimension for n in (4, 3, 2)] == [0, 1, 1]


def test_zero_differentials_give_free_homology():
    c = ChainComplex(ZZ, 0, 1, {0: ("x", "y"), 1: ("z",)})
    assert homology(c, 0).canonical() == (2, ())
    assert homology(c, 1).canonical() == (1, ())


def test_non_complex_is_rejected():
    c = ChainComplex(
        ZZ, 1, 3, {1: ("a",), 2: ("b",), 3: ("c",)},
        {3: IntegerMatrix.from_rows([[1]]), 2: IntegerMatrix.from_rows([[1]])},
    )
    assert not validate_complex(c)
    with pytest.raises(MalformedComplexError):
        homology_table(c)


def test_complex_rejects_mismatched_shapes():
    with pytest.raises(MalformedComplexError):
        ChainComplex(ZZ, 0, 1, {0: ("a",), 1: ("b",)}, {1: IntegerMatrix.zeros(2, 1)})


def test_identity_cone_is_acyclic():
    c = z121()
    assert identity_map(c).is_chain_map()
    assert is_acyclic(mapping_cone(identity_map(c)))


def test_zero_map_cone_is_a_direct_sum():
    c = z121(GF(2))
    cone = mapping_cone(ChainMap(c, c, 0))
    dims = {n: homology(cone, n).dimension for n in cone.degrees}
    assert dims[4] == 1 and dims[3] == 2 and dims[2] == 1


def test_non_chain_map_has_violations():
    c = z121()
    f = ChainMap(c, c, 0, {4: IntegerMatrix.identity(1)})
    assert not f.is_chain_map()
    with pytest.raises(ShapeMismatchError):
        mapping_cone(f)
