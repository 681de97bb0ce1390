"""Tests for the Ext power series and the closed-form read-offs."""
import pytest

from schurext.combinat import Partition
from schurext.errors import InvariantError, PreconditionError, ShapeMismatchError
from schurext.series import (
    BiPoly,
    a_series,
    e_series,
    e_polynomial,
    ext_dim_formula,
    gl2_same_block,
    h_polynomial,
    hook_nonvanishing,
    n_series,
)


def test_bipoly_window_and_sign():
    p = BiPoly(2, 2, {(0, 0): 1, (3, 0): 5})
    assert p.coeffs == {(0, 0): 1}
    with pytest.raises(InvariantError):
        BiPoly(2, 2, {(0, 0): -1})
    q = (BiPoly.one(3, 3) + BiPoly.monomial(3, 3, 1, 1)) * BiPoly.monomial(3, 3, 1, 1)
    assert q.terms() == [(1, 1, 1), (2, 2, 1)]


def test_a_series_low_terms():
    a = a_series(2, 4, 8)
    assert a.coefficient(0, 0) == 1
    assert [a.coefficient(1, j) for j in range(9)] == [0, 0, 1, 0, 1, 0, 0, 0, 1]
    assert a.coefficient(2, 4) == 1


def test_e3_mod_two():
    e = e_series(3, 2, 4, 13)
    assert e.u_coefficient(0) == [1]
    assert all(not e.u_coefficient(j) for j in (1, 2, 3, 5, 6, 7))
    assert e.u_coefficient(4) == [1, 1]
    assert e.u_coefficient(8) == [0, 1, 1]
    assert e.u_coefficient(12) == [1, 1, 1, 1]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_closed_form_matches_recursion(p):
    for k in range(12):
        assert e_series(k, p, 10, 30) == e_series(k, p, 10, 30, method="recursive")


def test_top_digit_substitution():
    # k = 2l + 1 with p = 2: E_k(t, u) = E_l(t, u^2)
    for l in range(5):
        assert e_series(2 * l + 1, 2, 8, 16) == e_series(l, 2, 8, 16).substitute_u(2)


def test_constant_term_is_one():
    for k in range(8):
        for p in (2, 3):
            assert e_series(k, p, 4, 4).coefficient(0, 0) == 1


def test_e_series_errors():
    with pytest.raises(PreconditionError):
        e_series(-1, 2)
    with pytest.raises(PreconditionError):
        e_series(1, 2, method="guess")


def test_h_polynomial():
    assert h_polynomial(2, 0, 2) == [0, 1, 1]
    assert h_polynomial(1, 3, 5) == [0, 0, 0, 0, 1]
    assert h_polynomial(2, 2, 2) == [0, 0, 0, 1, 1]


def test_n_series_is_a_shifted_e_series():
    for b in range(4):
        assert n_series(b, 2, 10, 20) == e_series(b, 2, 10, 20).shift(1, b + 1)


def test_ext_dim_formula_examples():
    lam, mu = Partition.of(11), Partition.of(7, 4)
    assert [ext_dim_formula("two_row", lam, mu, j, 2) for j in (0, 1)] == [1, 1]
    lam, mu = Partition.parse("5,1^3"), Partition.parse("1^8")
    assert [ext_dim_formula("hook", lam, mu, j, 2) for j in (2, 3, 4, 5)] == [0, 1, 1, 0]
    assert ext_dim_formula("two_row", Partition.of(3, 1), Partition.of(3, 1), 0, 3) == 1


def test_ext_dim_formula_shape_checks():
    with pytest.raises(ShapeMismatchError):
        ext_dim_formula("two_row", Partition.of(2, 1, 1), Partition.of(2, 2), 0, 2)
    with pytest.raises(ShapeMismatchError):
        ext_dim_formula("hook", Partition.of(3), Partition.of(2), 0, 2)


def test_hook_nonvanishing():
    assert hook_nonvanishing(1, 3, 2)
    assert not hook_nonvanishing(2, 5, 2)
    for m in range(12):
        for n in range(m + 1):
            assert hook_nonvanishing(n, m, 3) == bool(h_polynomial(n + 1, m - n, 3))


def test_gl2_blocks():
    assert not gl2_same_block(Partition.of(7), Partition.of(5, 2), 2)
    assert gl2_same_block(Partition.of(11), Partition.of(7, 4), 2)
    assert gl2_same_block(Partition.of(4, 2), Partition.of(4, 2), 5)
    with pytest.raises(PreconditionError):
        gl2_same_block(Partition.of(5, 2), Partition.of(7), 2)


def test_e_polynomial_reads_one_u_coefficient():
    assert e_polynomial(7, 4, 2) == [1, 1]
    assert e_polynomial(11, 8, 2) == [0, 1, 1]
    assert e_polynomial(15, 12, 2) == [1, 1, 1, 1]
    assert e_polynomial(5, 0, 3) == [1]
    with pytest.raises(PreconditionError):
        e_polynomial(2, 3, 2)
