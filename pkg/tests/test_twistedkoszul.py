"""Tests for the twisted Koszul operators and the chain maps built from them."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurext.combinat import OrderedSetPartition, ordered_partitions
from schurext.errors import PreconditionError, ShapeMismatchError
from schurext.exactlin import GF, ZZ, IntegerMatrix, compose, is_acyclic, mapping_cone
from schurext.polyfun import monomial
from schurext.twistedkoszul import (
    AmbientElement,
    ambient_boundary,
    contraction_eta,
    full_support_part,
    graded_phiB_chain_map,
    koszul_upsilon,
    phi,
    phi_chain_map,
    phi_divided,
    phiB_chain_map,
    sigma_ks,
    sigma_image_counts,
    sigma_preimages,
    theta_chain_map,
    theta_retraction,
    upsilon_via_specialization,
)

X = AmbientElement.monomial((3, 1, 0, 2), (1, 3))


def el(*terms) -> AmbientElement:
    """Sum of (coeff, alpha, beta) monomials."""
    return AmbientElement.of({monomial(alpha, beta): c for c, alpha, beta in terms})


def test_contraction():
    assert contraction_eta(2, X) == AmbientElement.monomial((3, 0, 0, 2), (1, 3))
    assert contraction_eta(3, X).is_zero


def test_contractions_commute():
    for i in range(1, 5):
        for j in range(1, 5):
            assert contraction_eta(i, contraction_eta(j, X)) == contraction_eta(j, contraction_eta(i, X))


def test_koszul_upsilon():
    x = AmbientElement.monomial((3, 1, 0), (1, 3))
    assert koszul_upsilon(x) == AmbientElement.monomial((3, 0, 0), (1, 2, 3), -1)
    assert upsilon_via_specialization(x) == koszul_upsilon(x)


def test_upsilon_squares_to_zero():
    assert koszul_upsilon(koszul_upsilon(X)).is_zero


@st.composite
def monomials(draw, min_degree=2):
    n = draw(st.integers(1, 4))
    alpha = draw(st.lists(st.integers(0, 3), min_size=n, max_size=n).filter(lambda a: sum(a) >= min_degree))
    beta = draw(st.sets(st.integers(1, n), max_size=n))
    return AmbientElement.monomial(alpha, sorted(beta))


@settings(max_examples=80, deadline=None)
@given(monomials(), st.data())
def test_contractions_commute_on_random_monomials(x, data):
    i = data.draw(st.integers(1, x.n))
    j = data.draw(st.integers(1, x.n))
    assert contraction_eta(i, contraction_eta(j, x)) == contraction_eta(j, contraction_eta(i, x))


@settings(max_examples=80, deadline=None)
@given(monomials())
def test_upsilon_squares_to_zero_on_random_monomials(x):
    assert koszul_upsilon(koszul_upsilon(x)).is_zero


def test_phi_on_three_coordinates():
    x = AmbientElement.monomial((3, 1, 0), (1, 3))
    expected = el(
        (-2, (2, 1, 0, 0), (1, 3, 4)),
        (1, (2, 0, 1, 0), (1, 2, 4)),
        (-2, (3, 0, 0, 0), (1, 3, 4)),
    )
    assert phi(x) == expected


def test_phi_of_a_pure_divided_power():
    x = AmbientElement.monomial((4, 0, 0), (2, 3))
    assert phi(x) == AmbientElement.monomial((3, 0, 0, 0), (2, 3, 4), -3)
    assert str(phi(AmbientElement.monomial((2,)))) == "-1·e1^(1)⊗e2"


def test_phi_is_a_twisted_homotopy():
    """Φ∂ + ∂Φ + Υ = 0."""
    total = phi(ambient_boundary(X)) + ambient_boundary(phi(X)) + koszul_upsilon(X)
    assert total.is_zero


def test_phi_anticommutes_with_upsilon():
    total = phi(koszul_upsilon(X)) + koszul_upsilon(phi(X))
    assert total.is_zero


def test_phi_divided():
    got = phi_divided(2, (3, 1))
    expected = el(
        (-1, (1, 1, 0, 0), (3, 4)),
        (1, (1, 0, 1, 0), (2, 4)),
        (-1, (1, 0, 0, 1), (2, 3)),
    )
    assert got == expected
    assert phi_divided(0, (2, 1)) == AmbientElement.monomial((2, 1))


@pytest.mark.parametrize("d", [(2,), (2, 1), (1, 2, 1), (3, 1)])
def test_phi_divided_one_is_phi(d):
    assert phi_divided(1, d) == full_support_part(phi(AmbientElement.monomial(d)))


def test_sigma_moves_one_element():
    I = OrderedSetPartition(((1,), (2, 3), (4, 5)))
    J = sigma_ks(I, 2, 4)
    assert J == OrderedSetPartition(((1,), (2, 3, 5), (4, 6)))
    pre = sigma_preimages(J)
    assert sorted(s for _, _, s in pre) == [2, 4, 5]
    assert (I, 2, 4) in pre


def test_sigma_preimage_multiplicity():
    d = (2, 3)
    for N in range(2, sum(d)):
        for J in ordered_partitions(d, N + 1):
            pre = sigma_preimages(J)
            assert len(pre) == N + 1 - len(d)
            for I, k, s in pre:
                assert I.fits(d)
                assert sigma_ks(I, k, s, d) == J


@pytest.mark.parametrize("d", [(1, 2), (2, 2), (2, 3), (3, 1, 2), (2, 2, 2)])
def test_sigma_hits_every_target_the_right_number_of_times(d):
    """Enumerating Σ_{k,s} forward reaches all of Par(d̄; N+1), each exactly N+1-n times."""
    n = len(d)
    for N in range(n, sum(d)):
        hits = sigma_image_counts(d, N)
        assert set(hits) == set(ordered_partitions(d, N + 1))
        assert all(count == N + 1 - n for count in hits.values())


def test_sigma_preconditions():
    I = OrderedSetPartition(((1,), (2, 3)))
    with pytest.raises(PreconditionError):
        sigma_ks(I, 3, 1)
    with pytest.raises(PreconditionError):
        sigma_ks(I, 2, 1)


def test_theta_retraction():
    assert theta_retraction(0, monomial((2, 1))) == AmbientElement.monomial((2, 1))
    assert theta_retraction(1, monomial((2, 0), (2,))) == AmbientElement.monomial((3,), (), -1)
    assert theta_retraction(1, monomial((1, 1), (2,))).is_zero
    with pytest.raises(ShapeMismatchError):
        theta_retraction(2, monomial((2, 0), (2,)))


def test_phi_chain_map_on_the_generator():
    f = phi_chain_map(4, 2, 4)
    assert f.is_chain_map()
    assert f.source.rank(3) == 1
    assert f.block(3).to_rows() == [[-3]]


def test_phi_chain_map_precondition():
    with pytest.raises(PreconditionError):
        phi_chain_map(1, 2, 1)


def test_phi_after_divided_power_map():
    """Φ ∘ Φ^[1] = 2·Φ^[2] on F^2(W_(3))."""
    d, delta, B = 3, 0, 1
    first = phiB_chain_map(d, delta, B)
    step = phi_chain_map(d - B, B, d - B - delta)
    composed = compose(step, first)
    expected = phiB_chain_map(d, delta, B + 1)
    for n in first.source.degrees:
        assert composed.block(n) == expected.block(n) * (B + 1)


@pytest.mark.parametrize("ring", [ZZ, GF(2), GF(3)])
def test_divided_power_map_is_a_quasi_isomorphism(ring):
    f = phiB_chain_map(4, 1, 1, ring)
    assert f.is_chain_map()
    assert is_acyclic(mapping_cone(f))


def test_theta_retracts_graded_divided_power_map():
    d, delta, B = 3, 0, 1
    g = compose(theta_chain_map(d, delta, B), graded_phiB_chain_map(d, delta, B))
    for n in g.source.degrees:
        assert g.block(n) == IntegerMatrix.identity(g.source.rank(n))
