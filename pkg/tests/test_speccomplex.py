"""Tests for specialization complexes, Ext tables and the structural checks."""
import pytest

from schurext.combinat import Partition, hook
from schurext.config import override_settings
from schurext.errors import GuardExceededError, NoHookRouteError, PreconditionError, ShapeMismatchError
from schurext.exactlin import GF, ZZ, homology, validate_complex
from schurext.polyfun import Divided, Exterior, Schur, Weyl, tensor
from schurext.speccomplex import (
    FilteredFamily,
    Variant,
    ambient_exactness_check,
    build_complex,
    degenerate_split_check,
    ext_from_divided_exterior,
    ext_from_hook,
    ext_schur_query,
    graded_shift_check,
    shifted_complex,
    stable_coh_dims,
    stable_coh_dims_of,
    verify_les,
)

W22 = Weyl(Partition.of(2, 2))


def test_filtered_complex_of_w22_level_one():
    c = build_complex(FilteredFamily(W22, 1))
    assert [c.rank(n) for n in (4, 3, 2)] == [2, 3, 1]
    assert validate_complex(c)
    assert homology(c, 4).is_zero
    assert homology(c, 3).canonical() == (0, (3,))
    assert homology(c, 2).canonical() == (0, (2,))


def test_filtered_complex_of_w22_level_two_is_multiplication_by_two():
    c = build_complex(FilteredFamily(W22, 2))
    assert [c.rank(n) for n in (3, 2)] == [1, 1]
    assert abs(c.diff(3)[0, 0]) == 2


def test_filtered_complex_of_divided_three():
    c = build_complex(FilteredFamily(Divided(3), 1))
    assert [c.rank(n) for n in (3, 2, 1)] == [1, 2, 1]
    assert {abs(v) for v in c.diff(3).entries.values()} == {2}
    assert {abs(v) for v in c.diff(2).entries.values()} == {3}


@pytest.mark.parametrize("variant", [Variant.FULL, Variant.GRADED])
def test_every_variant_is_a_complex(variant, hook_model):
    for f in (W22, Weyl(Partition.of(3, 1)), tensor(Divided(2), Exterior(2))):
        for a in (1, 2):
            assert validate_complex(build_complex(FilteredFamily(f, a, variant)))


def test_family_rejects_schur_atoms():
    with pytest.raises(PreconditionError):
        FilteredFamily(Schur(Partition.of(2)), 1)


def test_ext_from_hook_over_f2():
    table = ext_from_hook(Partition.of(2, 1, 1), W22, GF(2))
    assert table.dims() == {0: 1, 1: 1}


def test_ext_from_hook_integral_torsion():
    table = ext_from_hook(Partition.of(1, 1), Divided(2), ZZ)
    assert table[0].is_zero
    assert table[1].canonical() == (0, (2,))


def test_hom_of_divided_power_to_itself():
    table = ext_from_hook(Partition.of(3), Divided(3), ZZ)
    assert table[0].canonical() == (1, ())
    assert list(table.nonzero()) == [0]


def test_ext_from_hook_preconditions():
    with pytest.raises(PreconditionError):
        ext_from_hook(Partition.of(2, 2), W22)
    with pytest.raises(ShapeMismatchError):
        ext_from_hook(hook(2, 0), W22)


def test_ext_from_divided_exterior():
    table = ext_from_divided_exterior(2, 0, Divided(2), ZZ)
    assert table[0].canonical() == (1, ())
    assert table.source == "D(2)*L(0)"


def test_schur_query_routes_through_a_hook():
    table = ext_schur_query(Partition.of(2, 2), Partition.of(1, 1, 1, 1), GF(2))
    assert table.dims() == {1: 1, 2: 1}
    assert table.rewrite[0] == "Ext(S(2^2),S(1^4))"
    integral = ext_schur_query(Partition.of(2, 2), Partition.of(1, 1, 1, 1), ZZ)
    assert integral[1].canonical() == (0, (3,))
    assert integral[2].canonical() == (0, (2,))


def test_schur_query_routes_agree():
    lam, mu = Partition.of(4, 1), Partition.of(3, 1, 1)
    weyl = ext_schur_query(lam, mu, GF(2), route="weyl")
    conjugate = ext_schur_query(lam, mu, GF(2), route="conjugate")
    assert weyl.same_groups(conjugate)


def test_schur_query_without_hook_route():
    with pytest.raises(NoHookRouteError) as exc:
        ext_schur_query(Partition.of(2, 2), Partition.of(2, 2))
    assert exc.value.exit_code == 3


def test_stable_cohomology_dims():
    assert stable_coh_dims(Partition.of(2), 2) == {1: 1, 2: 1}
    assert stable_coh_dims(Partition.of(1, 1, 1), 3) == {3: 1}
    assert stable_coh_dims(Partition.of(2, 2), 2) == {2: 1, 3: 1}
    assert stable_coh_dims_of(Exterior(3), 2) == {3: 1}


def test_stable_cohomology_guard():
    with override_settings(complex_guard=3):
        with pytest.raises(GuardExceededError):
            stable_coh_dims(Partition.of(4), 2)


@pytest.mark.parametrize("functor", [W22, Weyl(Partition.of(3, 1))])
def test_long_exact_sequence(functor):
    for ring in (ZZ, GF(2), GF(3)):
        report = verify_les(functor, 1, ring)
        assert report.ok, report.failures
        assert report.checked > 0


def test_degenerate_split():
    report = degenerate_split_check(Divided(3), 1, (1, 6))
    assert report.ok, report.failures
    assert report.unverified == [1, 6]
    assert degenerate_split_check(Weyl(Partition.of(2, 1)), 1, (1, 5)).ok


def test_degenerate_split_needs_a_long_window():
    report = degenerate_split_check(Divided(3), 1, (1, 3))
    assert not report.ok


def test_ambient_complex_is_exact():
    assert ambient_exactness_check(Divided(2), (1, 4)).ok
    assert ambient_exactness_check(Weyl(Partition.of(2, 1)), (1, 5), GF(2)).ok


def test_graded_shift():
    assert graded_shift_check(W22, 1).ok
    assert graded_shift_check(tensor(Divided(2), Exterior(1)), 2).ok


def test_shifted_family_matches_graded_terms():
    s = shifted_complex(W22, 1)
    g = build_complex(FilteredFamily(W22, 1, Variant.GRADED))
    assert validate_complex(s)
    for n in s.degrees:
        assert s.rank(n) == g.rank(n + 1)
        assert all(len(w) == n and sum(w) == 3 for w, _ in s.term(n))
    with pytest.raises(PreconditionError):
        shifted_complex(W22, 5)
