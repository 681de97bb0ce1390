"""Tests for resolution shapes and the Euler characteristic oracle."""
import pytest

from schurext.combinat import Partition, partitions_of
from schurext.config import override_settings
from schurext.errors import GuardExceededError
from schurext.resolutions import ResolutionShape, SymPoly, euler_check, schur_resolution_shape, summand_count, weyl_resolution_shape

P = Partition.of


def test_resolution_of_three_rows_of_two():
    res = weyl_resolution_shape(P(2, 2, 2))
    assert res.count() == 20
    assert res.length == 4
    assert res.terms[0] == (P(2, 2, 2),)
    assert res.terms[1] == (P(4, 2), P(4, 2), P(3, 2, 1), P(3, 2, 1))
    assert sorted(res.terms[2], reverse=True) == [P(6), P(5, 1), P(5, 1), P(4, 2), P(4, 2), P(4, 1, 1), P(3, 3)]
    assert sorted(res.terms[3], reverse=True) == [P(6), P(6), P(6), P(5, 1), P(5, 1), P(4, 2)]
    assert res.terms[4] == (P(6), P(6))


def test_small_resolutions():
    assert weyl_resolution_shape(P(4)).terms == {0: (P(4),)}
    res = weyl_resolution_shape(P(2, 2))
    assert res.terms == {0: (P(2, 2),), 1: (P(4), P(3, 1)), 2: (P(4),)}
    assert res.count() == 4
    assert summand_count(res) == 4
    assert summand_count(weyl_resolution_shape(P(2, 2, 2))) == 20
    assert summand_count(weyl_resolution_shape(P(5))) == 1


def test_exterior_flavor():
    res = schur_resolution_shape(P(1, 1, 1))
    assert res.terms == {0: (P(3),)} and res.length == 0
    assert schur_resolution_shape(P(3, 1)).terms[0] == (P(2, 1, 1),)
    assert schur_resolution_shape(P(2, 2, 2)).length <= 3


@pytest.mark.parametrize("d", range(1, 7))
def test_length_bounds_and_euler_characteristic(d):
    for mu in partitions_of(d):
        divided = weyl_resolution_shape(mu)
        exterior = schur_resolution_shape(mu)
        assert divided.length <= divided.bound()
        assert exterior.length <= exterior.bound()
        assert all(s[0] >= mu[0] for summands in divided.terms.values() for s in summands)
        assert euler_check(divided)
        assert euler_check(exterior)


def test_euler_check_detects_a_wrong_shape():
    broken = ResolutionShape(P(2, 2), "divided", {0: (P(2, 2),), 1: (P(4),)})
    assert not euler_check(broken)


def test_schur_polynomial_is_symmetric():
    assert SymPoly.schur(P(2, 1), 3).is_symmetric()


def test_to_dict():
    data = weyl_resolution_shape(P(2, 2)).to_dict()
    assert data == {"mu": "2,2", "flavor": "divided", "terms": {"0": ["2,2"], "1": ["4", "3,1"], "2": ["4"]}, "count": 4, "length": 2}


def test_guard():
    with override_settings(combinat_guard=5):
        with pytest.raises(GuardExceededError):
            weyl_resolution_shape(P(3, 3))
