"""Tests for partitions, weights, Pieri strips and ordered set partitions."""
import pytest

from schurext.combinat import (
    OrderedSetPartition,
    Partition,
    append_ones,
    check_degree,
    enumerate_weights,
    hook,
    kbar,
    kostka_number,
    ordered_partitions,
    partitions_of,
    pieri_strips,
)
from schurext.config import override_settings
from schurext.errors import GuardExceededError, ParseError, PreconditionError


def test_parse_with_exponents():
    assert Partition.parse("2^3,1^2").parts == (2, 2, 2, 1, 1)
    assert Partition.parse("5,1^3") == hook(5, 3)
    assert Partition.parse("5,1^3").compact() == "5,1^3"


@pytest.mark.parametrize("text", ["", "1,2", "a,b", "2^x"])
def test_parse_rejects_bad_text(text):
    with pytest.raises(ParseError):
        Partition.parse(text)


def test_partition_basics():
    mu = Partition.of(3, 2, 2)
    assert mu.size == 7 and mu.length == 3
    assert mu.conjugate().parts == (3, 3, 1)
    assert mu[5] == 0
    assert mu.bar().parts == (2, 2)
    assert hook(4, 2).hook_params() == (4, 2)
    assert not mu.is_hook
    with pytest.raises(PreconditionError):
        mu.hook_params()


def test_partitions_of_four():
    assert [p.parts for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_append_ones():
    assert append_ones(Partition.of(2), 2).parts == (2, 1, 1)
    assert append_ones(Partition.of(3, 2), 3).parts == (3, 2, 1, 1, 1)
    assert append_ones(Partition.of(3, 2), 0) == Partition.of(3, 2)


def test_pieri_strips():
    assert [g.parts for g in pieri_strips(2, Partition.of(2, 2))] == [(4, 2), (3, 2, 1), (2, 2, 2)]
    assert pieri_strips(0, Partition.of(3, 1)) == [Partition.of(3, 1)]
    assert [g.parts for g in pieri_strips(4, Partition.of(1, 1))] == [(5, 1), (4, 1, 1)]


def test_kbar():
    assert [kbar(3, i, 2) for i in (-1, 1, 2, 3)] == [0, 0, 4, 12]
    assert [kbar(0, i, 3) for i in range(3)] == [3**(i + 1) - 1 for i in range(3)]


def test_enumerate_weights():
    assert enumerate_weights(4, 3, min_first=2) == [(2, 1, 1)]
    assert enumerate_weights(4, 4, min_first=1) == [(1, 1, 1, 1)]
    assert enumerate_weights(3, 2, min_first=1) == [(2, 1), (1, 2)]
    assert (0, 2) in enumerate_weights(2, 2, full_support=False)


def test_kostka_numbers():
    assert kostka_number(Partition.of(2, 1), (1, 1, 1)) == 2
    assert kostka_number(Partition.of(2, 2), (1, 1, 1, 1)) == 2
    assert kostka_number(Partition.of(5), (2, 1, 2)) == 1


def test_ordered_partitions():
    got = [I.blocks for I in ordered_partitions((3, 1), 4)]
    assert got == [((1, 3, 4), (2,)), ((1, 2, 4), (3,)), ((1, 2, 3), (4,))]
    assert [I.blocks for I in ordered_partitions((1, 1, 1), 3)] == [((1,), (2,), (3,))]
    assert [I.blocks for I in ordered_partitions((2,), 2)] == [((1, 2),)]


def test_ordered_set_partition_validation():
    I = OrderedSetPartition(((1,), (2, 3), (4, 5)))
    assert I.minima == (1, 2, 4)
    assert I.block_of(5) == 2
    assert I.fits((1, 3, 2))
    assert not I.fits((1, 1, 2))
    with pytest.raises(PreconditionError):
        OrderedSetPartition(((1,), (3,)))


def test_degree_guard():
    with override_settings(combinat_guard=3):
        check_degree("x", 3)
        with pytest.raises(GuardExceededError) as exc:
            check_degree("x", 4)
    assert exc.value.exit_code == 4
