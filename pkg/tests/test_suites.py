"""Tests for the verification suites at small degrees."""
import pytest

from schurext.combinat import Partition, hook
from schurext.config import override_settings
from schurext.speccomplex import CheckReport
from schurext.suites import registry as reg
from schurext.suites.base import Tally, reporting_progress, sample_functors
from schurext.suites.duality import column, two_column
from schurext.suites.invariance import slid_pairs
from schurext.suites.periodicity import minimal_period, periodic_pairs
from schurext.suites.resolutions import expected_degree_one


def test_registry_keys_have_display_names():
    assert list(reg.SUITES) == [
        "invariance",
        "duality",
        "periodicity",
        "twisted",
        "blocks",
        "simplicial",
        "bounds",
        "structure",
        "series",
        "resolutions",
    ]
    assert set(reg.SUITE_DISPLAY_NAMES) == set(reg.SUITES)
    assert all(suite.name == key for key, suite in reg.SUITES.items())


def test_tally():
    t = Tally()
    assert t.check(True, "fine")
    assert not t.check(False, "broken")
    t.absorb(CheckReport("les", checked=0, failures=["oops"]))
    assert t.cases == 3
    assert t.failures == ["broken", "les: oops"]
    assert not t.ok


def test_tally_reports_each_case_while_listening():
    seen = []
    t = Tally()
    t.check(True, "before")
    with reporting_progress(lambda n, ok, msg: seen.append((n, ok, msg))):
        t.check(False, "broken")
        t.absorb(CheckReport("les", checked=3))
    t.check(True, "after")
    assert seen == [(2, False, "broken"), (5, True, "les")]


def test_sample_functors():
    names = [str(f) for f in sample_functors(3)]
    assert names == ["D(3)", "L(3)", "S(3)", "W(2,1)", "D(1)*L(2)"]


def test_helpers():
    assert slid_pairs(3, 1) == [(hook(3, 0), hook(2, 1)), (hook(2, 1), hook(1, 2))]
    assert two_column(3, 1) == Partition.of(2, 1, 1)
    assert column(4) == Partition.of(1, 1, 1, 1)
    assert minimal_period(Partition.of(2), 2) == 2
    assert all(mu.size + q <= 8 for mu, q in periodic_pairs(5, 2))
    assert expected_degree_one(Partition.of(2, 2)) == [Partition.of(4), Partition.of(3, 1)]


@pytest.mark.parametrize("key", list(reg.SUITES))
def test_suite_passes_at_low_degree(key):
    tally = reg.SUITES[key].run(max_degree=3, primes=(2, 3))
    assert tally.cases > 0
    assert tally.ok, tally.failures


def test_suites_stay_inside_tight_guards():
    with override_settings(complex_guard=3, combinat_guard=5):
        assert reg.SUITES["periodicity"].run(max_degree=2).ok
        assert reg.SUITES["resolutions"].run(max_degree=4).ok
