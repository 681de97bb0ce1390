"""Tests for run_engine with mocked suites."""
from schurext.engine import RunReport, SuiteResult, run_engine
from schurext.suites import registry as reg
from schurext.suites.base import Tally


class MockSuite:
    def __init__(self, name: str, failures: list[str] | None = None, boom: str = ""):
        self.name = name
        self.failures = failures or []
        self.boom = boom
        self.calls = []

    def run(self, *, max_degree: int = 5, primes: tuple[int, ...] = (2,)) -> Tally:
        self.calls.append((max_degree, primes))
        if self.boom:
            raise RuntimeError(self.boom)
        return Tally(cases=3, failures=list(self.failures))


def test_run_engine_unknown_suite_returns_disabled():
    """Run with a suite not in the registry -> status disabled."""
    report = run_engine(suites=["nonexistent"])
    assert len(report.results) == 1
    assert report.results[0].status == "disabled"
    assert report.results[0].display_name == "nonexistent"
    assert not report.ok


def test_run_engine_with_mock_suite(monkeypatch):
    """Patch the registry so run_engine uses our mock (source of truth is schurext.suites.registry)."""
    mock = MockSuite("mock")
    monkeypatch.setattr(reg, "SUITES", {"mock": mock})
    monkeypatch.setattr(reg, "SUITE_DISPLAY_NAMES", {"mock": "Mock"})
    report = run_engine(suites=["mock"], max_degree=3, primes=(2, 3))
    assert mock.calls == [(3, (2, 3))]
    assert report.total_cases == 3
    assert report.total_failures == 0
    assert report.results[0].status == "ok"
    assert report.results[0].display_name == "Mock"
    assert report.ok


def test_run_engine_all_runs_every_registered_suite(monkeypatch):
    suites = {"a": MockSuite("a"), "b": MockSuite("b", failures=["bad"])}
    monkeypatch.setattr(reg, "SUITES", suites)
    monkeypatch.setattr(reg, "SUITE_DISPLAY_NAMES", {"a": "A", "b": "B"})
    for selection in (None, [], ["all"]):
        report = run_engine(suites=selection)
        assert [r.suite_key for r in report.results] == ["a", "b"]
        assert report.results[1].status == "failed"
        assert report.results[1].failures == ["bad"]
        assert report.total_failures == 1
        assert not report.ok


def test_run_engine_isolates_exceptions(monkeypatch):
    suites = {"x": MockSuite("x", boom="kaput " * 50), "y": MockSuite("y")}
    monkeypatch.setattr(reg, "SUITES", suites)
    report = run_engine(suites=["x", "y"])
    assert report.results[0].status == "error"
    assert len(report.results[0].error_message) == 200
    assert report.results[1].status == "ok"


def test_run_engine_status_summary():
    report = run_engine(suites=["nonexistent"])
    assert "nonexistent" in report.status_summary
    assert "disabled" in report.status_summary


def test_status_summary_shortens_errors():
    report = RunReport(results=[SuiteResult("e", "E", "error", 0, [], 1, "division by zero in suite")])
    assert report.status_summary == "E division_by_zero_in_suite"
