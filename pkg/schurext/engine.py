"""
Engine runner: runs verification suites with per-suite isolation and timing.

Returns a structured RunReport for the CLI and logging.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

from schurext.suites import registry as reg

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    """Result of running one verification suite."""

    suite_key: str
    display_name: str
    status: str  # "ok" | "failed" | "error" | "disabled"
    cases: int
    failures: list[str]
    duration_ms: int
    error_message: str = ""


@dataclass
class RunReport:
    """Full report after running the engine."""

    total_cases: int = 0
    total_failures: int = 0
    results: list[SuiteResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status == "ok" for r in self.results)

    @property
    def status_summary(self) -> str:
        parts = []
        for r in self.results:
            if r.status == "ok":
                parts.append(f"{r.display_name} ok")
            elif r.status == "disabled":
                parts.append(f"{r.display_name} disabled")
            elif r.status == "failed":
                parts.append(f"{r.display_name} {len(r.failures)}_failures")
            else:
                short = (r.error_message or "error")[:40].replace(" ", "_")
                parts.append(f"{r.display_name} {short}")
        return ", ".join(parts)


def run_engine(
    suites: list[str] | None = None,
    max_degree: int = 5,
    primes: tuple[int, ...] = (2,),
) -> RunReport:
    """
    Run selected suites and capture per-suite outcomes.
    If suites is None, empty or ["all"], run every registered suite.
    """
    report = RunReport()
    if not suites or suites == ["all"]:
        suites = list(reg.SUITES.keys())

    for suite_key in suites:
        suite = reg.SUITES.get(suite_key)
        display_name = reg.SUITE_DISPLAY_NAMES.get(suite_key, suite_key)

        if not suite:
            report.results.append(
                SuiteResult(
                    suite_key=suite_key,
                    display_name=display_name,
                    status="disabled",
                    cases=0,
                    failures=[],
                    duration_ms=0,
                    error_message="not in registry",
                )
            )
            continue

        start = time.perf_counter()
        try:
            tally = suite.run(max_degree=max_degree, primes=tuple(primes))
            duration_ms = int((time.perf_counter() - start) * 1000)
            report.results.append(
                SuiteResult(
                    suite_key=suite_key,
                    display_name=display_name,
                    status="ok" if tally.ok else "failed",
                    cases=tally.cases,
                    failures=list(tally.failures),
                    duration_ms=duration_ms,
                )
            )
            report.total_cases += tally.cases
            report.total_failures += len(tally.failures)
            log = logger.info if tally.ok else logger.warning
            log(
                "engine suite=%s cases=%s failures=%s duration_ms=%s",
                suite_key,
                tally.cases,
                len(tally.failures),
                duration_ms,
            )
        except Exception as e:
            duration_ms = int((time.perf_counter() - start) * 1000)
            err_msg = str(e)[:200]
            report.results.append(
                SuiteResult(
                    suite_key=suite_key,
                    display_name=display_name,
                    status="error",
                    cases=0,
                    failures=[],
                    duration_ms=duration_ms,
                    error_message=err_msg,
                )
            )
            logger.warning(
                "engine suite=%s error=%s duration_ms=%s",
                suite_key,
                err_msg,
                duration_ms,
            )

    return report
