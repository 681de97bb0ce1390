"""
Rendering of results as tables (tabulate), CSV and JSON, plus parsers that
read the JSON forms back into the computational types.
"""
from __future__ import annotations

import csv
import io
import json
from collections.abc import Mapping, Sequence

from tabulate import tabulate

from schurext.combinat import Partition
from schurext.engine import RunReport, SuiteResult
from schurext.errors import ParseError
from schurext.exactlin import GF, ZZ, ChainComplex, HomologyGroup, IntegerMatrix, Ring
from schurext.models import ExtOut, ResolutionOut, RunOut, SeriesOut, StableCohOut
from schurext.resolutions import ResolutionShape
from schurext.series import BiPoly
from schurext.speccomplex import ExtTable

MODES = ("table", "json", "csv")

Rows = list[list[object]]


def ring_from_str(text: str) -> Ring:
    """Inverse of str(Ring): "Z" or "F_p"."""
    if text == "Z":
        return ZZ
    if text.startswith("F_") and text[2:].isdigit():
        return GF(int(text[2:]))
    raise ParseError(f"unknown ring {text!r}")


# --- Ext tables ---


def ext_to_dict(table: ExtTable) -> ExtOut:
    return {
        "ring": str(table.ring),
        "source": table.source,
        "target": table.target,
        "rewrite": list(table.rewrite),
        "groups": {
            str(j): {"free_rank": g.free_rank, "torsion": list(g.invariant_factors)}
            for j, g in sorted(table.entries.items())
        },
    }


def ext_from_dict(data: Mapping) -> ExtTable:
    ring = ring_from_str(data["ring"])
    entries = {
        int(j): HomologyGroup(ring, g["free_rank"], tuple(g["torsion"])) for j, g in data["groups"].items()
    }
    return ExtTable(ring, data["source"], data["target"], entries, tuple(data.get("rewrite", ())))


def ext_rows(table: ExtTable) -> tuple[list[str], Rows]:
    if table.ring.is_field:
        return ["j", "dim"], [[j, g.dimension] for j, g in table.nonzero().items()]
    rows = [
        [j, str(g), g.free_rank, ",".join(map(str, g.invariant_factors))] for j, g in table.nonzero().items()
    ]
    return ["j", "group", "free_rank", "torsion"], rows


# --- stable cohomology ---


def stable_coh_to_dict(mu: Partition, p: int, dims: Mapping[int, int]) -> StableCohOut:
    return {"mu": str(mu), "p": p, "dims": {str(j): v for j, v in sorted(dims.items())}}


def stable_coh_from_dict(data: Mapping) -> tuple[Partition, int, dict[int, int]]:
    return Partition.parse(data["mu"]), data["p"], {int(j): v for j, v in data["dims"].items()}


def stable_coh_rows(dims: Mapping[int, int]) -> tuple[list[str], Rows]:
    return ["j", "dim"], [[j, v] for j, v in sorted(dims.items())]


# --- series ---


def series_to_dict(k: int, p: int, series: BiPoly) -> SeriesOut:
    return {"k": k, "p": p, **series.to_dict()}


def series_from_dict(data: Mapping) -> tuple[int, int, BiPoly]:
    return data["k"], data["p"], BiPoly.from_dict(data)


def series_rows(series: BiPoly) -> tuple[list[str], Rows]:
    return ["t", "u", "coeff"], [[i, j, c] for i, j, c in series.terms()]


# --- resolutions ---


def resolution_to_dict(shape: ResolutionShape) -> ResolutionOut:
    return shape.to_dict()


def resolution_from_dict(data: Mapping) -> ResolutionShape:
    terms = {int(i): tuple(Partition.parse(s) for s in summands) for i, summands in data["terms"].items()}
    return ResolutionShape(Partition.parse(data["mu"]), data["flavor"], terms)


def resolution_rows(shape: ResolutionShape) -> tuple[list[str], Rows]:
    rows: Rows = []
    for i in sorted(shape.terms):
        rows.extend([i, str(s)] for s in shape.terms[i])
    return ["degree", "summand"], rows


# --- engine reports ---


def run_to_dict(report: RunReport) -> RunOut:
    return {
        "ok": report.ok,
        "total_cases": report.total_cases,
        "total_failures": report.total_failures,
        "summary": report.status_summary,
        "suites": [
            {
                "suite": r.suite_key,
                "name": r.display_name,
                "status": r.status,
                "cases": r.cases,
                "failures": list(r.failures),
                "duration_ms": r.duration_ms,
                "error": r.error_message or None,
            }
            for r in report.results
        ],
    }


def run_from_dict(data: Mapping) -> RunReport:
    """Inverse of run_to_dict; ok and summary are recomputed from the suites."""
    results = [
        SuiteResult(
            suite_key=s["suite"],
            display_name=s["name"],
            status=s["status"],
            cases=s["cases"],
            failures=list(s["failures"]),
            duration_ms=s["duration_ms"],
            error_message=s.get("error") or "",
        )
        for s in data["suites"]
    ]
    return RunReport(total_cases=data["total_cases"], total_failures=data["total_failures"], results=results)


def run_rows(report: RunReport) -> tuple[list[str], Rows]:
    rows = [[r.suite_key, r.status, r.cases, len(r.failures), r.duration_ms] for r in report.results]
    return ["suite", "status", "cases", "failures", "duration_ms"], rows


# --- complexes ---


def complex_from_dict(data: Mapping) -> ChainComplex:
    """
    Rebuild a complex from its dump. Basis labels are not part of the dump,
    so term(n) is labeled 0..rank-1.
    """
    ring = ring_from_str(data["ring"])
    lo, hi = data["degrees"]
    ranks = {int(n): r for n, r in data["terms"].items()}
    labels = {n: tuple(range(r)) for n, r in ranks.items()}
    diffs = {
        int(n): IntegerMatrix.from_rows(rows, cols=ranks.get(int(n), 0)) for n, rows in data["diffs"].items()
    }
    return ChainComplex(ring, lo, hi, labels, diffs)


# --- output modes ---


def render_table(headers: Sequence[str], rows: Rows) -> str:
    return tabulate(rows, headers=list(headers), tablefmt="simple")


def render_csv(headers: Sequence[str], rows: Rows) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(list(headers))
    for row in rows:
        w.writerow(row)
    return out.getvalue().rstrip("\n")


def render_json(payload: Mapping) -> str:
    return json.dumps(payload, sort_keys=True, ensure_ascii=False)


def render(mode: str, headers: Sequence[str], rows: Rows, payload: Mapping) -> str:
    """One result in the chosen output mode."""
    if mode == "json":
        return render_json(payload)
    if mode == "csv":
        return render_csv(headers, rows)
    return render_table(headers, rows)
