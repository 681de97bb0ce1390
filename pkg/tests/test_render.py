"""Tests for table, CSV and JSON rendering and the JSON parsers."""
import json

import pytest

from schurext.combinat import Partition
from schurext.engine import RunReport, SuiteResult
from schurext.errors import ParseError
from schurext.exactlin import GF, ZZ, HomologyGroup, complex_to_dict, homology
from schurext.render import (
    ext_from_dict,
    ext_rows,
    ext_to_dict,
    render,
    resolution_from_dict,
    resolution_to_dict,
    complex_from_dict,
    ring_from_str,
    run_from_dict,
    run_rows,
    run_to_dict,
    series_from_dict,
    series_to_dict,
    stable_coh_from_dict,
    stable_coh_to_dict,
)
from schurext.resolutions import weyl_resolution_shape
from schurext.series import e_series
from schurext.polyfun import Weyl
from schurext.speccomplex import ExtTable, FilteredFamily, build_complex


def integral_table() -> ExtTable:
    entries = {0: HomologyGroup(ZZ), 1: HomologyGroup(ZZ, 1, (2, 6))}
    return ExtTable(ZZ, "W(1^2)", "D(2)", entries, ("Ext(W(1^2),D(2))",))


def test_ring_from_str():
    assert ring_from_str("Z") == ZZ
    assert ring_from_str("F_7") == GF(7)
    with pytest.raises(ParseError):
        ring_from_str("Q")


def test_ext_json_round_trip_keeps_zero_groups():
    table = integral_table()
    back = ext_from_dict(json.loads(json.dumps(ext_to_dict(table))))
    assert back == table


def test_ext_rows():
    headers, rows = ext_rows(integral_table())
    assert headers == ["j", "group", "free_rank", "torsion"]
    assert rows == [[1, "Z + Z/2 + Z/6", 1, "2,6"]]
    field = ExtTable(GF(2), "s", "t", {3: HomologyGroup(GF(2), 2)})
    assert ext_rows(field) == (["j", "dim"], [[3, 2]])


def test_stable_coh_and_series_round_trip():
    mu = Partition.of(2, 1)
    assert stable_coh_from_dict(stable_coh_to_dict(mu, 3, {2: 1})) == (mu, 3, {2: 1})
    e = e_series(3, 2, 4, 13)
    assert series_from_dict(series_to_dict(3, 2, e)) == (3, 2, e)


def test_resolution_round_trip():
    res = weyl_resolution_shape(Partition.of(2, 2, 2))
    assert resolution_from_dict(resolution_to_dict(res)) == res


def test_render_modes():
    headers, rows = ["j", "dim"], [[1, 1], [2, 1]]
    assert render("csv", headers, rows, {}) == "j,dim\n1,1\n2,1"
    assert render("json", headers, rows, {"b": 1, "a": 2}) == '{"a": 2, "b": 1}'
    table = render("table", headers, rows, {})
    assert table.splitlines()[0].split() == ["j", "dim"]


def test_run_report_rendering():
    report = RunReport(
        total_cases=3,
        total_failures=1,
        results=[
            SuiteResult("a", "A", "ok", 2, [], 5),
            SuiteResult("b", "B", "failed", 1, ["x"], 7),
        ],
    )
    data = run_to_dict(report)
    assert data["ok"] is False
    assert data["summary"] == "A ok, B 1_failures"
    assert data["suites"][1]["failures"] == ["x"]
    assert run_rows(report)[1] == [["a", "ok", 2, 0, 5], ["b", "failed", 1, 1, 7]]


def test_run_report_json_round_trip():
    report = RunReport(
        total_cases=4,
        total_failures=1,
        results=[
            SuiteResult("a", "A", "ok", 2, [], 5),
            SuiteResult("b", "B", "failed", 2, ["x"], 7),
            SuiteResult("c", "C", "error", 0, [], 1, "boom"),
        ],
    )
    data = run_to_dict(report)
    back = run_from_dict(json.loads(json.dumps(data)))
    assert back == report
    assert run_to_dict(back) == data


def test_complex_dump_round_trip():
    c = build_complex(FilteredFamily(Weyl(Partition.of(2, 2)), 1))
    data = complex_to_dict(c)
    back = complex_from_dict(json.loads(json.dumps(data)))
    assert complex_to_dict(back) == data
    assert [str(homology(back, n)) for n in back.degrees] == [str(homology(c, n)) for n in c.degrees]
