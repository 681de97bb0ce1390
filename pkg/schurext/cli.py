"""
Command-line front end.

    schurext ext --ring gf --p 2 --source "2,1,1" --target-weyl "2,2"
    schurext ext --ring gf --p 2 --schur-pair "5,1^3" "1^8"
    schurext stable-coh --p 2 --mu 2
    schurext series --p 2 --k 3 --tmax 4 --umax 13
    schurext resolution --mu "2,2,2"
    schurext verify --suite all --max-degree 5 --p 2
    schurext complex --target "W(2,2)" --level 1

Data goes to stdout; logs and progress lines ("# ...") never mix with data
rows. Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
3 no hook route, 4 degree guard.
"""
from __future__ import annotations

import functools
import logging

import click

from schurext import __version__
from schurext.combinat import Partition
from schurext.config import get_settings, override_settings
from schurext.engine import RunReport, run_engine
from schurext.errors import SchurExtError, UsageError
from schurext.exactlin import Ring, complex_to_dict, homology
from schurext.polyfun import Weyl, parse_functor
from schurext.render import (
    ext_rows,
    ext_to_dict,
    render,
    resolution_rows,
    resolution_to_dict,
    run_rows,
    run_to_dict,
    series_rows,
    series_to_dict,
    stable_coh_rows,
    stable_coh_to_dict,
)
from schurext.resolutions import schur_resolution_shape, weyl_resolution_shape
from schurext.series import e_series, n_series
from schurext.speccomplex import (
    FilteredFamily,
    Variant,
    build_complex,
    ext_from_divided_exterior,
    ext_from_hook,
    ext_schur_query,
    stable_coh_dims,
    stable_coh_dims_of,
)
from schurext.suites import registry as reg
from schurext.suites.base import reporting_progress

logger = logging.getLogger(__name__)

UNSAFE_GUARD = 10**6


def reports_errors(fn):
    """Map SchurExtError subclasses to their exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except SchurExtError as e:
            logger.debug("command failed error=%s", e)
            click.echo(f"error: {e}", err=True)
            click.get_current_context().exit(e.exit_code)

    return wrapper


def output_options(fn):
    fn = click.option("--csv", "as_csv", is_flag=True, help="CSV rows instead of a table.")(fn)
    fn = click.option("--json", "as_json", is_flag=True, help="JSON instead of a table.")(fn)
    return fn


def ring_options(fn):
    fn = click.option("--p", "p", type=int, default=None, help="Prime for --ring gf.")(fn)
    fn = click.option("--ring", "ring_kind", type=click.Choice(["int", "gf"]), default="int", show_default=True)(fn)
    return fn


def _mode(as_json: bool, as_csv: bool) -> str:
    if as_json and as_csv:
        raise UsageError("--json and --csv are mutually exclusive")
    return "json" if as_json else "csv" if as_csv else "table"


def _partition(text: str) -> Partition:
    return Partition.parse(text)


@click.group()
@click.version_option(__version__, prog_name="schurext")
@click.option("-v", "--verbose", is_flag=True, help="Log at INFO level; verify also prints one line per case.")
@click.option("--unsafe-degree", is_flag=True, help="Lift the degree guards.")
@click.pass_context
def main(ctx: click.Context, verbose: bool, unsafe_degree: bool) -> None:
    """Exact Ext groups between Weyl and Schur functors."""
    ctx.ensure_object(dict)["verbose"] = verbose
    level = logging.INFO if verbose else get_settings().log_level.upper()
    logging.basicConfig(
        level=level,
        format="%(asctime)s | %(levelname)s | %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    if unsafe_degree:
        ctx.with_resource(override_settings(complex_guard=UNSAFE_GUARD, combinat_guard=UNSAFE_GUARD))


@main.command("ext")
@ring_options
@click.option("--source", help="Hook μ: Ext(W_μ, target).")
@click.option("--target-weyl", help="λ for the target W_λ.")
@click.option("--target", "target_expr", help='Target functor expression, e.g. "D(2)*L(1)".')
@click.option("--schur-pair", nargs=2, help="λ μ: Ext(S_λ, S_μ).")
@click.option("--divided-exterior", nargs=2, type=int, help="a b: Ext(D^a ⊗ Λ^b, target).")
@click.option("--route", type=click.Choice(["auto", "weyl", "conjugate"]), default="auto", show_default=True)
@output_options
@reports_errors
def cmd_ext(ring_kind, p, source, target_weyl, target_expr, schur_pair, divided_exterior, route, as_json, as_csv):
    """Ext groups from a hook Weyl functor, from D^a ⊗ Λ^b, or between Schur functors."""
    mode = _mode(as_json, as_csv)
    ring = Ring.parse(ring_kind, p)
    if schur_pair:
        if source or target_weyl or target_expr or divided_exterior:
            raise UsageError("--schur-pair cannot be combined with a source or target")
        lam, mu = (_partition(x) for x in schur_pair)
        table = ext_schur_query(lam, mu, ring, route)
    else:
        if bool(target_weyl) == bool(target_expr):
            raise UsageError("give exactly one of --target-weyl and --target")
        target = Weyl(_partition(target_weyl)) if target_weyl else parse_functor(target_expr)
        if divided_exterior:
            if source:
                raise UsageError("--source and --divided-exterior are mutually exclusive")
            table = ext_from_divided_exterior(*divided_exterior, target, ring)
        elif source:
            table = ext_from_hook(_partition(source), target, ring)
        else:
            raise UsageError("give --source, --divided-exterior or --schur-pair")
    if mode == "table":
        for step in table.rewrite:
            click.echo(f"# {step}")
    headers, rows = ext_rows(table)
    click.echo(render(mode, headers, rows, ext_to_dict(table)))


@main.command("stable-coh")
@click.option("--ring", "ring_kind", type=click.Choice(["int", "gf"]), default="gf", show_default=True)
@click.option("--p", "p", type=int, default=None, help="Prime; required with --ring gf.")
@click.option("--mu", help="μ for S_μ.")
@click.option("--functor", "functor_expr", help="Any functor expression instead of S_μ.")
@output_options
@reports_errors
def cmd_stable_coh(ring_kind, p, mu, functor_expr, as_json, as_csv):
    """Dimensions of stable cohomology over F_p."""
    mode = _mode(as_json, as_csv)
    if ring_kind == "int":
        raise UsageError("stable cohomology is only computed over F_p; use --ring gf")
    ring = Ring.parse(ring_kind, p)
    if bool(mu) == bool(functor_expr):
        raise UsageError("give exactly one of --mu and --functor")
    if mu:
        shape = _partition(mu)
        dims = stable_coh_dims(shape, ring.p)
        payload = stable_coh_to_dict(shape, ring.p, dims)
    else:
        functor = parse_functor(functor_expr)
        dims = stable_coh_dims_of(functor, ring.p)
        payload = {"functor": str(functor), "p": ring.p, "dims": {str(j): v for j, v in sorted(dims.items())}}
    headers, rows = stable_coh_rows(dims)
    click.echo(render(mode, headers, rows, payload))


@main.command("series")
@click.option("--p", "p", type=int, required=True)
@click.option("--k", "k", type=int, required=True, help="Index k of E_k (or b of N_b).")
@click.option("--tmax", type=int, default=None, help="t-degree window (default from settings).")
@click.option("--umax", type=int, default=None, help="u-degree window (default from settings).")
@click.option("--kind", type=click.Choice(["E", "N"]), default="E", show_default=True)
@click.option("--method", type=click.Choice(["closed", "recursive"]), default="closed", show_default=True)
@output_options
@reports_errors
def cmd_series(p, k, tmax, umax, kind, method, as_json, as_csv):
    """Truncated Ext series E_k(t,u) or N_b(t,u)."""
    mode = _mode(as_json, as_csv)
    series = e_series(k, p, tmax, umax, method) if kind == "E" else n_series(k, p, tmax, umax)
    headers, rows = series_rows(series)
    if mode == "table":
        click.echo(f"# {kind}_{k} p={p} window t≤{series.t_max} u≤{series.u_max}")
        click.echo(f"# {series}")
    click.echo(render(mode, headers, rows, series_to_dict(k, p, series)))


@main.command("resolution")
@click.option("--mu", required=True)
@click.option("--flavor", type=click.Choice(["divided", "exterior"]), default="divided", show_default=True)
@output_options
@reports_errors
def cmd_resolution(mu, flavor, as_json, as_csv):
    """Summands of a short resolution of W_μ (divided) or S_μ (exterior)."""
    mode = _mode(as_json, as_csv)
    shape = _partition(mu)
    res = weyl_resolution_shape(shape) if flavor == "divided" else schur_resolution_shape(shape)
    headers, rows = resolution_rows(res)
    if mode == "table":
        click.echo(f"# count={res.count()} length={res.length}")
    click.echo(render(mode, headers, rows, resolution_to_dict(res)))


def _echo_case(key: str, n: int, ok: bool, message: str) -> None:
    click.echo(f"# {key} case={n} ok" if ok else f"# {key} case={n} FAIL {message}")


@main.command("verify")
@click.option("--suite", "suites", multiple=True, default=("all",), show_default=True, help="Suite key, repeatable.")
@click.option("--max-degree", type=int, default=5, show_default=True)
@click.option("--p", "primes", type=int, multiple=True, default=(2,), show_default=True, help="Prime, repeatable.")
@output_options
@reports_errors
def cmd_verify(suites, max_degree, primes, as_json, as_csv):
    """Run verification suites; exit 1 on any failure."""
    mode = _mode(as_json, as_csv)
    for p in primes:
        Ring(p)
    keys = list(reg.SUITES) if "all" in suites else list(suites)
    unknown = [k for k in keys if k not in reg.SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; choose from {list(reg.SUITES)}")
    verbose = (click.get_current_context().obj or {}).get("verbose", False)
    report = RunReport()
    for key in keys:
        if verbose and mode != "json":
            with reporting_progress(functools.partial(_echo_case, key)):
                part = run_engine([key], max_degree=max_degree, primes=tuple(primes))
        else:
            part = run_engine([key], max_degree=max_degree, primes=tuple(primes))
        for r in part.results:
            report.results.append(r)
            report.total_cases += r.cases
            report.total_failures += len(r.failures)
            if mode != "json":
                click.echo(f"# suite={r.suite_key} status={r.status} cases={r.cases} failures={len(r.failures)}")
    headers, rows = run_rows(report)
    click.echo(render(mode, headers, rows, run_to_dict(report)))
    if mode != "json":
        for r in report.results:
            for failure in r.failures:
                click.echo(f"# FAIL {r.suite_key}: {failure}")
            if r.error_message:
                click.echo(f"# {r.status.upper()} {r.suite_key}: {r.error_message}")
    if not report.ok:
        click.get_current_context().exit(1)


@main.command("complex")
@ring_options
@click.option("--target", "target_expr", required=True, help='Functor expression, e.g. "W(2,2)".')
@click.option("--level", type=int, default=1, show_default=True)
@click.option("--variant", type=click.Choice([v.value for v in Variant]), default="full", show_default=True)
@click.option("--window", nargs=2, type=int, default=None, help="lo hi, required for windowed variants.")
@output_options
@reports_errors
def cmd_complex(ring_kind, p, target_expr, level, variant, window, as_json, as_csv):
    """Dump a specialization complex: ranks and homology, or the full matrices as JSON."""
    mode = _mode(as_json, as_csv)
    ring = Ring.parse(ring_kind, p)
    fam = FilteredFamily(parse_functor(target_expr), level, Variant(variant), tuple(window) if window else None)
    c = build_complex(fam, ring)
    rows = [[n, c.rank(n), str(homology(c, n))] for n in c.degrees]
    click.echo(render(mode, ["degree", "rank", "homology"], rows, complex_to_dict(c)))
