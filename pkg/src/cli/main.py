"""Command-line entry point.

Every command prints to stdout and logs to stderr. Exit status is 0 on
success or a holding check, 1 when a check fails and 2 on usage or domain
errors.
"""

import functools
import logging
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import click
from pydantic import ValidationError

from src.arithmetic import (
    build_table,
    check_conjugation_iso,
    conjugate_triple,
    divisor_table,
    effective_periods,
    gamma,
    periods,
    quotient_table,
    range_check,
    table_laws,
)
from src.boolean import partition, summarize, truth_table
from src.identities import (
    CheckReport,
    SearchParameters,
    builtin_antitone,
    check_distributive_law,
    check_klein_invariance,
    check_lattice_axioms,
    check_LU_equality,
    check_LU_inclusion,
    check_median_law,
    check_modular_law,
    check_sandwich,
    experiment_modular_inclusion,
    resolve_parameters,
    transport_antitone,
    verify_cube,
    verify_diagonal_identities,
)
from src.lattices import LatticeDescriptor, PowerSetLattice, construct_lattice
from src.products import (
    ProductSpec,
    TernarySpec,
    check_associativity,
    check_torsor_laws,
    check_weak_band,
    hexad,
    opposite,
    product_bounds,
)
from src.quintary import HEXAD_VERTICES, L_TERMS, U_TERMS, TermId, eval_terms
from src.shared.config import configure_logging, get_settings, parse_window
from src.shared.errors import QuintaryError

from .formatting import (
    FORMATS,
    render_mapping,
    render_report,
    render_table,
    render_truth_table,
    to_csv,
    to_json,
)

logger = logging.getLogger(__name__)

EXIT_FAILS = 1
EXIT_ERROR = 2


def exits_on_error(command: Callable[..., Any]) -> Callable[..., Any]:
    """Turn domain and validation errors into exit status 2."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except (QuintaryError, ValidationError, ValueError) as e:
            logger.debug(f"{command.__name__} failed: {e!r}")
            click.echo(f"Error: {e}", err=True)
            click.get_current_context().exit(EXIT_ERROR)

    return wrapper


def format_option(command: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(FORMATS),
        default="text",
        show_default=True,
        help="Output format.",
    )(command)


def search_options(command: Callable[..., Any]) -> Callable[..., Any]:
    """Budget, seed, samples, window and workers of counter-model search."""
    options = [
        click.option("--budget", type=int, default=None, help="Largest exhaustive search space."),
        click.option("--seed", type=int, default=None, help="Seed for sampled searches."),
        click.option("--samples", type=int, default=None, help="Samples when not exhaustive."),
        click.option("--window", default=None, help="Sampling window lo:hi for infinite lattices."),
        click.option("--workers", type=int, default=None, help="Threads for exhaustive search."),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def lattice_option(default: Optional[str] = None) -> Callable[..., Any]:
    return click.option(
        "--lattice",
        "lattice_spec",
        default=default,
        required=default is None,
        help="Lattice spec: arithmetic, chain:n, powerset:n, divisors:K:N, gf:p:d, M3, N5, A*B, file.json.",
    )


def _params(
    budget: Optional[int],
    seed: Optional[int],
    samples: Optional[int],
    window: Optional[str],
    workers: Optional[int],
) -> SearchParameters:
    return resolve_parameters(
        budget=budget,
        seed=seed,
        samples=samples,
        window=parse_window(window) if window else None,
        workers=workers,
    )


def _lattice(spec: str) -> LatticeDescriptor:
    return construct_lattice(spec, max_subspaces=get_settings().max_subspaces)


def split_arguments(text: str) -> List[str]:
    """Split on commas outside ``{}`` and ``<>``."""
    parts, depth, current = [], 0, ""
    for char in text:
        if char in "{<":
            depth += 1
        elif char in "}>":
            depth -= 1
        if char == "," and depth == 0:
            parts.append(current.strip())
            current = ""
        else:
            current += char
    parts.append(current.strip())
    return parts


def _elements(lattice: LatticeDescriptor, texts: Sequence[str]) -> Tuple[Any, ...]:
    return tuple(lattice.parse_element(t) for t in texts)


def _triple(text: str) -> Tuple[int, int, int]:
    try:
        values = tuple(int(v) for v in split_arguments(text))
    except ValueError as e:
        raise click.BadParameter(f"expected three integers a,y,b, got {text!r}") from e
    if len(values) != 3 or min(values) < 0:
        raise click.BadParameter(f"expected three non-negative integers a,y,b, got {text!r}")
    return values  # type: ignore[return-value]


def _triple_callback(ctx: click.Context, param: click.Parameter, value: str) -> Tuple[int, int, int]:
    return _triple(value)


def _range(text: str) -> List[int]:
    lo, hi = parse_window(text)
    return list(range(lo, hi + 1))


def _axis(text: str) -> List[int]:
    """A table axis: 'lo:hi', or a bare R meaning 0:R."""
    if text.strip().isdigit():
        return list(range(int(text) + 1))
    return _range(text)


def _emit_report(report: CheckReport, fmt: str, lattice: Optional[LatticeDescriptor] = None) -> None:
    click.echo(render_report(report, fmt, lattice))
    if not report.holds:
        click.get_current_context().exit(EXIT_FAILS)


@click.group()
@click.option("--log-level", default=None, help="Logging level (default from QUINTARY_LOG_LEVEL).")
@click.option("--env-file", type=click.Path(dir_okay=False), default=None, help="Extra .env file.")
def cli(log_level: Optional[str], env_file: Optional[str]) -> None:
    """Quintary lattice maps L and U, their products and law checks."""
    settings = get_settings(env_file)
    configure_logging(log_level or settings.log_level)


@cli.command()
@click.argument("values", nargs=5)
@lattice_option("arithmetic")
@format_option
@exits_on_error
def bounds(values: Tuple[str, ...], lattice_spec: str, fmt: str) -> None:
    """L-list, L, U-list and U of X A Y B Z (gcd and lcm on integers)."""
    lattice = _lattice(lattice_spec)
    q = _elements(lattice, values)
    terms = eval_terms(lattice, q)
    fmt_el = lattice.format_element
    payload = {
        "quintuple": [fmt_el(v) for v in q],
        "L-list": [fmt_el(terms[t]) for t in L_TERMS],
        "L": fmt_el(terms[TermId.L]),
        "U-list": [fmt_el(terms[t]) for t in U_TERMS],
        "U": fmt_el(terms[TermId.U]),
    }
    if fmt == "json":
        payload = {"command": "bounds", **payload}
    click.echo(render_mapping(payload, fmt))


@cli.command(name="eval")
@click.argument("values", nargs=5)
@lattice_option()
@click.option("--term", "term", type=click.Choice([t.value for t in TermId]), default=None)
@format_option
@exits_on_error
def eval_command(values: Tuple[str, ...], lattice_spec: str, term: Optional[str], fmt: str) -> None:
    """Evaluate every named term (or one) at X A Y B Z."""
    lattice = _lattice(lattice_spec)
    q = _elements(lattice, values)
    terms = eval_terms(lattice, q)
    selected = [TermId(term)] if term else list(TermId)
    payload = {t.value: lattice.format_element(terms[t]) for t in selected}
    click.echo(render_mapping(payload, fmt))


@cli.command()
@click.option("--triple", required=True, callback=_triple_callback, help="a,y,b")
@click.option("--rows", default="0:4", show_default=True, help="x range lo:hi, or R for 0:R")
@click.option("--cols", default="0:6", show_default=True, help="z range lo:hi, or C for 0:C")
@format_option
@exits_on_error
def table(triple: Tuple[int, int, int], rows: str, cols: str, fmt: str) -> None:
    """Multiplication table of x . z over integer ranges."""
    click.echo(render_table(build_table(*triple, _axis(rows), _axis(cols)), fmt))


@cli.command()
@click.option("--triple", required=True, callback=_triple_callback, help="a,y,b")
@click.option("--laws", is_flag=True, help="Also check associativity and the weak-band law.")
@format_option
@exits_on_error
def quotient(triple: Tuple[int, int, int], laws: bool, fmt: str) -> None:
    """The product induced on Z/NZ."""
    result = quotient_table(*triple)
    click.echo(render_table(result, fmt))
    if laws:
        _emit_report(table_laws(result), fmt)


@cli.command(name="divisor-table")
@click.option("--triple", required=True, callback=_triple_callback, help="a,y,b")
@click.option("--d", "d", type=int, required=True, help="Tabulate the divisors of D.")
@click.option("--laws", is_flag=True, help="Also check associativity and the weak-band law.")
@format_option
@exits_on_error
def divisor_table_command(triple: Tuple[int, int, int], d: int, laws: bool, fmt: str) -> None:
    """The product restricted to the divisors of D."""
    result = divisor_table(*triple, d)
    click.echo(render_table(result, fmt))
    if laws:
        _emit_report(table_laws(result), fmt)


@cli.command(name="periods")
@click.option("--triple", required=True, callback=_triple_callback, help="a,y,b")
@format_option
@exits_on_error
def periods_command(triple: Tuple[int, int, int], fmt: str) -> None:
    """Line, column and square periods, base frequency and least periods."""
    data = periods(*triple)
    payload: Dict[str, Any] = {
        "triple": list(triple),
        "n": data.n,
        "m": data.m,
        "N": data.N,
        "K": data.K,
    }
    if not data.degenerate:
        px, pz = effective_periods(*triple)
        payload.update({"least line period": px, "least column period": pz})
    click.echo(render_mapping(payload, fmt))


@cli.command()
@click.option("--triple", required=True, callback=_triple_callback, help="a,y,b")
@click.option("--d", "d", type=int, default=None, help="Also print the conjugate of D.")
@click.option("--check", "run_check", is_flag=True, help="Verify the conjugation isomorphism.")
@search_options
@format_option
@exits_on_error
def conjugate(
    triple: Tuple[int, int, int],
    d: Optional[int],
    run_check: bool,
    fmt: str,
    **search: Any,
) -> None:
    """Conjugate product parameters (b', y', a') and d -> KN/d."""
    data = periods(*triple)
    payload: Dict[str, Any] = {
        "triple": list(triple),
        "KN": data.K * data.N,
        "conjugate triple": list(conjugate_triple(*triple)),
    }
    if d is not None:
        payload["gamma(d)"] = gamma(*triple, d)
    click.echo(render_mapping(payload, fmt))
    if run_check:
        _emit_report(check_conjugation_iso(*triple, _params(**search)), fmt)


@cli.command(name="hexad")
@click.option("--triple", required=True, help="t1,y,t3 as elements of the lattice")
@lattice_option("arithmetic")
@format_option
@exits_on_error
def hexad_command(triple: str, lattice_spec: str, fmt: str) -> None:
    """The six products over one triple with their bounds and opposites."""
    lattice = _lattice(lattice_spec)
    parts = split_arguments(triple)
    if len(parts) != 3:
        raise click.BadParameter(f"expected three elements, got {triple!r}", param_hint="--triple")
    t1, y, t3 = _elements(lattice, parts)
    entries = []
    for spec in hexad(lattice, t1, y, t3):
        low, high = product_bounds(spec)
        entries.append(
            {
                "vertex": spec.vertex,
                "product": spec.describe(),
                "varying": list(spec.varying),
                "bottom": "-" if low is None else lattice.format_element(low),
                "top": "-" if high is None else lattice.format_element(high),
                "opposite": opposite(spec).vertex,
            }
        )
    if fmt == "json":
        click.echo(to_json({"lattice": lattice.name, "triple": parts, "vertices": entries}))
    elif fmt == "csv":
        header = list(entries[0])
        click.echo(to_csv(header, [[_cell(e[k]) for k in header] for e in entries]))
    else:
        for e in entries:
            click.echo(f"{e['product']}  bottom {e['bottom']}  top {e['top']}  opposite {e['opposite']}")


def _cell(value: Any) -> str:
    return " ".join(value) if isinstance(value, list) else str(value)


@cli.command()
@click.option("--universe", type=click.IntRange(0, 64), required=True, help="Points 0..n-1.")
@click.option("--a", "a_text", required=True, help="Set such as {0,2}")
@click.option("--y", "y_text", required=True)
@click.option("--b", "b_text", required=True)
@format_option
@exits_on_error
def regions(universe: int, a_text: str, y_text: str, b_text: str, fmt: str) -> None:
    """Region of every point of the universe for the sets a, y, b."""
    lattice = PowerSetLattice(universe_size=universe)
    a, y, b = _elements(lattice, (a_text, y_text, b_text))
    result = partition(lattice, a, y, b)
    payload = {str(i): label.value for i, label in enumerate(result.labels)}
    click.echo(render_mapping(payload, fmt))


@cli.command(name="truth-table")
@click.option("--summary", is_flag=True, help="Print the row-count regularities instead.")
@format_option
@exits_on_error
def truth_table_command(summary: bool, fmt: str) -> None:
    """All 32 rows of the two-element lattice, grouped by region."""
    rows = truth_table()
    if not summary:
        click.echo(render_truth_table(rows, fmt))
        return
    result = summarize(rows)
    payload = {
        "L differs from U": result.l_differs_from_u,
        **result.mismatches,
        "majority rule violated": result.majority_violations,
        "ternary rule violated": result.ternary_violations,
    }
    click.echo(render_mapping(payload, fmt))


@cli.group()
def check() -> None:
    """Law checks with exhaustive or seeded sampled search."""


def _lattice_check(name: str, checker: Callable[..., CheckReport], doc: str) -> None:
    @check.command(name=name, help=doc)
    @lattice_option()
    @search_options
    @format_option
    @exits_on_error
    def command(lattice_spec: str, fmt: str, **search: Any) -> None:
        lattice = _lattice(lattice_spec)
        _emit_report(checker(lattice, _params(**search)), fmt, lattice)


_lattice_check("distributive", check_LU_equality, "L = U, which holds exactly on distributive lattices.")
_lattice_check("modular", check_LU_inclusion, "L <= U, which fails on lattices containing N5.")
_lattice_check("distributive-law", check_distributive_law, "The distributive law itself.")
_lattice_check("modular-law", check_modular_law, "The modular law itself.")
_lattice_check("equality", check_LU_equality, "L = U on all quintuples.")
_lattice_check("inclusion", check_LU_inclusion, "L <= U on all quintuples.")
_lattice_check("axioms", check_lattice_axioms, "Lattice axioms and order compatibility.")
_lattice_check("median", check_median_law, "The self-dual median law.")
_lattice_check("klein", check_klein_invariance, "Klein four-group invariance of L and U.")
_lattice_check("sandwich", check_sandwich, "L_i <= L and U <= U_i.")


@check.command(name="diagonal")
@click.argument("values", nargs=5)
@lattice_option()
@format_option
@exits_on_error
def check_diagonal(values: Tuple[str, ...], lattice_spec: str, fmt: str) -> None:
    """Diagonal identities instantiated at X A Y B Z."""
    lattice = _lattice(lattice_spec)
    _emit_report(verify_diagonal_identities(lattice, _elements(lattice, values)), fmt, lattice)


@check.command(name="cube")
@click.argument("values", nargs=4)
@lattice_option()
@format_option
@exits_on_error
def check_cube(values: Tuple[str, ...], lattice_spec: str, fmt: str) -> None:
    """The L5/U5 cube spanned by X A B Z."""
    lattice = _lattice(lattice_spec)
    _emit_report(verify_cube(lattice, *_elements(lattice, values)), fmt, lattice)


@check.command(name="antitone")
@lattice_option()
@search_options
@format_option
@exits_on_error
def check_antitone_command(lattice_spec: str, fmt: str, **search: Any) -> None:
    """Transport of L to U through complement or conjugation."""
    lattice = _lattice(lattice_spec)
    report = transport_antitone(lattice, builtin_antitone(lattice), params=_params(**search))
    _emit_report(report, fmt, lattice)


def _product_spec(lattice: LatticeDescriptor, triple: str, vertex: str) -> ProductSpec:
    parts = split_arguments(triple)
    if len(parts) != 3:
        raise click.BadParameter(f"expected three elements, got {triple!r}", param_hint="--triple")
    return ProductSpec(lattice=lattice, vertex=vertex, triple=_elements(lattice, parts))


def _domain(text: Optional[str]) -> Optional[List[int]]:
    return None if text is None else _range(text)


def _product_check(name: str, checker: Callable[..., CheckReport], doc: str) -> None:
    @check.command(name=name, help=doc)
    @lattice_option("arithmetic")
    @click.option("--triple", required=True, help="t1,y,t3")
    @click.option("--vertex", type=click.Choice(HEXAD_VERTICES), default="e", show_default=True)
    @click.option("--domain", default=None, help="Integer domain lo:hi instead of the carrier.")
    @search_options
    @format_option
    @exits_on_error
    def command(
        lattice_spec: str, triple: str, vertex: str, domain: Optional[str], fmt: str, **search: Any
    ) -> None:
        lattice = _lattice(lattice_spec)
        spec = _product_spec(lattice, triple, vertex)
        _emit_report(checker(spec, _domain(domain), _params(**search)), fmt, lattice)


_product_check("assoc", check_associativity, "Associativity of one hexad product.")
_product_check("band", check_weak_band, "Weak-band law of one hexad product.")


@check.command(name="torsor")
@lattice_option("arithmetic")
@click.option("--ab", required=True, help="a,b of the ternary product")
@click.option("--domain", default=None, help="Integer domain lo:hi instead of the carrier.")
@search_options
@format_option
@exits_on_error
def check_torsor(lattice_spec: str, ab: str, domain: Optional[str], fmt: str, **search: Any) -> None:
    """Associativity, para-associativity and middle identities of (xyz)."""
    lattice = _lattice(lattice_spec)
    parts = split_arguments(ab)
    if len(parts) != 2:
        raise click.BadParameter(f"expected two elements, got {ab!r}", param_hint="--ab")
    a, b = _elements(lattice, parts)
    spec = TernarySpec(lattice=lattice, a=a, b=b)
    _emit_report(check_torsor_laws(spec, _domain(domain), _params(**search)), fmt, lattice)


@check.command(name="range")
@click.option("--triple", required=True, callback=_triple_callback, help="a,y,b")
@search_options
@format_option
@exits_on_error
def check_range(triple: Tuple[int, int, int], fmt: str, **search: Any) -> None:
    """K | x.z | N, corners included."""
    _emit_report(range_check(*triple, _params(**search)), fmt)


@cli.group()
def experiment() -> None:
    """Evidence gathering that asserts nothing."""


@experiment.command(name="modular-inclusion")
@lattice_option()
@search_options
@format_option
@exits_on_error
def modular_inclusion(lattice_spec: str, fmt: str, **search: Any) -> None:
    """Is L <= U on this lattice, and is it modular?"""
    lattice = _lattice(lattice_spec)
    result = experiment_modular_inclusion(lattice, _params(**search))
    if fmt == "json":
        click.echo(to_json(result.model_dump(mode="json")))
        return
    for report in (result.modular, result.distributive, result.inclusion, result.equality):
        click.echo(render_report(report, fmt, lattice))
        click.echo()
    click.echo(f"modular but L <= U fails: {str(result.contradicts_modular_inclusion).lower()}")


if __name__ == "__main__":
    cli()
