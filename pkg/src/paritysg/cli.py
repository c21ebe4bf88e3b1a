"""Command-line front end.

Graphs come from a graph6 file (--input PATH) or inline (--input g6:STRING).
Exit codes: 0 success, 1 verification found a counterexample, 2 usage or
parse error.
"""

from __future__ import annotations

import csv
import io
import json
import random
import sys

import click

from .analysis import spectrum
from .graphs import (
    FAMILY_MIN_N,
    FamilySpec,
    Graph,
    Graph6Error,
    enumerate_connected_labeled,
    generate,
    parse_graph6,
    read_graph6_file,
    write_graph6,
)
from .signatures import ParityPartition, format_partition
from .solver import (
    default_start_partition,
    rna_exact_bnb,
    rna_exact_bruteforce,
    rna_switch_descent,
    upper_bound_main,
    upper_bound_trivial,
)
from .verify import (
    classify_family,
    main_bound_small_order_report,
    resolve_checks,
    run_corpus,
)


def _load_graphs(input_spec: str) -> list[Graph]:
    try:
        if input_spec.startswith("g6:"):
            return [parse_graph6(input_spec[3:])]
        return list(read_graph6_file(input_spec))
    except FileNotFoundError:
        raise click.UsageError(f"input file not found: {input_spec}")
    except Graph6Error as exc:
        raise click.UsageError(f"graph6 parse error: {exc}")


def _emit(rows: list[dict], fmt: str) -> None:
    if fmt == "json":
        for row in rows:
            click.echo(json.dumps(row))
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else [])
        writer.writeheader()
        writer.writerows(rows)
        click.echo(buf.getvalue(), nl=False)
        return
    if rows:
        widths = {
            k: max(len(k), *(len(str(r[k])) for r in rows)) for k in rows[0]
        }
        click.echo("  ".join(k.ljust(widths[k]) for k in rows[0]))
        for row in rows:
            click.echo(
                "  ".join(str(row[k]).ljust(widths[k]) for k in rows[0])
            )


format_option = click.option(
    "--format", "fmt", type=click.Choice(["table", "csv", "json"]),
    default="table", show_default=True,
)


@click.group()
def main():
    """Exact rna-number solvers and theorem verification for small graphs."""


@main.command()
@click.option("--input", "input_spec", required=True,
              help="graph6 file path or g6:STRING")
@click.option("--method", type=click.Choice(["bruteforce", "bnb", "descent"]),
              default="bnb", show_default=True)
@click.option("--seed", type=int, default=None,
              help="randomized restarts for descent")
@format_option
def rna(input_spec, method, seed, fmt):
    """Minimum nearly-balanced cut per input graph."""
    rows = []
    for g in _load_graphs(input_spec):
        if method == "bruteforce":
            res = rna_exact_bruteforce(g)
        elif method == "bnb":
            res = rna_exact_bnb(g)
        else:
            res = rna_switch_descent(g, default_start_partition(g))
            if seed is not None:
                rng = random.Random(seed)
                for _ in range(10):
                    verts = list(range(g.n))
                    rng.shuffle(verts)
                    half = (g.n + 1) // 2
                    start = ParityPartition(verts[:half], verts[half:])
                    cand = rna_switch_descent(g, start)
                    if cand.value < res.value:
                        res = cand
        rows.append(
            {
                "graph6": write_graph6(g).decode("ascii"),
                "n": g.n,
                "m": g.m,
                "value": res.value,
                "method": res.method,
                "witness": format_partition(res.witness),
                "bound_trivial": upper_bound_trivial(g.n),
                "bound_main": upper_bound_main(g.m, g.n),
            }
        )
    _emit(rows, fmt)


@main.command(name="spectrum")
@click.option("--input", "input_spec", required=True)
@format_option
def spectrum_cmd(input_spec, fmt):
    """All achievable negative-edge counts per input graph."""
    rows = []
    for g in _load_graphs(input_spec):
        sp = spectrum(g)
        rows.append(
            {
                "graph6": write_graph6(g).decode("ascii"),
                "n": g.n,
                "m": g.m,
                "spectrum": (
                    list(sp.values) if fmt == "json"
                    else ",".join(map(str, sp.values))
                ),
            }
        )
    _emit(rows, fmt)


@main.command()
@click.option("--input", "input_spec", required=True)
@format_option
def classify(input_spec, fmt):
    """Named-family tag per input graph."""
    rows = [
        {
            "graph6": write_graph6(g).decode("ascii"),
            "n": g.n,
            "family": classify_family(g),
        }
        for g in _load_graphs(input_spec)
    ]
    _emit(rows, fmt)


@main.command()
@click.option("--checks", default="all", show_default=True,
              help="comma-separated check names, or 'all'")
@click.option("--input", "input_spec", default=None)
@click.option("--enumerate", "enum_n", type=int, default=None,
              help="verify over all connected labeled graphs up to this order")
@click.option("--max-n", type=int, default=62, show_default=True)
@format_option
def verify(checks, input_spec, enum_n, max_n, fmt):
    """Verify theorems over a corpus; exit 1 on any counterexample."""
    try:
        names = resolve_checks(checks.split(","))
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if (input_spec is None) == (enum_n is None):
        raise click.UsageError("provide exactly one of --input / --enumerate")
    if input_spec is not None:
        source = _load_graphs(input_spec)
    else:
        if not (1 <= enum_n <= 7):
            raise click.UsageError("--enumerate supports orders 1..7")
        source = (
            g for n in range(1, enum_n + 1)
            for g in enumerate_connected_labeled(n)
        )

    sink = None
    if fmt == "json":
        sink = lambda rec: click.echo(json.dumps(rec))
    reports = run_corpus(source, names, max_n=max_n, record_sink=sink)

    if fmt != "json":
        rows = [
            {
                "check": rep.check_name,
                "tested": rep.graphs_tested,
                "skipped": rep.skipped,
                "failures": len(rep.failures),
                "status": "pass" if rep.passed else "FAIL",
            }
            for rep in reports.values()
        ]
        _emit(rows, fmt)
        for rep in reports.values():
            for f in rep.failures:
                click.echo(
                    f"counterexample [{rep.check_name}] {f.graph6}: {f.actual}"
                )
        if "main_bound" in reports:
            click.echo("main bound below order 4 (informational):")
            for row in main_bound_small_order_report():
                click.echo(
                    f"  {row['graph']}: sigma={row['sigma']} "
                    f"bound={row['bound']}"
                )
    if any(rep.failures for rep in reports.values()):
        sys.exit(1)


@main.command()
@click.option("--family", required=True,
              type=click.Choice(sorted(FAMILY_MIN_N)))
@click.option("--n", "order", type=int, required=True)
@click.option("--edges", "as_edges", is_flag=True,
              help="print an edge list instead of graph6")
def gen(family, order, as_edges):
    """Emit a named family graph."""
    try:
        g = generate(FamilySpec(family, order))
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if as_edges:
        click.echo(_edge_line(g))
    else:
        click.echo(write_graph6(g).decode("ascii"))


def _edge_line(g: Graph) -> str:
    body = ",".join(f"{u}-{v}" for u, v in sorted(g.edges))
    return f"n={g.n} edges={body}"


@main.command()
@click.option("--input", "input_spec", required=True)
@click.option("--to", "target", type=click.Choice(["g6", "edges"]),
              required=True)
def convert(input_spec, target):
    """Re-emit input graphs as graph6 or edge lists."""
    for g in _load_graphs(input_spec):
        if target == "g6":
            click.echo(write_graph6(g).decode("ascii"))
        else:
            click.echo(_edge_line(g))


if __name__ == "__main__":
    main()
