"""Machine verification of the structural theorems over graph corpora.

Each check takes a connected graph and returns (passed, witness) where the
witness is a small dict describing the discrepancy. The corpus runner
aggregates results into per-check reports with full witnesses.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Optional

from .analysis import (
    cut_sizes,
    degree_balanced_mask,
    mask_to_partition,
    partition_side_masks,
)
from .graphs import (
    FamilySpec,
    Graph,
    complement,
    generate,
    is_connected,
    read_graph6_file,
    write_graph6,
)
from .signatures import format_partition
from .solver import upper_bound_main, upper_bound_trivial

FAMILY_TAGS = (
    "complete",
    "complete_minus_e",
    "complete_minus_2e",
    "complete_minus_P2",
    "complete_minus_triangle",
    "star",
    "join_p2_independent",
    "other",
)


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_star(g: Graph) -> bool:
    """One center of degree n-1, every other vertex of degree 1."""
    if g.n < 2:
        return False
    degs = sorted(g.degree(v) for v in range(g.n))
    return degs[-1] == g.n - 1 and all(d == 1 for d in degs[:-1])


def is_join_p2_independent(g: Graph) -> bool:
    """Two adjacent hubs of degree n-1; the rest form an independent set,
    each adjacent to exactly the hubs."""
    if g.n < 3:
        return False
    hubs = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    if len(hubs) != 2 or not g.has_edge(*hubs):
        return False
    others = [v for v in range(g.n) if v not in hubs]
    if any(g.degree(v) != 2 for v in others):
        return False
    return not any(
        g.has_edge(u, v) for i, u in enumerate(others) for v in others[i + 1:]
    )


def classify_family(g: Graph) -> str:
    """Family tag from the shape of the complement; first match wins."""
    comp_edges = sorted(complement(g).edges)
    ce = len(comp_edges)
    if ce == 0:
        return "complete"
    if ce == 1:
        return "complete_minus_e"
    if ce == 2:
        (a, b), (c, d) = comp_edges
        shared = {a, b} & {c, d}
        return "complete_minus_P2" if shared else "complete_minus_2e"
    if ce == 3:
        verts = {v for e in comp_edges for v in e}
        if len(verts) == 3:
            return "complete_minus_triangle"
    if is_star(g):
        return "star"
    if is_join_p2_independent(g):
        return "join_p2_independent"
    return "other"


def _sigma_min(g: Graph) -> int:
    return min(cut_sizes(g))


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise ValueError("check requires a connected graph")


CheckOutcome = tuple[bool, Optional[dict]]


def verify_conjecture2(g: Graph) -> CheckOutcome:
    """Spectrum is a singleton iff the graph is an even-order star or
    complete."""
    _require_connected(g)
    values = sorted(set(cut_sizes(g)))
    singleton = len(values) == 1
    expected = is_complete(g) or (is_star(g) and g.n % 2 == 0)
    if singleton == expected:
        return True, None
    return False, {
        "spectrum": values,
        "singleton": singleton,
        "in_family": expected,
    }


def verify_trivial_bound(g: Graph) -> CheckOutcome:
    """The ceil(n/2)*floor(n/2) bound and its -0/-1/-2 equality families."""
    _require_connected(g)
    s = _sigma_min(g)
    b = upper_bound_trivial(g.n)
    tag = classify_family(g)
    ok = (
        s <= b
        and (s == b) == (tag == "complete")
        and (s == b - 1) == (tag == "complete_minus_e")
        and (s == b - 2)
        == (tag in ("complete_minus_triangle", "complete_minus_2e",
                    "complete_minus_P2"))
    )
    if ok:
        return True, None
    return False, {"sigma": s, "bound": b, "family": tag}


def verify_main_bound(g: Graph) -> CheckOutcome:
    """floor(m/2 + n/4) bound with equality exactly on K_n, K_n-e,
    K_n minus a triangle. Defined for n >= 4."""
    _require_connected(g)
    if g.n < 4:
        raise ValueError("main bound check requires n >= 4")
    s = _sigma_min(g)
    u = upper_bound_main(g.m, g.n)
    tag = classify_family(g)
    ok = s <= u and (s == u) == (
        tag in ("complete", "complete_minus_e", "complete_minus_triangle")
    )
    if ok:
        return True, None
    return False, {"sigma": s, "bound": u, "family": tag}


def verify_degree_balance_lemma(g: Graph) -> CheckOutcome:
    """Any degree-balanced parity signature forces the graph to be a star
    or complete (even order), or a two-hub join or complete (odd order)."""
    _require_connected(g)
    n = g.n
    if n % 2 == 0:
        allowed = is_star(g) or is_complete(g)
    else:
        allowed = is_join_p2_independent(g) or is_complete(g)
    for v1mask in partition_side_masks(n):
        if degree_balanced_mask(g, v1mask):
            if not allowed:
                return False, {
                    "partition": format_partition(mask_to_partition(n, v1mask)),
                    "family": classify_family(g),
                }
    return True, None


def verify_complement_theorem(g: Graph) -> CheckOutcome:
    """sigma(G) + sigma(complement) <= ceil(n/2)*floor(n/2), with equality
    exactly for even-order stars and complete graphs."""
    _require_connected(g)
    s = _sigma_min(g)
    sc = _sigma_min(complement(g))
    b = upper_bound_trivial(g.n)
    expected_eq = is_complete(g) or (is_star(g) and g.n % 2 == 0)
    ok = s + sc <= b and (s + sc == b) == expected_eq
    if ok:
        return True, None
    return False, {"sigma": s, "sigma_complement": sc, "bound": b}


CHECKS: dict[str, Callable[[Graph], CheckOutcome]] = {
    "conjecture2": verify_conjecture2,
    "trivial_bound": verify_trivial_bound,
    "main_bound": verify_main_bound,
    "degree_balance": verify_degree_balance_lemma,
    "complement": verify_complement_theorem,
}


@dataclass(frozen=True)
class Failure:
    graph6: str
    expected: str
    actual: str
    witness: Optional[str] = None


@dataclass
class VerificationReport:
    check_name: str
    graphs_tested: int = 0
    skipped: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures


def resolve_checks(names: Iterable[str] | str) -> list[str]:
    if isinstance(names, str):
        names = [names]
    out = []
    for name in names:
        if name == "all":
            out.extend(c for c in CHECKS if c not in out)
            continue
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}")
        if name not in out:
            out.append(name)
    return out


def run_corpus(
    source,
    checks: Iterable[str] | str = "all",
    max_n: int = 62,
    record_sink: Optional[Callable[[dict], None]] = None,
) -> dict[str, VerificationReport]:
    """Run checks over a corpus and aggregate per-check reports.

    source may be a graph6 file path or any iterable of Graph values.
    Graphs above max_n are skipped (counted). A check whose precondition a
    graph does not meet (main bound below order 4, disconnected input) is
    skipped for that graph only.
    """
    names = resolve_checks(checks)
    if isinstance(source, (str, Path)):
        graphs = read_graph6_file(source)
    else:
        graphs = source
    reports = {name: VerificationReport(check_name=name) for name in names}
    for g in graphs:
        if g.n > max_n:
            for rep in reports.values():
                rep.skipped += 1
            continue
        g6 = None
        for name in names:
            rep = reports[name]
            t0 = time.perf_counter()
            try:
                ok, witness = CHECKS[name](g)
            except ValueError:
                rep.skipped += 1
                rep.elapsed += time.perf_counter() - t0
                continue
            rep.elapsed += time.perf_counter() - t0
            rep.graphs_tested += 1
            if g6 is None and (not ok or record_sink is not None):
                g6 = write_graph6(g).decode("ascii")
            if not ok:
                rep.failures.append(
                    Failure(
                        graph6=g6,
                        expected="theorem holds",
                        actual=repr(witness),
                        witness=witness.get("partition") if witness else None,
                    )
                )
            if record_sink is not None:
                record_sink(
                    {
                        "graph6": g6,
                        "check": name,
                        "pass": ok,
                        "expected": "theorem holds",
                        "actual": None if ok else witness,
                        "witness": (witness or {}).get("partition"),
                    }
                )
    return reports


def main_bound_small_order_report() -> list[dict]:
    """Computed values for the orders below the main bound's hypothesis.

    Reported informationally, without a pass/fail verdict.
    """
    rows = []
    for family, n in (("complete", 2), ("complete", 3), ("path", 3)):
        g = generate(FamilySpec(family, n))
        s = _sigma_min(g)
        u = upper_bound_main(g.m, g.n)
        rows.append(
            {
                "graph": f"{family}(n={n})",
                "graph6": write_graph6(g).decode("ascii"),
                "n": g.n,
                "m": g.m,
                "sigma": s,
                "bound": u,
                "within_bound": s <= u,
            }
        )
    return rows
