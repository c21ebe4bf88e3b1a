"""Exact minimum nearly-balanced cut (rna number) solvers and upper bounds."""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import (
    mask_to_partition,
    partition_cut_masks,
    partition_side_masks,
    partition_to_mask,
)
from .graphs import Graph, FamilySpec, generate
from .signatures import ParityPartition, _check_partition_covers


@dataclass(frozen=True)
class RnaResult:
    value: int
    witness: ParityPartition
    method: str
    nodes_explored: int = 0


def upper_bound_trivial(n: int) -> int:
    """ceil(n/2) * floor(n/2), the largest possible nearly-balanced cut."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return ((n + 1) // 2) * (n // 2)


def upper_bound_main(m: int, n: int) -> int:
    """floor(m/2 + n/4), in exact integer arithmetic."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    return (2 * m + n) // 4


def rna_exact_bruteforce(g: Graph) -> RnaResult:
    """Minimum cut over all parity-partitions by full enumeration.

    Works for disconnected graphs too (the definition extends verbatim);
    ties broken by the canonical enumeration order.
    """
    em = g.edge_mask
    best = None
    best_mask = 0
    side_masks = partition_side_masks(g.n)
    for v1mask, cm in zip(side_masks, partition_cut_masks(g.n)):
        cut = (em & cm).bit_count()
        if best is None or cut < best:
            best, best_mask = cut, v1mask
    return RnaResult(
        value=best,
        witness=mask_to_partition(g.n, best_mask),
        method="bruteforce",
        nodes_explored=len(side_masks),
    )


def default_start_partition(g: Graph) -> ParityPartition:
    """Vertices 0..ceil(n/2)-1 against the rest."""
    k = (g.n + 1) // 2
    return ParityPartition(range(k), range(k, g.n))


def _switch_deltas(g: Graph, v1mask: int) -> list[tuple[int, int, int]]:
    """Cut change of every cross swap (u, v), via the sign-difference rule:
    delta = -(d_delta(u) + d_delta(v)) + 2*[uv in E]."""
    adj = g.adjacency
    full = (1 << g.n) - 1
    v2mask = full & ~v1mask
    dd = [0] * g.n
    for v in range(g.n):
        other = v2mask if (v1mask >> v) & 1 else v1mask
        dd[v] = 2 * (adj[v] & other).bit_count() - adj[v].bit_count()
    out = []
    for u in range(g.n):
        if not (v1mask >> u) & 1:
            continue
        for v in range(g.n):
            if (v1mask >> v) & 1:
                continue
            adj_uv = (adj[u] >> v) & 1
            out.append((u, v, -(dd[u] + dd[v]) + 2 * adj_uv))
    return out


def rna_switch_descent(g: Graph, start: ParityPartition) -> RnaResult:
    """Best-improvement local descent over single cross swaps.

    Each step applies the swap with the largest cut decrease (ties by
    lowest (u, v)); stops when no swap decreases the cut, at which point
    every cross pair satisfies the termination condition
    d_delta(u) + d_delta(v) <= 2 if adjacent, <= 0 otherwise.
    """
    _check_partition_covers(g, start)
    v1mask = partition_to_mask(start)
    adj = g.adjacency
    full = (1 << g.n) - 1
    cut = sum(
        (adj[v] & full & ~v1mask).bit_count()
        for v in range(g.n)
        if (v1mask >> v) & 1
    )
    steps = 0
    while True:
        best = None
        for u, v, delta in _switch_deltas(g, v1mask):
            if delta < 0 and (best is None or delta < best[2]):
                best = (u, v, delta)
        if best is None:
            break
        u, v, delta = best
        v1mask = v1mask ^ (1 << u) ^ (1 << v)
        cut += delta
        steps += 1
    return RnaResult(
        value=cut,
        witness=mask_to_partition(g.n, v1mask),
        method="descent",
        nodes_explored=steps,
    )


def rna_exact_bnb(g: Graph) -> RnaResult:
    """Exact minimum via branch and bound.

    Vertices are assigned in descending-degree order to two sides with
    capacities ceil(n/2) and floor(n/2). Node bound: current cut plus, for
    each unassigned vertex, the cheaper of its edge counts into the two
    sides (a full side forces the other term). Admissible, so the result
    matches brute force.
    """
    n = g.n
    adj = g.adjacency
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    cap_a = (n + 1) // 2
    cap_b = n // 2

    start = rna_switch_descent(g, default_start_partition(g))
    best_value = start.value
    best_mask = partition_to_mask(start.witness)
    nodes = 0

    def lower_bound(idx: int, mask_a: int, mask_b: int, cut: int,
                    left_a: int, left_b: int) -> int:
        extra = 0
        for v in order[idx:]:
            to_a = (adj[v] & mask_a).bit_count()
            to_b = (adj[v] & mask_b).bit_count()
            if left_a == 0:
                extra += to_a
            elif left_b == 0:
                extra += to_b
            else:
                extra += to_a if to_a < to_b else to_b
        return cut + extra

    def recurse(idx: int, mask_a: int, mask_b: int, cut: int,
                left_a: int, left_b: int) -> None:
        nonlocal best_value, best_mask, nodes
        nodes += 1
        if cut >= best_value:
            return
        if idx == n:
            best_value = cut
            best_mask = mask_a
            return
        if lower_bound(idx, mask_a, mask_b, cut, left_a, left_b) >= best_value:
            return
        v = order[idx]
        bit = 1 << v
        if left_a > 0:
            recurse(idx + 1, mask_a | bit, mask_b,
                    cut + (adj[v] & mask_b).bit_count(), left_a - 1, left_b)
        # For even n the two sides are interchangeable: pin the first
        # assigned vertex to side A. Odd n has distinct side sizes.
        if left_b > 0 and (n % 2 == 1 or mask_a):
            recurse(idx + 1, mask_a, mask_b | bit,
                    cut + (adj[v] & mask_a).bit_count(), left_a, left_b - 1)

    recurse(0, 0, 0, 0, cap_a, cap_b)
    return RnaResult(
        value=best_value,
        witness=mask_to_partition(n, best_mask),
        method="bnb",
        nodes_explored=nodes,
    )


SOLVERS = {
    "bruteforce": rna_exact_bruteforce,
    "bnb": rna_exact_bnb,
}


def graph_with_rna(k: int) -> Graph:
    """A graph whose minimum nearly-balanced cut is exactly k: the star
    on 2k vertices."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return generate(FamilySpec("star", 2 * k))
