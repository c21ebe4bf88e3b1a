"""Parity-partition enumeration, spectra, degree balance and count identities."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .graphs import Graph, edge_slot, is_connected
from .signatures import (
    ParityPartition,
    SignedGraph,
    _check_partition_covers,
    signature_from_partition,
)

SPECTRUM_SOFT_CAP = 20


@dataclass(frozen=True)
class Spectrum:
    """Sorted achievable negative-edge counts over all parity-signatures."""

    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("spectrum cannot be empty")
        if list(self.values) != sorted(set(self.values)):
            raise ValueError("spectrum values must be sorted and distinct")

    @property
    def minimum(self) -> int:
        return self.values[0]

    @property
    def maximum(self) -> int:
        return self.values[-1]

    def is_singleton(self) -> bool:
        return len(self.values) == 1


@dataclass(frozen=True)
class PartitionStats:
    """Non-edge counts inside/across the two sides, plus the cut size."""

    x1: int
    x2: int
    y: int
    cut: int


@lru_cache(maxsize=None)
def partition_side_masks(n: int) -> tuple[int, ...]:
    """Canonical v1 bitmasks of all unordered parity-partitions of 0..n-1.

    Even n: |v1| = n/2 with vertex 0 fixed in v1 (deduplicates the swap).
    Odd n: v1 is the smaller side, |v1| = (n-1)/2.
    Deterministic order from ascending combinations.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2 == 0:
        combos = (
            (0,) + rest
            for rest in combinations(range(1, n), n // 2 - 1)
        )
    else:
        combos = combinations(range(n), (n - 1) // 2)
    return tuple(sum(1 << v for v in c) for c in combos)


@lru_cache(maxsize=None)
def partition_cut_masks(n: int) -> tuple[int, ...]:
    """For each canonical partition, the colex edge mask of its cross pairs."""
    out = []
    for v1mask in partition_side_masks(n):
        cut = 0
        for u in range(n):
            for v in range(u + 1, n):
                if ((v1mask >> u) & 1) != ((v1mask >> v) & 1):
                    cut |= 1 << edge_slot(u, v)
        out.append(cut)
    return tuple(out)


@lru_cache(maxsize=None)
def partition_inner_masks(n: int) -> tuple[tuple[int, int], ...]:
    """Per partition: colex edge masks of pairs inside v1 and inside v2."""
    out = []
    for v1mask in partition_side_masks(n):
        in1 = in2 = 0
        for u in range(n):
            for v in range(u + 1, n):
                bit_u = (v1mask >> u) & 1
                if bit_u == ((v1mask >> v) & 1):
                    if bit_u:
                        in1 |= 1 << edge_slot(u, v)
                    else:
                        in2 |= 1 << edge_slot(u, v)
        out.append((in1, in2))
    return tuple(out)


def mask_to_partition(n: int, v1mask: int) -> ParityPartition:
    v1 = {v for v in range(n) if (v1mask >> v) & 1}
    return ParityPartition(v1, set(range(n)) - v1)


def partition_to_mask(p: ParityPartition) -> int:
    return sum(1 << v for v in p.v1)


def enumerate_parity_partitions(g: Graph) -> Iterator[ParityPartition]:
    """Each unordered parity-partition of g exactly once, deterministic order."""
    for v1mask in partition_side_masks(g.n):
        yield mask_to_partition(g.n, v1mask)


def cut_sizes(g: Graph) -> tuple[int, ...]:
    """Cut size of every canonical parity-partition, in enumeration order."""
    em = g.edge_mask
    return tuple((em & cm).bit_count() for cm in partition_cut_masks(g.n))


def spectrum(g: Graph) -> Spectrum:
    """Exact set of negative-edge counts over all parity-signatures of g."""
    if not is_connected(g):
        raise ValueError("spectrum is defined for connected graphs")
    if g.n > SPECTRUM_SOFT_CAP:
        warnings.warn(
            f"spectrum on n={g.n} enumerates all parity-partitions; "
            f"this is impractical beyond n={SPECTRUM_SOFT_CAP}",
            stacklevel=2,
        )
    return Spectrum(tuple(sorted(set(cut_sizes(g)))))


def sign_difference_sums(g: Graph, v1mask: int) -> tuple[int, int]:
    """Sum of per-vertex sign-differences over v1 and over v2.

    Computed vertex by vertex from the partition-induced signature:
    d_delta(v) = 2 * (neighbors across) - degree(v).
    """
    adj = g.adjacency
    full = (1 << g.n) - 1
    v2mask = full & ~v1mask
    s1 = s2 = 0
    for v in range(g.n):
        nbrs = adj[v]
        if (v1mask >> v) & 1:
            s1 += 2 * (nbrs & v2mask).bit_count() - nbrs.bit_count()
        else:
            s2 += 2 * (nbrs & v1mask).bit_count() - nbrs.bit_count()
    return s1, s2


def is_degree_balanced(s: SignedGraph, p: ParityPartition) -> bool:
    """True iff every cross pair (u in v1, v in v2) has sign-difference sum
    2 when adjacent and 0 when non-adjacent.

    Requires s to be the signature induced by p.
    """
    g = s.graph
    _check_partition_covers(g, p)
    if s != signature_from_partition(g, p):
        raise ValueError("signature does not match the given partition")
    v1mask = partition_to_mask(p)
    return degree_balanced_mask(g, v1mask)


def degree_balanced_mask(g: Graph, v1mask: int) -> bool:
    """Degree-balance test on the partition given as a v1 bitmask."""
    adj = g.adjacency
    full = (1 << g.n) - 1
    v2mask = full & ~v1mask
    dd = [0] * g.n
    for v in range(g.n):
        other = v2mask if (v1mask >> v) & 1 else v1mask
        dd[v] = 2 * (adj[v] & other).bit_count() - adj[v].bit_count()
    for u in range(g.n):
        if not (v1mask >> u) & 1:
            continue
        for v in range(g.n):
            if (v1mask >> v) & 1:
                continue
            want = 2 if (adj[u] >> v) & 1 else 0
            if dd[u] + dd[v] != want:
                return False
    return True


def partition_stats(g: Graph, p: ParityPartition) -> PartitionStats:
    _check_partition_covers(g, p)
    v1mask = partition_to_mask(p)
    return partition_stats_mask(g, v1mask)


def partition_stats_mask(g: Graph, v1mask: int) -> PartitionStats:
    n = g.n
    em = g.edge_mask
    k1 = v1mask.bit_count()
    k2 = n - k1
    cross = 0
    in1 = in2 = 0
    adj = g.adjacency
    full = (1 << n) - 1
    v2mask = full & ~v1mask
    for v in range(n):
        if (v1mask >> v) & 1:
            cross += (adj[v] & v2mask).bit_count()
            in1 += (adj[v] & v1mask).bit_count()
        else:
            in2 += (adj[v] & v2mask).bit_count()
    in1 //= 2
    in2 //= 2
    assert cross + in1 + in2 == em.bit_count()
    return PartitionStats(
        x1=k1 * (k1 - 1) // 2 - in1,
        x2=k2 * (k2 - 1) // 2 - in2,
        y=k1 * k2 - cross,
        cut=cross,
    )


def partition_counts_mask(
    g: Graph, v1mask: int
) -> tuple[int, int, int, int, int]:
    """One-pass (cut, inner1, inner2, dsum1, dsum2) for a v1 bitmask.

    inner1/inner2 are edge counts inside each side; dsum1/dsum2 are the
    per-side sums of vertex sign-differences under the induced signature.
    """
    adj = g.adjacency
    full = (1 << g.n) - 1
    v2mask = full & ~v1mask
    cut = in1 = in2 = s1 = s2 = 0
    for v in range(g.n):
        nbrs = adj[v]
        if (v1mask >> v) & 1:
            across = (nbrs & v2mask).bit_count()
            cut += across
            in1 += nbrs.bit_count() - across
            s1 += 2 * across - nbrs.bit_count()
        else:
            across = (nbrs & v1mask).bit_count()
            in2 += nbrs.bit_count() - across
            s2 += 2 * across - nbrs.bit_count()
    return cut, in1 // 2, in2 // 2, s1, s2


def check_odd_identities(g: Graph, p: ParityPartition) -> bool:
    """Check the two odd-order sign-difference sum identities at p.

    With x1, x2, y the non-edge counts of the partition and the smaller
    side holding (n-1)/2 vertices: the v1 sum of sign-differences must be
    n-1 + 2*x1 - y and the v2 sum must be 2*x2 - y.
    """
    n = g.n
    if n % 2 == 0:
        raise ValueError("identities apply to odd orders only")
    _check_partition_covers(g, p)
    small, large = sorted((p.v1, p.v2), key=len)
    if len(small) != (n - 1) // 2:
        raise ValueError("smaller side must have (n-1)/2 vertices")
    v1mask = sum(1 << v for v in small)
    return odd_identities_hold_mask(g, v1mask)


def odd_identities_hold_mask(g: Graph, v1mask: int) -> bool:
    """Odd-order identity check with v1mask the smaller side."""
    n = g.n
    k1 = v1mask.bit_count()
    k2 = n - k1
    cut, in1, in2, s1, s2 = partition_counts_mask(g, v1mask)
    x1 = k1 * (k1 - 1) // 2 - in1
    x2 = k2 * (k2 - 1) // 2 - in2
    y = k1 * k2 - cut
    return s1 == n - 1 + 2 * x1 - y and s2 == 2 * x2 - y
