"""Edge signatures, parity-partitions and the switch calculus.

A parity-partition is a bipartition of the vertices with side sizes
differing by at most one; the signature it induces makes cross edges
negative and internal edges positive. Partitions compare unordered:
(v1, v2) and (v2, v1) are the same partition.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Optional

from .graphs import Graph, is_connected, parse_graph6, write_graph6


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Signature:
    """Mapping from every edge of a graph to +1 or -1."""

    __slots__ = ("_signs",)

    def __init__(self, signs: Mapping[tuple[int, int], int]):
        norm = {}
        for (u, v), s in signs.items():
            if s not in (1, -1):
                raise ValueError(f"sign of edge ({u}, {v}) must be +/-1, got {s}")
            norm[_norm_edge(u, v)] = s
        self._signs = norm

    @property
    def signs(self) -> dict[tuple[int, int], int]:
        return dict(self._signs)

    @property
    def negative_edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(e for e, s in self._signs.items() if s == -1)

    def __getitem__(self, edge: tuple[int, int]) -> int:
        return self._signs[_norm_edge(*edge)]

    def __len__(self) -> int:
        return len(self._signs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Signature) and self._signs == other._signs

    def __hash__(self) -> int:
        return hash(frozenset(self._signs.items()))


class SignedGraph:
    """A graph together with a signature over exactly its edge set."""

    __slots__ = ("graph", "signature")

    def __init__(self, graph: Graph, signature: Signature):
        if set(signature._signs) != set(graph.edges):
            raise ValueError("signature domain does not match graph edge set")
        self.graph = graph
        self.signature = signature

    @classmethod
    def all_positive(cls, graph: Graph) -> "SignedGraph":
        return cls(graph, Signature({e: 1 for e in graph.edges}))

    @classmethod
    def from_negative_edges(cls, graph: Graph, neg) -> "SignedGraph":
        neg = {_norm_edge(*e) for e in neg}
        extra = neg - set(graph.edges)
        if extra:
            raise ValueError(f"negative edges not in graph: {sorted(extra)}")
        return cls(
            graph,
            Signature({e: -1 if e in neg else 1 for e in graph.edges}),
        )

    @property
    def negative_edges(self) -> frozenset[tuple[int, int]]:
        return self.signature.negative_edges

    def sign(self, u: int, v: int) -> int:
        return self.signature[(u, v)]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SignedGraph)
            and self.graph == other.graph
            and self.signature == other.signature
        )

    def __hash__(self) -> int:
        return hash((self.graph, self.signature))

    def __repr__(self) -> str:
        return (
            f"SignedGraph(n={self.graph.n}, "
            f"neg={sorted(self.negative_edges)})"
        )


class ParityPartition:
    """Unordered balanced bipartition of 0..n-1 (sizes differ by <= 1)."""

    __slots__ = ("v1", "v2")

    def __init__(self, v1, v2):
        v1, v2 = frozenset(v1), frozenset(v2)
        if v1 & v2:
            raise ValueError(f"sides overlap: {sorted(v1 & v2)}")
        if abs(len(v1) - len(v2)) > 1:
            raise ValueError(
                f"side sizes {len(v1)} and {len(v2)} differ by more than 1"
            )
        self.v1 = v1
        self.v2 = v2

    @property
    def n(self) -> int:
        return len(self.v1) + len(self.v2)

    def side_of(self, v: int) -> int:
        if v in self.v1:
            return 0
        if v in self.v2:
            return 1
        raise ValueError(f"vertex {v} not in partition")

    def crosses(self, u: int, v: int) -> bool:
        return self.side_of(u) != self.side_of(v)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ParityPartition) and {self.v1, self.v2} == {
            other.v1,
            other.v2,
        }

    def __hash__(self) -> int:
        return hash(frozenset((self.v1, self.v2)))

    def __repr__(self) -> str:
        return (
            f"ParityPartition({sorted(self.v1)}, {sorted(self.v2)})"
        )


@dataclass(frozen=True)
class ParityLabeling:
    """Bijection from vertices 0..n-1 onto labels 1..n."""

    labels: Mapping[int, int]

    def __post_init__(self):
        n = len(self.labels)
        if set(self.labels) != set(range(n)) or set(
            self.labels.values()
        ) != set(range(1, n + 1)):
            raise ValueError("labels must be a bijection 0..n-1 -> 1..n")


@dataclass(frozen=True)
class SignStats:
    """Per-vertex negative/positive degree and their difference."""

    d_neg: int
    d_pos: int

    @property
    def d_delta(self) -> int:
        return self.d_neg - self.d_pos


def _check_partition_covers(g: Graph, p: ParityPartition) -> None:
    if p.v1 | p.v2 != set(range(g.n)):
        raise ValueError("partition does not cover the graph's vertex set")


def signature_from_partition(g: Graph, p: ParityPartition) -> SignedGraph:
    """Signed graph whose negative edges are exactly the cross edges of p."""
    _check_partition_covers(g, p)
    neg = {e for e in g.edges if p.crosses(*e)}
    return SignedGraph.from_negative_edges(g, neg)


def partition_from_labeling(f: ParityLabeling) -> ParityPartition:
    odd = {v for v, lab in f.labels.items() if lab % 2 == 1}
    even = set(f.labels) - odd
    return ParityPartition(odd, even)


def recognize_parity_signature(s: SignedGraph) -> Optional[ParityPartition]:
    """Recover a parity-partition inducing s, or None.

    Positive edges force equal sides, negative edges opposite sides; on a
    connected graph the 2-coloring is unique up to swapping sides. Accept
    only if consistent and nearly balanced. Requires a connected graph.
    """
    g = s.graph
    if not is_connected(g):
        raise ValueError("recognition requires a connected graph")
    side = [-1] * g.n
    side[0] = 0
    queue = deque([0])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        nbrs = adj[u]
        while nbrs:
            b = nbrs & -nbrs
            v = b.bit_length() - 1
            nbrs ^= b
            want = side[u] if s.sign(u, v) == 1 else 1 - side[u]
            if side[v] == -1:
                side[v] = want
                queue.append(v)
            elif side[v] != want:
                return None
    v1 = {v for v in range(g.n) if side[v] == 0}
    v2 = set(range(g.n)) - v1
    if abs(len(v1) - len(v2)) > 1:
        return None
    return ParityPartition(v1, v2)


def switch(s: SignedGraph, v: int) -> SignedGraph:
    """Negate the signs of all edges incident to v."""
    if not (0 <= v < s.graph.n):
        raise ValueError(f"vertex {v} out of range")
    return SignedGraph(
        s.graph,
        Signature(
            {
                e: -sg if v in e else sg
                for e, sg in s.signature._signs.items()
            }
        ),
    )


def switch_at_set(s: SignedGraph, vs) -> SignedGraph:
    """Switch simultaneously at every vertex of vs.

    Flips an edge sign iff exactly one endpoint lies in vs; equal to
    sequential single-vertex switches.
    """
    vs = set(vs)
    for v in vs:
        if not (0 <= v < s.graph.n):
            raise ValueError(f"vertex {v} out of range")
    return SignedGraph(
        s.graph,
        Signature(
            {
                (u, w): -sg if (u in vs) != (w in vs) else sg
                for (u, w), sg in s.signature._signs.items()
            }
        ),
    )


def parity_switch(
    s: SignedGraph, p: ParityPartition, u: int, v: int
) -> tuple[SignedGraph, ParityPartition]:
    """Switch at a cross pair (u, v) and exchange their sides.

    Requires u and v on opposite sides of p; assumes s is the signature
    induced by p, so the returned pair again satisfies that relation.
    """
    _check_partition_covers(s.graph, p)
    if not p.crosses(u, v):
        raise ValueError(f"vertices {u} and {v} are on the same side")
    swapped = {u: v, v: u}
    new_p = ParityPartition(
        {swapped.get(x, x) for x in p.v1},
        {swapped.get(x, x) for x in p.v2},
    )
    return switch_at_set(s, {u, v}), new_p


def sign_stats(s: SignedGraph, v: int) -> SignStats:
    if not (0 <= v < s.graph.n):
        raise ValueError(f"vertex {v} out of range")
    neg = s.negative_edges
    d_neg = sum(1 for e in neg if v in e)
    return SignStats(d_neg=d_neg, d_pos=s.graph.degree(v) - d_neg)


def negative_edge_count(s: SignedGraph) -> int:
    return len(s.negative_edges)


# --- text formats for CLI I/O ------------------------------------------------

def format_signed_graph(s: SignedGraph) -> str:
    """graph6 line plus a comma-separated negative edge list "u-v"."""
    g6 = write_graph6(s.graph).decode("ascii")
    neg = ",".join(f"{u}-{v}" for u, v in sorted(s.negative_edges))
    return f"{g6} {neg}" if neg else g6


def parse_signed_graph(text: str) -> SignedGraph:
    parts = text.strip().split(None, 1)
    g = parse_graph6(parts[0])
    neg = set()
    if len(parts) == 2 and parts[1]:
        for token in parts[1].split(","):
            try:
                u, v = (int(x) for x in token.split("-"))
            except ValueError:
                raise ValueError(f"bad negative-edge token {token!r}") from None
            neg.add(_norm_edge(u, v))
    return SignedGraph.from_negative_edges(g, neg)


def format_partition(p: ParityPartition) -> str:
    """Render as "v1=0,2;v2=1"."""
    side1 = ",".join(str(v) for v in sorted(p.v1))
    side2 = ",".join(str(v) for v in sorted(p.v2))
    return f"v1={side1};v2={side2}"


def parse_partition(text: str) -> ParityPartition:
    sides = {}
    for chunk in text.strip().split(";"):
        key, _, rest = chunk.partition("=")
        if key not in ("v1", "v2") or key in sides:
            raise ValueError(f"bad partition text {text!r}")
        sides[key] = {int(x) for x in rest.split(",") if x != ""}
    if set(sides) != {"v1", "v2"}:
        raise ValueError(f"bad partition text {text!r}")
    return ParityPartition(sides["v1"], sides["v2"])
