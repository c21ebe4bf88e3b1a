"""Simple undirected labeled graphs, graph6 I/O, named families, enumeration.

Vertices are always 0..n-1. Edges are unordered pairs stored as sorted
tuples. Internally a graph also carries a bitmask over edge slots in
column (colex) order, which is what the graph6 format and all the fast
counting code operate on.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator


class Graph6Error(ValueError):
    """Raised for malformed graph6 input or unsupported orders."""


# Edge slot k holds the pair (i, j), i < j, ordered by j then i. This is
# the bit order of the graph6 upper triangle and is independent of n.
_PAIRS: list[tuple[int, int]] = []


def _pairs(count: int) -> list[tuple[int, int]]:
    j = 1 if not _PAIRS else _PAIRS[-1][1] + 1
    while len(_PAIRS) < count:
        for i in range(j):
            _PAIRS.append((i, j))
        j += 1
    return _PAIRS


def edge_slot(u: int, v: int) -> int:
    """Bit index of edge {u, v} in the colex edge order."""
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "_mask", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        mask = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            mask |= 1 << edge_slot(u, v)
        self.n = n
        self._mask = mask
        self._edges: frozenset[tuple[int, int]] | None = None
        self._adj: tuple[int, ...] | None = None

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Fast constructor from a colex edge bitmask (no validation)."""
        g = cls.__new__(cls)
        g.n = n
        g._mask = mask
        g._edges = None
        g._adj = None
        return g

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        if self._edges is None:
            pairs = _pairs(self.n * (self.n - 1) // 2)
            m = self._mask
            out = []
            while m:
                b = m & -m
                out.append(pairs[b.bit_length() - 1])
                m ^= b
            self._edges = frozenset(out)
        return self._edges

    @property
    def edge_mask(self) -> int:
        return self._mask

    @property
    def adjacency(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks."""
        if self._adj is None:
            adj = [0] * self.n
            for u, v in self.edges:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            self._adj = tuple(adj)
        return self._adj

    @property
    def m(self) -> int:
        return self._mask.bit_count()

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and (self._mask >> edge_slot(u, v)) & 1 == 1

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._mask == other._mask
        )

    def __hash__(self) -> int:
        return hash((self.n, self._mask))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


FAMILY_MIN_N = {
    "complete": 1,
    "complete_minus_e": 2,
    "complete_minus_2e": 4,
    "complete_minus_P2": 3,
    "complete_minus_triangle": 3,
    "star": 2,
    "path": 1,
    "cycle": 3,
    "join_p2_independent": 3,
    "independent": 1,
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILY_MIN_N:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < FAMILY_MIN_N[self.family]:
            raise ValueError(
                f"family {self.family!r} requires n >= "
                f"{FAMILY_MIN_N[self.family]}, got {self.n}"
            )


def _complete_edges(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def generate(spec: FamilySpec) -> Graph:
    """Build a named family graph with its canonical labeling.

    Star center is vertex 0; join_p2_independent hubs are vertices 0 and 1;
    edges removed from complete graphs are taken among the lowest-indexed
    vertices.
    """
    n, fam = spec.n, spec.family
    if fam == "complete":
        return Graph(n, _complete_edges(n))
    if fam == "complete_minus_e":
        edges = set(_complete_edges(n))
        edges.discard((0, 1))
        return Graph(n, edges)
    if fam == "complete_minus_2e":
        edges = set(_complete_edges(n))
        edges -= {(0, 1), (2, 3)}
        return Graph(n, edges)
    if fam == "complete_minus_P2":
        edges = set(_complete_edges(n))
        edges -= {(0, 1), (0, 2)}
        return Graph(n, edges)
    if fam == "complete_minus_triangle":
        edges = set(_complete_edges(n))
        edges -= {(0, 1), (0, 2), (1, 2)}
        return Graph(n, edges)
    if fam == "star":
        return Graph(n, [(0, v) for v in range(1, n)])
    if fam == "path":
        return Graph(n, [(v, v + 1) for v in range(n - 1)])
    if fam == "cycle":
        return Graph(n, [(v, (v + 1) % n) for v in range(n)])
    if fam == "join_p2_independent":
        edges = [(0, 1)]
        edges += [(h, v) for h in (0, 1) for v in range(2, n)]
        return Graph(n, edges)
    if fam == "independent":
        return Graph(n, [])
    raise AssertionError(fam)


GRAPH6_HEADER = b">>graph6<<"


def parse_graph6(text: bytes | str) -> Graph:
    """Decode a single graph6 line (orders 1..62)."""
    data = text.encode("ascii") if isinstance(text, str) else text
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise Graph6Error("empty graph6 string")
    head = data[0]
    if head == 126:
        raise Graph6Error("multi-byte order encoding (n > 62) not supported")
    if not (63 <= head <= 126):
        raise Graph6Error(f"header byte {head} outside graph6 range")
    n = head - 63
    if n < 1:
        raise Graph6Error("graph6 order must be >= 1")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[1:]
    if len(body) < need:
        raise Graph6Error(
            f"truncated graph6 body: need {need} bytes, got {len(body)}"
        )
    if len(body) > need:
        raise Graph6Error("trailing bytes after graph6 body")
    mask = 0
    pos = 0
    for byte in body:
        if not (63 <= byte <= 126):
            raise Graph6Error(f"body byte {byte} outside graph6 range")
        group = byte - 63
        for shift in range(5, -1, -1):
            if pos >= nbits:
                break
            if (group >> shift) & 1:
                mask |= 1 << pos
            pos += 1
    return Graph.from_edge_mask(n, mask)


def write_graph6(g: Graph) -> bytes:
    """Canonical graph6 encoding; inverse of parse_graph6 for n <= 62."""
    if not (1 <= g.n <= 62):
        raise Graph6Error(f"graph6 single-byte order supports 1..62, got {g.n}")
    nbits = g.n * (g.n - 1) // 2
    mask = g.edge_mask
    out = bytearray([63 + g.n])
    for start in range(0, nbits, 6):
        group = 0
        for shift in range(6):
            pos = start + shift
            if pos < nbits and (mask >> pos) & 1:
                group |= 1 << (5 - shift)
        out.append(group + 63)
    return bytes(out)


def read_graph6_file(path) -> Iterator[Graph]:
    """Yield graphs from a graph6 file, one per line.

    Re-raises parse failures with the offending line number.
    """
    with open(path, "rb") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if lineno == 1 and line == GRAPH6_HEADER:
                continue
            try:
                yield parse_graph6(line)
            except Graph6Error as exc:
                raise Graph6Error(f"{path}:{lineno}: {exc}") from exc


def is_connected(g: Graph) -> bool:
    """True iff g has a single connected component (K1 is connected)."""
    adj = g.adjacency
    seen = 1
    frontier = deque([0])
    while frontier:
        v = frontier.popleft()
        new = adj[v] & ~seen
        seen |= new
        while new:
            b = new & -new
            frontier.append(b.bit_length() - 1)
            new ^= b
    return seen == (1 << g.n) - 1


def complement(g: Graph) -> Graph:
    full = (1 << (g.n * (g.n - 1) // 2)) - 1
    return Graph.from_edge_mask(g.n, full & ~g.edge_mask)


def _mask_connected(n: int, mask: int, pairs: list[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    parts = n
    m = mask
    while m:
        b = m & -m
        u, v = pairs[b.bit_length() - 1]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            parts -= 1
            if parts == 1:
                return True
        m ^= b
    return parts == 1


def enumerate_connected_labeled(n: int) -> Iterator[Graph]:
    """All connected labeled simple graphs on n vertices, 1 <= n <= 7.

    Deterministic order: ascending colex edge bitmask.
    """
    if not (1 <= n <= 7):
        raise ValueError(f"labeled enumeration capped at n <= 7, got {n}")
    for mask in enumerate_connected_masks(n):
        yield Graph.from_edge_mask(n, mask)


@lru_cache(maxsize=None)
def enumerate_connected_masks(n: int) -> tuple[int, ...]:
    """Edge bitmasks of all connected labeled graphs on n vertices (cached)."""
    if not (1 <= n <= 7):
        raise ValueError(f"labeled enumeration capped at n <= 7, got {n}")
    nbits = n * (n - 1) // 2
    pairs = list(_pairs(nbits))
    if n == 1:
        return (0,)
    # A connected graph on n >= 2 vertices has at least n-1 edges.
    min_edges = n - 1
    out = []
    for mask in range(1 << nbits):
        if mask.bit_count() >= min_edges and _mask_connected(n, mask, pairs):
            out.append(mask)
    return tuple(out)
