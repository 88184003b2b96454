"""Simple undirected graphs, text formats, and BFS metrics.

Vertices are indexed ``0..n-1`` internally.  Anything printed for a human
uses 1-based labels ``v1..vn``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

UNREACHABLE = -1
"""Distance sentinel for vertices that a BFS cannot reach."""


class GraphFormatError(ValueError):
    """Raised for malformed edge lists or graph6 strings."""


class DisconnectedGraphError(ValueError):
    """Raised when a metric quantity is requested for a disconnected graph."""

    def __init__(self, message: str = "eccentricity undefined: graph disconnected"):
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Build instances with :meth:`from_edges`; it normalises, deduplicates and
    validates the edge set and derives sorted adjacency lists.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            nbrs[u].append(v)
            nbrs[v].append(u)
        adjacency = tuple(tuple(sorted(row)) for row in nbrs)
        return cls(n, frozenset(norm), adjacency)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def degrees(self) -> list[int]:
        return [len(row) for row in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Return the copy where old vertex ``order[i]`` becomes vertex ``i``."""
        pos = {old: new for new, old in enumerate(order)}
        if sorted(pos) != list(range(self.n)):
            raise ValueError("order must be a permutation of the vertices")
        return Graph.from_edges(self.n, ((pos[u], pos[v]) for u, v in self.edges))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __str__(self) -> str:
        body = ", ".join(f"v{u + 1}v{v + 1}" for u, v in self.sorted_edges())
        return f"Graph(n={self.n}, m={self.m}: {body})"


@dataclass(frozen=True)
class Metric:
    """All-pairs hop distances and the eccentricity data derived from them."""

    dist: tuple[tuple[int, ...], ...]
    ecc: tuple[int, ...]
    diam: int
    rad: int

    @property
    def n(self) -> int:
        return len(self.ecc)


# --------------------------------------------------------------------------
# edge lists


def parse_edge_list(text: str) -> Graph:
    """Parse an edge list: optional header line ``n`` then ``u v`` pairs.

    Blank lines and lines starting with ``#`` are ignored.  Without a header
    the vertex count is one more than the largest id seen, so isolated
    vertices can only be declared through the header.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        try:
            values = [int(tok) for tok in tokens]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer token in {line!r}") from None
        if any(v < 0 for v in values):
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        if len(values) == 1 and not seen_content:
            n = values[0]
            seen_content = True
            continue
        seen_content = True
        if len(values) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = values
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        if n is not None and (u >= n or v >= n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range for n={n}")
        edges.append((u, v))
    if n is None:
        if not edges:
            raise GraphFormatError("empty edge list without a vertex-count header")
        n = 1 + max(max(e) for e in edges)
    if n < 1:
        raise GraphFormatError("vertex count must be positive")
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# graph6


_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (upper triangle, column by column, 6 bits per byte)."""
    bits = [
        1 if g.has_edge(i, j) else 0
        for j in range(1, g.n)
        for i in range(j)
    ]
    bits.extend([0] * (-len(bits) % 6))
    chunks = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chunks.append(chr(val + 63))
    return _encode_n(g.n) + "".join(chunks)


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 string; the ``>>graph6<<`` header is optional."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= d <= 63 for d in data):
        raise GraphFormatError(f"graph6 byte out of range in {s!r}")
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] != 63:
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size field")
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(
            f"graph6 length mismatch: n={n} needs {(nbits + 5) // 6} data bytes, got {len(body)}"
        )
    if n < 1:
        raise GraphFormatError("graph6 encodes an empty graph")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# --------------------------------------------------------------------------
# distances


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get ``UNREACHABLE``."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range for n={g.n}")
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in g.adjacency[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du
                queue.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    return UNREACHABLE not in bfs_distances(g, 0)


def metric(g: Graph) -> Metric:
    """Distances, eccentricities, diameter and radius of a connected graph.

    Raises
    ------
    DisconnectedGraphError
        If some pair of vertices is at infinite distance.
    """
    rows = []
    for s in range(g.n):
        row = bfs_distances(g, s)
        if UNREACHABLE in row:
            raise DisconnectedGraphError()
        rows.append(tuple(row))
    ecc = tuple(max(row) for row in rows)
    return Metric(tuple(rows), ecc, max(ecc), min(ecc))
