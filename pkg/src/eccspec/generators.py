"""Named graph families and isomorphism-free enumeration.

Free trees come from the Wright-Richmond-Odlyzko-McKay successor rule on
level sequences.  Connected graphs on ``n`` vertices are grown from those on
``n - 1`` by attaching one new vertex to every nonempty neighbour set and
keeping one representative per canonical certificate; every connected graph
has a non-cut vertex, so nothing is missed.  Prüfer-sequence and labeled
brute-force enumerators are kept as slower cross-checks.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from .config import DEFAULTS
from .graph import Graph, UNREACHABLE, bfs_distances, is_connected, parse_graph6, to_graph6

FAMILIES = (
    "star",
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "complete_multipartite",
    "crown",
    "random_connected",
)
_ALIASES = {"multipartite": "complete_multipartite", "bipartite": "complete_bipartite"}


class EnumerationLimitError(ValueError):
    """Requested enumeration order is beyond the configured cap."""


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse the ``name:p1,p2,...`` grammar, e.g. ``complete_bipartite:2,3``."""
        name, _, rest = text.strip().partition(":")
        name = _ALIASES.get(name, name)
        if name not in FAMILIES:
            raise ValueError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
        raw = [tok for tok in rest.split(",") if tok.strip()] if rest else []
        if name == "random_connected":
            if len(raw) not in (2, 3):
                raise ValueError("random_connected takes n,p[,seed]")
            params = (int(raw[0]), float(raw[1]), int(raw[2]) if len(raw) == 3 else 0)
        else:
            params = tuple(int(tok) for tok in raw)
        spec = cls(name, params)
        spec.validate()
        return spec

    def validate(self) -> None:
        f, p = self.family, self.params
        if f == "random_connected":
            n, prob, _seed = p
            if n < 1 or not 0 < prob <= 1:
                raise ValueError("random_connected needs n >= 1 and 0 < p <= 1")
            return
        if not p or any(x < 1 for x in p):
            raise ValueError(f"{f} needs positive integer parameters, got {p}")
        if f in ("star", "path", "cycle", "complete", "crown") and len(p) != 1:
            raise ValueError(f"{f} takes exactly one parameter")
        if f == "complete_bipartite" and len(p) != 2:
            raise ValueError("complete_bipartite takes p,q")
        if f == "complete_multipartite" and len(p) < 2:
            raise ValueError("complete_multipartite needs at least two parts")
        if f == "cycle" and p[0] < 3:
            raise ValueError("cycle needs n >= 3")
        if f == "crown" and p[0] < 2:
            raise ValueError("crown W_{n,n} needs n >= 2 (n = 1 is disconnected)")

    def __str__(self) -> str:
        return f"{self.family}:{','.join(str(x) for x in self.params)}"


def star(n: int) -> Graph:
    """``K_{1,n-1}`` with vertex 0 as the centre."""
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_multipartite(*parts: int) -> Graph:
    """Parts occupy consecutive vertex ranges in the given order."""
    owner = [k for k, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return Graph.from_edges(
        n, ((u, v) for u, v in itertools.combinations(range(n), 2) if owner[u] != owner[v])
    )


def complete_bipartite(p: int, q: int) -> Graph:
    """Part A is ``0..p-1``, part B is ``p..p+q-1``."""
    return complete_multipartite(p, q)


def crown(n: int) -> Graph:
    """``K_{n,n}`` minus the matching ``i -- n+i``."""
    return Graph.from_edges(
        2 * n, ((i, n + j) for i in range(n) for j in range(n) if i != j)
    )


def random_connected_graph(n: int, edge_prob: float, seed: int) -> Graph:
    """Erdős–Rényi ``G(n, p)``, resampled until connected."""
    if not 0 < edge_prob <= 1:
        raise ValueError("edge_prob must be in (0, 1]")
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(n), 2))
    for _ in range(DEFAULTS.max_random_rejections):
        g = Graph.from_edges(n, (e for e in pairs if rng.random() < edge_prob))
        if is_connected(g):
            return g
    raise RuntimeError(
        f"{DEFAULTS.max_random_rejections} disconnected samples in a row for "
        f"n={n}, p={edge_prob}; use a larger edge probability"
    )


def make_family(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    spec.validate()
    f, p = spec.family, spec.params
    if f == "star":
        return star(p[0])
    if f == "path":
        return path(p[0])
    if f == "cycle":
        return cycle(p[0])
    if f == "complete":
        return complete(p[0])
    if f == "complete_bipartite":
        return complete_bipartite(*p)
    if f == "complete_multipartite":
        return complete_multipartite(*p)
    if f == "crown":
        return crown(p[0])
    return random_connected_graph(*p)


# --------------------------------------------------------------------------
# canonical form


def _initial_colours(g: Graph) -> list[int]:
    """Colours from degree and BFS distance profile (labeling-invariant)."""
    n = g.n
    sigs = []
    for u in range(n):
        profile = [0] * (n + 1)
        for d in bfs_distances(g, u):
            profile[d if d != UNREACHABLE else n] += 1
        sigs.append((g.degree(u), tuple(profile)))
    return _rank(sigs)


def _refine(g: Graph, colours: list[int]) -> list[int]:
    """Split colour classes by neighbour-colour multisets until stable.

    The old colour leads each signature, so the relative order of existing
    classes is preserved.
    """
    ncls = len(set(colours))
    while True:
        sigs = [
            (colours[u], tuple(sorted(colours[v] for v in g.adjacency[u])))
            for u in range(g.n)
        ]
        colours = _rank(sigs)
        k = len(set(colours))
        if k == ncls:
            return colours
        ncls = k


def _rank(sigs: list) -> list[int]:
    order = {s: r for r, s in enumerate(sorted(set(sigs)))}
    return [order[s] for s in sigs]


def canonical_order(g: Graph) -> list[int]:
    """Canonical vertex order by individualization and refinement.

    Each search node refines its colouring, individualizes every vertex of
    the first non-singleton class in turn, and recurses; every leaf is a
    discrete colouring, i.e. a vertex order, and the order giving the
    smallest adjacency bit string wins.  Colourings are labeling-invariant,
    so the winner's bit string is too.  Twins (equal neighbourhoods apart
    from each other) inside a class are explored once: swapping them is an
    automorphism that fixes every vertex already individualized.
    """
    n = g.n
    if n == 1:
        return [0]
    nbr_sets = [frozenset(row) for row in g.adjacency]
    best: list = [None, None]

    def bits_of(order: list[int]) -> tuple[bool, ...]:
        return tuple(g.has_edge(order[i], order[j]) for j in range(1, n) for i in range(j))

    def rec(colours: list[int]) -> None:
        colours = _refine(g, colours)
        counts: dict[int, int] = {}
        for c in colours:
            counts[c] = counts.get(c, 0) + 1
        target = min((c for c, k in counts.items() if k > 1), default=None)
        if target is None:
            order = sorted(range(n), key=colours.__getitem__)
            bits = bits_of(order)
            if best[0] is None or bits < best[0]:
                best[0], best[1] = bits, order
            return
        tried: list[int] = []
        for v in range(n):
            if colours[v] != target:
                continue
            if any(nbr_sets[v] - {u} == nbr_sets[u] - {v} for u in tried):
                continue
            tried.append(v)
            rec([2 * c + (0 if u == v or c != target else 1) for u, c in enumerate(colours)])

    rec(_initial_colours(g))
    return best[1]


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_order(g))


def canonical_form(g: Graph) -> bytes:
    """Certificate equal for two graphs exactly when they are isomorphic."""
    return to_graph6(canonical_graph(g)).encode("ascii")


# --------------------------------------------------------------------------
# trees


def _check_tree_order(n: int) -> None:
    if not 1 <= n <= DEFAULTS.max_tree_order:
        raise EnumerationLimitError(f"tree order must be in 1..{DEFAULTS.max_tree_order}, got {n}")


def _level_sequence_to_graph(levels: list[int]) -> Graph:
    edges = []
    stack: list[int] = []
    for i, lev in enumerate(levels):
        while stack and levels[stack[-1]] >= lev:
            stack.pop()
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return Graph.from_edges(len(levels), edges)


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    """Beyer-Hedetniemi successor of a rooted level sequence."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Left subtree of the root, and the tree with that subtree removed."""
    ones = [i for i, lev in enumerate(levels) if lev == 1]
    m = ones[1] if len(ones) > 1 else len(levels)
    left = [levels[i] - 1 for i in range(1, m)]
    rest = [0] + levels[m:]
    return left, rest


def _next_free(levels: list[int]) -> list[int] | None:
    """Advance to the next level sequence that is canonical for a free tree."""
    left, rest = _split(levels)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return levels
    p = len(left)
    cand = _next_rooted(levels, p)
    if levels[p] > 2:
        new_left, _ = _split(cand)
        tail = list(range(1, max(new_left) + 2))
        cand[-len(tail):] = tail
    return cand


def all_trees(n: int) -> Iterator[Graph]:
    """Every unlabeled tree on ``n`` vertices, once each (lazy)."""
    _check_tree_order(n)
    if n == 1:
        yield Graph.from_edges(1, ())
        return
    # path rooted at its centre
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_free(levels)
        if levels is None:
            return
        yield _level_sequence_to_graph(levels)
        levels = _next_rooted(levels)


def prufer_decode(seq: tuple[int, ...], n: int) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def trees_by_prufer(n: int) -> Iterator[Graph]:
    """Unlabeled trees via all ``n^(n-2)`` Prüfer codes plus canonical dedup.

    Slow reference path; only practical for small ``n``.
    """
    if n == 1:
        yield Graph.from_edges(1, ())
        return
    seen: set[bytes] = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        g = prufer_decode(seq, n)
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            yield g


# --------------------------------------------------------------------------
# connected graphs


def _check_graph_order(n: int, allow_large: bool) -> None:
    cap = DEFAULTS.max_graph_order + (1 if allow_large else 0)
    if not 1 <= n <= cap:
        raise EnumerationLimitError(
            f"connected-graph enumeration is capped at n={DEFAULTS.max_graph_order} "
            "(n=8 with the override flag), got n=%d" % n
        )


@lru_cache(maxsize=None)
def _connected_g6(n: int) -> tuple[str, ...]:
    if n == 1:
        return (to_graph6(Graph.from_edges(1, ())),)
    seen: dict[bytes, str] = {}
    for code in _connected_g6(n - 1):
        base = parse_graph6(code)
        for mask in range(1, 1 << (n - 1)):
            edges = list(base.edges)
            edges.extend((i, n - 1) for i in range(n - 1) if mask >> i & 1)
            g = Graph.from_edges(n, edges)
            key = canonical_form(g)
            if key not in seen:
                seen[key] = key.decode("ascii")
    return tuple(sorted(seen.values()))


def all_connected_graphs(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """Every unlabeled connected graph on ``n`` vertices, in canonical labeling.

    Output is sorted by graph6 certificate, so the order is deterministic.
    """
    _check_graph_order(n, allow_large)
    for code in _connected_g6(n):
        yield parse_graph6(code)


def connected_graphs_bruteforce(n: int) -> Iterator[Graph]:
    """All ``2^(n choose 2)`` labeled graphs, filtered and deduplicated."""
    pairs = list(itertools.combinations(range(n), 2))
    seen: set[bytes] = set()
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))
        if not is_connected(g):
            continue
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            yield g


def cached_corpus(kind: str, n: int, cache_dir: str | os.PathLike, allow_large: bool = False) -> list[Graph]:
    """Load or build the corpus ``kind`` (``trees`` | ``graphs``) of order ``n``.

    The cache file ``<cache_dir>/<kind>-<n>.g6`` holds one graph6 per line.
    """
    if kind not in ("trees", "graphs"):
        raise ValueError(f"unknown corpus kind {kind!r}")
    path = Path(cache_dir) / f"{kind}-{n}.g6"
    if path.exists():
        return [parse_graph6(line) for line in path.read_text().split() if line]
    graphs = list(all_trees(n) if kind == "trees" else all_connected_graphs(n, allow_large))
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text("".join(to_graph6(g) + "\n" for g in graphs))
    tmp.replace(path)
    return graphs
