"""Undirected simple graphs and the structural queries the reduction rules need.

Vertices are dense integers 0..n-1.  Edges are normalized pairs (u, v)
with u < v; every map keyed on edges uses this normal form.  Graphs are
immutable after construction, so all queries are safe for concurrent
use; "mutation" means building a new graph (usually through
:func:`induced_subgraph`).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph with deterministic iteration order."""

    __slots__ = ("n", "edges", "adj", "_adj_sets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        seen: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = normalize_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._adj_sets: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u] if 0 <= u < self.n else False

    def incident_edges(self, v: int) -> list[Edge]:
        return [normalize_edge(v, w) for w in self.adj[v]]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Path:
    """A walk given as a vertex sequence.

    ``kind`` is one of ``vertex-simple``, ``edge-simple`` or ``cycle``.
    Cycles repeat their first vertex as the last entry and are otherwise
    vertex-simple.
    """

    vertices: tuple[int, ...]
    kind: str = "vertex-simple"

    def __post_init__(self) -> None:
        if self.kind not in ("vertex-simple", "edge-simple", "cycle"):
            raise ValueError(f"unknown path kind {self.kind!r}")
        if self.kind == "cycle":
            if len(self.vertices) < 4 or self.vertices[0] != self.vertices[-1]:
                raise ValueError("a cycle must close back on its first vertex")
            if len(set(self.vertices[:-1])) != len(self.vertices) - 1:
                raise ValueError("cycle interior must be vertex-simple")
        elif self.kind == "vertex-simple":
            if len(set(self.vertices)) != len(self.vertices):
                raise ValueError("vertex-simple path repeats a vertex")

    @property
    def length(self) -> int:
        """Number of edges on the path."""
        return max(len(self.vertices) - 1, 0)

    def edge_seq(self) -> list[Edge]:
        vs = self.vertices
        return [normalize_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]

    def edge_set(self) -> set[Edge]:
        return set(self.edge_seq())

    def is_edge_simple(self) -> bool:
        seq = self.edge_seq()
        return len(seq) == len(set(seq))

    def validate_in(self, g: Graph) -> None:
        vs = self.vertices
        for i in range(len(vs) - 1):
            if not g.has_edge(vs[i], vs[i + 1]):
                raise ValueError(f"({vs[i]}, {vs[i+1]}) is not an edge of the graph")


@dataclass(frozen=True)
class BoundedDegreePath:
    """Inclusion-maximal path whose vertices all have host degree <= 2.

    ``open`` is true iff an endpoint has degree one in the host graph.
    Paths that form whole cycle components are not bounded-degree paths;
    they are reported separately as isolated cycles.
    """

    path: Path
    open: bool

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.path.vertices

    @property
    def length(self) -> int:
        return self.path.length

    def edge_seq(self) -> list[Edge]:
        return self.path.edge_seq()


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Extract ``g[s]`` re-indexed to dense ids, plus the old->new id map."""
    kept = sorted(set(s))
    for v in kept:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex id {v} out of range")
    remap = {old: new for new, old in enumerate(kept)}
    edges = [
        (remap[u], remap[v])
        for (u, v) in g.edges
        if u in remap and v in remap
    ]
    return Graph(len(kept), edges), remap


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Components as sorted vertex tuples, ordered by smallest member."""
    seen = [False] * g.n
    comps: list[tuple[int, ...]] = []
    for v in range(g.n):
        if seen[v]:
            continue
        comp = _bfs_component(v, g.adj, None)
        for u in comp:
            seen[u] = True
        comps.append(tuple(sorted(comp)))
    return comps


def _bfs_component(
    start: int,
    adj: tuple[tuple[int, ...], ...],
    allowed: frozenset[int] | set[int] | None,
) -> set[int]:
    comp = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if allowed is not None and w not in allowed:
                continue
            if w not in comp:
                comp.add(w)
                queue.append(w)
    return comp


def enumerate_bdps_and_isolated_cycles(
    g: Graph,
) -> tuple[list[BoundedDegreePath], list[Path]]:
    """Partition the low-degree part of the graph into maximal paths and cycles.

    Every edge whose two endpoints both have degree <= 2 lies on exactly
    one of the returned bounded-degree paths or isolated cycles.  An
    isolated cycle is a connected component of the graph that is a
    cycle.  Single low-degree vertices squeezed between two high-degree
    neighbors yield one-edge paths only via an incident low-degree
    partner; a lone such vertex is not a path (paths need two vertices).
    """
    low = frozenset(v for v in range(g.n) if 1 <= g.degree(v) <= 2)
    seen: set[int] = set()
    bdps: list[BoundedDegreePath] = []
    cycles: list[Path] = []
    for v in sorted(low):
        if v in seen:
            continue
        comp = _bfs_component(v, g.adj, low)
        seen |= comp
        if len(comp) == 1:
            continue
        inner_deg = {u: sum(1 for w in g.adj[u] if w in comp) for u in comp}
        if all(d == 2 for d in inner_deg.values()):
            cycles.append(_walk_cycle(g, comp))
        else:
            bdps.append(_walk_path(g, comp, inner_deg))
    return bdps, cycles


def _walk_cycle(g: Graph, comp: set[int]) -> Path:
    start = min(comp)
    nbrs = [w for w in g.adj[start] if w in comp]
    seq = [start, min(nbrs)]
    while True:
        prev, cur = seq[-2], seq[-1]
        nxt = [w for w in g.adj[cur] if w in comp and w != prev]
        if not nxt:
            raise AssertionError("cycle walk fell off the component")
        if nxt[0] == start:
            seq.append(start)
            return Path(tuple(seq), "cycle")
        seq.append(nxt[0])


def _walk_path(g: Graph, comp: set[int], inner_deg: dict[int, int]) -> BoundedDegreePath:
    ends = sorted(u for u, d in inner_deg.items() if d <= 1)
    start = ends[0]
    seq = [start]
    prev = None
    while True:
        nxt = [w for w in g.adj[seq[-1]] if w in comp and w != prev]
        if not nxt:
            break
        prev = seq[-1]
        seq.append(nxt[0])
    is_open = g.degree(seq[0]) == 1 or g.degree(seq[-1]) == 1
    return BoundedDegreePath(Path(tuple(seq), "vertex-simple"), open=is_open)


def edge_in_triangle(g: Graph, e: Edge) -> bool:
    """True iff some vertex is adjacent to both endpoints of ``e``."""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"{e} is not an edge of the graph")
    small, big = (u, v) if g.degree(u) <= g.degree(v) else (v, u)
    return any(g.has_edge(w, big) for w in g.adj[small] if w != big)
