"""Parameter machinery: deletion sets, core/periphery, covers, expansions.

Two distance-from-triviality measures drive the kernels: the minimum
number of edge deletions bringing the maximum degree down to t, and the
minimum number of vertex deletions leaving only components of order at
most t.  Both are NP-hard to compute exactly, so the kernels run on the
cheap approximations below; tiny brute-force versions live in the test
suite as oracles.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from eckernel.graph import (
    Edge,
    Graph,
    connected_components,
    normalize_edge,
)


@dataclass(frozen=True)
class DeletionSet:
    """Edges whose removal leaves maximum degree at most t."""

    t: int
    edges: frozenset[Edge]

    def size(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class PeripheryComponent:
    """Connected component of the periphery, with its core-adjacent members."""

    vertices: tuple[int, ...]
    close: tuple[int, ...]


@dataclass(frozen=True)
class CorePeriphery:
    t: int
    core: tuple[int, ...]
    periphery: tuple[int, ...]
    components: tuple[PeripheryComponent, ...]


@dataclass(frozen=True)
class ComponentCover:
    """Vertex set whose removal leaves only components of order <= t.

    A saturated cover has no member whose whole neighborhood lies inside
    the cover.
    """

    t: int
    vertices: frozenset[int]
    saturated: bool = False


@dataclass(frozen=True)
class ExpansionResult:
    x: tuple[int, ...]
    y: tuple[int, ...]
    m: tuple[Edge, ...]


def greedy_deletion_set(g: Graph, t: int) -> DeletionSet:
    """Linear-time 2-approximate edge-deletion set for degree bound t.

    Each vertex of degree above t selects enough incident edges to cover
    its own excess; shared selections count for both endpoints.  Edges
    whose other endpoint is itself over the bound are preferred (they
    pay down two excesses and keep the core small), ties by lowest
    neighbor id.
    """
    if t < 0:
        raise ValueError("degree bound must be nonnegative")
    chosen: set[Edge] = set()
    for v in range(g.n):
        need = g.degree(v) - t
        if need <= 0:
            continue
        need -= sum(1 for w in g.adj[v] if normalize_edge(v, w) in chosen)
        if need <= 0:
            continue
        candidates = sorted(
            (w for w in g.adj[v] if normalize_edge(v, w) not in chosen),
            key=lambda w: (g.degree(w) <= t, w),
        )
        for w in candidates[:need]:
            chosen.add(normalize_edge(v, w))
    return DeletionSet(t, frozenset(chosen))


def core_periphery(g: Graph, d: DeletionSet) -> CorePeriphery:
    """Partition into deletion-set endpoints (core) and the rest (periphery)."""
    core = set()
    for u, v in d.edges:
        core.add(u)
        core.add(v)
    periphery = [v for v in range(g.n) if v not in core]
    peri_set = frozenset(periphery)
    comps = []
    seen: set[int] = set()
    for v in periphery:
        if v in seen:
            continue
        comp = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in peri_set and w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        close = tuple(sorted(u for u in comp if any(w in core for w in g.adj[u])))
        comps.append(PeripheryComponent(tuple(sorted(comp)), close))
    return CorePeriphery(d.t, tuple(sorted(core)), tuple(periphery), tuple(comps))


def is_component_cover(g: Graph, vertices: frozenset[int], t: int) -> bool:
    seen: set[int] = set(vertices)
    for v in range(g.n):
        if v in seen:
            continue
        comp = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in vertices and w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        if len(comp) > t:
            return False
    return True


def approx_component_cover(g: Graph, t: int) -> ComponentCover:
    """Greedy (t+1)-approximate order-t component cover.

    Repeatedly grows a connected subgraph of t+1 vertices inside an
    oversized residual component and moves all of them into the cover;
    any optimal cover must hit each of these vertex-disjoint subgraphs.
    """
    if t < 1:
        raise ValueError("component order bound must be positive")
    cover: set[int] = set()
    while True:
        batch = _oversized_batch(g, cover, t)
        if batch is None:
            return ComponentCover(t, frozenset(cover), saturated=False)
        cover |= batch


def _oversized_batch(g: Graph, cover: set[int], t: int) -> set[int] | None:
    seen: set[int] = set(cover)
    for v in range(g.n):
        if v in seen:
            continue
        comp = {v}
        queue = deque([v])
        order = [v]
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in cover and w not in comp:
                    comp.add(w)
                    queue.append(w)
                    order.append(w)
        seen |= comp
        if len(comp) > t:
            return set(order[: t + 1])
    return None


def saturate(g: Graph, cover: ComponentCover) -> ComponentCover:
    """Drop cover vertices whose whole neighborhood lies in the cover.

    A dropped vertex becomes an isolated residual vertex at the moment
    of removal, so the result is still a valid cover.
    """
    vertices = set(cover.vertices)
    changed = True
    while changed:
        changed = False
        for v in sorted(vertices):
            if all(w in vertices for w in g.adj[v]):
                vertices.discard(v)
                changed = True
    return ComponentCover(cover.t, frozenset(vertices), saturated=True)


class _FlowNet:
    """Integer max flow on a tiny network, BFS augmenting paths."""

    def __init__(self, nodes: int):
        self.cap: list[dict[int, int]] = [dict() for _ in range(nodes)]

    def add(self, u: int, v: int, c: int) -> None:
        self.cap[u][v] = self.cap[u].get(v, 0) + c
        self.cap[v].setdefault(u, 0)

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            parent = {s: s}
            queue = deque([s])
            while queue and t not in parent:
                u = queue.popleft()
                for v, c in self.cap[u].items():
                    if c > 0 and v not in parent:
                        parent[v] = u
                        queue.append(v)
            if t not in parent:
                return total
            bottleneck = None
            v = t
            while v != s:
                u = parent[v]
                c = self.cap[u][v]
                bottleneck = c if bottleneck is None else min(bottleneck, c)
                v = u
            v = t
            while v != s:
                u = parent[v]
                self.cap[u][v] -= bottleneck
                self.cap[v][u] += bottleneck
                v = u
            total += bottleneck

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v, c in self.cap[u].items():
                if c > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def expansion(
    a_side: list[int],
    b_side: list[int],
    edges: list[tuple[int, int]],
    q: int,
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[tuple[int, int], ...]]:
    """Constructive expansion: X in A, Y in B with N(Y) in X and a q-expansion.

    Requires |B| >= q|A|, A nonempty and no isolated vertex in B.  Runs
    one max flow (source -q- A -1- B -1- sink).  If the flow saturates
    every A-vertex, (A, B) works outright.  Otherwise the A-vertices
    unreachable in the residual network are all saturated and their flow
    edges land on B-vertices with no other reachable neighbor, which
    yields the witness pair directly.
    """
    if q < 1:
        raise ValueError("expansion order must be positive")
    if not a_side:
        raise ValueError("left side must be nonempty")
    if len(b_side) < q * len(a_side):
        raise ValueError("right side too small for the requested expansion")
    a_index = {a: i for i, a in enumerate(a_side)}
    b_index = {b: i for i, b in enumerate(b_side)}
    covered_b = set()
    for a, b in edges:
        if a not in a_index or b not in b_index:
            raise ValueError(f"edge ({a}, {b}) leaves the bipartition")
        covered_b.add(b)
    if covered_b != set(b_side):
        raise ValueError("right side contains an isolated vertex")

    na, nb = len(a_side), len(b_side)
    s, t = na + nb, na + nb + 1
    net = _FlowNet(na + nb + 2)
    for i in range(na):
        net.add(s, i, q)
    edge_pairs = sorted({(a_index[a], na + b_index[b]) for a, b in edges})
    for ia, jb in edge_pairs:
        net.add(ia, jb, 1)
    for j in range(nb):
        net.add(na + j, t, 1)

    flow = net.max_flow(s, t)
    used = [
        (ia, jb)
        for ia, jb in edge_pairs
        if net.cap[jb].get(ia, 0) > 0  # residual back-capacity means flow
    ]
    if flow == q * na:
        x_ids = list(range(na))
        y_ids = list(range(nb))
        matched = used
    else:
        reach = net.reachable(s)
        x_ids = [i for i in range(na) if i not in reach]
        bad_b = {jb for ia, jb in edge_pairs if ia in reach}
        y_ids = [j for j in range(nb) if na + j not in reach and na + j not in bad_b]
        x_set = set(x_ids)
        matched = [(ia, jb) for ia, jb in used if ia in x_set]
    x = tuple(sorted(a_side[i] for i in x_ids))
    y = tuple(sorted(b_side[j] for j in y_ids))
    m = tuple(sorted((a_side[ia], b_side[jb - na]) for ia, jb in matched))
    _check_expansion(x, y, m, edges, q)
    return x, y, m


def _check_expansion(x, y, m, edges, q) -> None:
    if not x or not y:
        raise AssertionError("expansion produced an empty side")
    y_set = set(y)
    x_set = set(x)
    for a, b in edges:
        if b in y_set and a not in x_set:
            raise AssertionError("a Y-vertex keeps a neighbor outside X")
    per_x: dict[int, int] = {a: 0 for a in x}
    ends = set()
    for a, b in m:
        if a not in per_x:
            raise AssertionError("expansion edge leaves X")
        per_x[a] += 1
        ends.add(b)
    if any(cnt != q for cnt in per_x.values()) or len(ends) != q * len(x):
        raise AssertionError("selected edges are not a q-expansion")
    if not ends <= y_set:
        raise AssertionError("expansion edges leave Y")


def ecs_expansion(g: Graph, cover: ComponentCover, c: int) -> ExpansionResult | None:
    """Expansion step lifted to the graph: contract residual components.

    Each connected component of the graph minus the cover becomes one
    right-side vertex of an auxiliary bipartite graph against the cover;
    a c-expansion there maps back by picking, per matched component, its
    lowest-id member adjacent to the matched cover vertex.  Returns None
    while the residual part is smaller than c^2 times the cover.
    """
    if not cover.saturated:
        raise ValueError("cover must be saturated")
    d_side = sorted(cover.vertices)
    i_side = [v for v in range(g.n) if v not in cover.vertices]
    if len(i_side) < c * c * len(d_side):
        return None
    i_set = set(i_side)
    comps = [
        comp
        for comp in connected_components(g)
        if set(comp) <= i_set
    ]
    if comps:
        raise ValueError("graph still has whole components outside the cover")
    classes = _residual_classes(g, i_set)
    for cls in classes:
        if len(cls) > c:
            raise AssertionError("cover is not valid for order bound c")
    aux_edges = []
    for idx, cls in enumerate(classes):
        nbrs = sorted({w for u in cls for w in g.adj[u] if w in cover.vertices})
        for v in nbrs:
            aux_edges.append((v, idx))
    x, y_classes, m_aux = expansion(d_side, list(range(len(classes))), aux_edges, c)
    y = tuple(sorted(v for idx in y_classes for v in classes[idx]))
    m = []
    for v, idx in m_aux:
        rep = min(u for u in classes[idx] if g.has_edge(u, v))
        m.append(normalize_edge(rep, v))
    return ExpansionResult(x, y, tuple(sorted(m)))


def _residual_classes(g: Graph, i_set: set[int]) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    classes = []
    for v in sorted(i_set):
        if v in seen:
            continue
        comp = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in i_set and w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        classes.append(tuple(sorted(comp)))
    return classes
