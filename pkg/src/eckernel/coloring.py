"""Constructive Delta+1 proper edge coloring (Misra-Gries fan rotation).

Colors every edge with one of Delta+1 strong colors and no weak edges.
The procedure repeatedly builds a maximal fan around one endpoint of an
uncolored edge, makes a color free at the apex by inverting a
two-colored alternating path, then rotates a prefix of the fan.  All
ties (fan extension, free-color choice, neighbor order) are broken by
lowest id so the output is deterministic.
"""

from __future__ import annotations

from eckernel.graph import Graph, normalize_edge
from eckernel.labeling import Labeling


class _Work:
    """Mutable partial proper coloring with per-vertex color indexes."""

    def __init__(self, g: Graph, palette: int):
        self.g = g
        self.palette = palette
        self.color: dict = {}
        self.at: list[dict[int, int]] = [dict() for _ in range(g.n)]

    def free(self, v: int) -> int:
        for c in range(1, self.palette + 1):
            if c not in self.at[v]:
                return c
        raise AssertionError("palette exhausted; fan invariant broken")

    def is_free(self, v: int, c: int) -> bool:
        return c not in self.at[v]

    def set(self, u: int, v: int, c: int) -> None:
        e = normalize_edge(u, v)
        old = self.color.get(e)
        if old:
            del self.at[u][old]
            del self.at[v][old]
        self.color[e] = c
        self.at[u][c] = v
        self.at[v][c] = u

    def unset(self, u: int, v: int) -> None:
        e = normalize_edge(u, v)
        old = self.color.pop(e)
        del self.at[u][old]
        del self.at[v][old]


def _invert_path(w: _Work, u: int, c: int, d: int) -> None:
    """Swap colors c and d along the maximal d,c-alternating path from u."""
    path: list[tuple[int, int, int]] = []
    cur, want = u, d
    while want in w.at[cur]:
        nxt = w.at[cur][want]
        path.append((cur, nxt, want))
        cur, want = nxt, c if want == d else d
    for a, b, _ in path:
        w.unset(a, b)
    for a, b, col in path:
        w.set(a, b, d if col == c else c)


def _maximal_fan(w: _Work, u: int, v: int) -> list[int]:
    fan = [v]
    in_fan = {v}
    while True:
        last = fan[-1]
        ext = None
        for x in w.g.adj[u]:
            if x in in_fan:
                continue
            cx = w.color.get(normalize_edge(u, x))
            if cx is not None and w.is_free(last, cx):
                ext = x
                break
        if ext is None:
            return fan
        fan.append(ext)
        in_fan.add(ext)


def _fan_prefix_for(w: _Work, u: int, fan: list[int], d: int) -> int:
    """Index of the first fan vertex where d is free and the prefix is a fan."""
    for j, x in enumerate(fan):
        if j > 0:
            cj = w.color.get(normalize_edge(u, x))
            if cj is None or not w.is_free(fan[j - 1], cj):
                break
        if w.is_free(x, d):
            return j
    raise AssertionError("no rotatable fan prefix; coloring invariant broken")


def vizing_color(g: Graph, colors: int | None = None) -> Labeling:
    """Proper labeling of all edges with at most max-degree+1 strong colors.

    ``colors`` only asserts the caller's budget; the construction never
    uses more than Delta+1 colors regardless.
    """
    delta = g.max_degree()
    if colors is None:
        colors = delta + 1
    if colors < delta + 1:
        raise ValueError(f"need at least {delta + 1} colors, got {colors}")
    w = _Work(g, delta + 1)
    for (u, v) in g.edges:
        fan = _maximal_fan(w, u, v)
        c = w.free(u)
        d = w.free(fan[-1])
        if c != d:
            _invert_path(w, u, c, d)
        j = _fan_prefix_for(w, u, fan, d)
        shifted = [w.color[normalize_edge(u, fan[i + 1])] for i in range(j)]
        for i in range(1, j + 1):
            w.unset(u, fan[i])
        for i in range(j):
            w.set(u, fan[i], shifted[i])
        w.set(u, fan[j], d)
    return Labeling(max(colors, 1), dict(w.color))


def try_color_exactly(g: Graph, c: int) -> Labeling | None:
    """Weak-free proper labeling with at most c colors, when max degree allows.

    Succeeds whenever the maximum degree is at most c-1; returns None
    otherwise without claiming anything (the graph may still be
    c-colorable).
    """
    if c < 1:
        raise ValueError("need at least one color")
    if g.max_degree() > c - 1:
        return None
    lab = vizing_color(g)
    return Labeling(c, dict(lab.color))
