"""Exact branch-and-bound oracle for the minimum number of weak edges.

Ground truth for every kernel: given an instance of any of the four
problem kinds it returns the exact minimum weak-edge count together
with a witness labeling.  Search is desk-scale only; instances above
the edge limit are refused rather than approximated.

Branching assigns one edge at a time (most-constrained first) over its
allowed strong colors and finally weak.  Pruning uses the count of
edges that already have no available color (each must go weak), plus a
degree-based bound for the proper kinds, plus color-symmetry breaking
when no edge lists restrict the palette.
"""

from __future__ import annotations

from math import ceil

from eckernel.coloring import try_color_exactly
from eckernel.graph import Graph, normalize_edge
from eckernel.instance import Instance
from eckernel.labeling import (
    Labeling,
    check_proper,
    check_psi_satisfying,
    check_stc,
)


class InstanceTooLarge(ValueError):
    """Raised when an instance exceeds the solver's edge limit."""


def conflict_pairs(g: Graph, stc: bool) -> list[list[int]]:
    """Per-edge lists of edge indices that may not share a strong color.

    For proper labelings every incident pair conflicts; under the
    triadic relaxation only incident pairs whose far endpoints are
    non-adjacent do.
    """
    index = {e: i for i, e in enumerate(g.edges)}
    conf: list[set[int]] = [set() for _ in g.edges]
    for v in range(g.n):
        nbrs = g.adj[v]
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                if stc and g.has_edge(nbrs[i], nbrs[j]):
                    continue
                a = index[normalize_edge(v, nbrs[i])]
                b = index[normalize_edge(v, nbrs[j])]
                conf[a].add(b)
                conf[b].add(a)
    return [sorted(s) for s in conf]


def maximum_matching_size(g: Graph) -> int:
    """Exact maximum matching by memoized branching over the edge list."""
    edges = g.edges
    memo: dict[tuple[int, int], int] = {}

    def rec(i: int, used: int) -> int:
        if i == len(edges):
            return 0
        key = (i, used)
        if key in memo:
            return memo[key]
        best = rec(i + 1, used)
        u, v = edges[i]
        mask = (1 << u) | (1 << v)
        if not used & mask:
            best = max(best, 1 + rec(i + 1, used | mask))
        memo[key] = best
        return best

    return rec(0, 0)


class _Search:
    def __init__(self, inst: Instance):
        g = inst.graph
        self.c = inst.c
        self.symmetric = not inst.uses_lists
        order = sorted(
            range(g.m),
            key=lambda i: (-(g.degree(g.edges[i][0]) + g.degree(g.edges[i][1])), i),
        )
        self.edges = [g.edges[i] for i in order]
        conf = conflict_pairs(g, inst.uses_stc)
        pos = {old: new for new, old in enumerate(order)}
        self.conf = [sorted(pos[j] for j in conf[i]) for i in order]
        if inst.uses_lists:
            self.allowed = [tuple(sorted(inst.psi.colors(e))) for e in self.edges]
        else:
            self.allowed = [tuple(range(1, inst.c + 1))] * len(self.edges)
        self.assign = [-1] * len(self.edges)
        self.best: int | None = None
        self.best_assign: list[int] | None = None

    def _available(self, i: int) -> list[int]:
        blocked = {self.assign[j] for j in self.conf[i] if self.assign[j] > 0}
        return [col for col in self.allowed[i] if col not in blocked]

    def run(self, cap: int) -> tuple[int, list[int]] | None:
        """Minimum weak count strictly below cap, or None if none exists."""
        self.best = cap
        self.best_assign = None
        self._recurse(0, 0)
        if self.best_assign is None:
            return None
        return self.best, self.best_assign

    def _recurse(self, weak_used: int, max_color: int) -> None:
        pick = None
        pick_avail: list[int] = []
        forced = 0
        open_edges = 0
        for i in range(len(self.edges)):
            if self.assign[i] != -1:
                continue
            open_edges += 1
            avail = self._available(i)
            if not avail:
                forced += 1
            if pick is None or len(avail) < len(pick_avail):
                pick, pick_avail = i, avail
        if weak_used + forced >= self.best:
            return
        if pick is None:
            self.best = weak_used
            self.best_assign = list(self.assign)
            return
        colors = pick_avail
        if self.symmetric:
            colors = [col for col in pick_avail if col <= max_color + 1]
        for col in colors:
            self.assign[pick] = col
            self._recurse(weak_used, max(max_color, col))
            self.assign[pick] = -1
        if weak_used + 1 + max(forced - (0 if pick_avail else 1), 0) < self.best:
            self.assign[pick] = 0
            self._recurse(weak_used + 1, max_color)
            self.assign[pick] = -1

    def labeling(self, assign: list[int]) -> Labeling:
        return Labeling(self.c, dict(zip(self.edges, assign)))


def _degree_lower_bound(inst: Instance) -> int:
    g = inst.graph
    lb = 0
    if not inst.uses_stc:
        lb = ceil(sum(max(g.degree(v) - inst.c, 0) for v in range(g.n)) / 2)
    if inst.uses_lists:
        lb = max(lb, sum(1 for e in g.edges if not inst.psi.colors(e)))
    return lb


def _validate_witness(inst: Instance, lab: Labeling) -> None:
    g = inst.graph
    ok = check_stc(g, lab) if inst.uses_stc else check_proper(g, lab)
    if ok and inst.uses_lists:
        ok = check_psi_satisfying(g, lab, inst.psi)
    if not ok:
        raise AssertionError("search produced an invalid witness labeling")


def min_weak(inst: Instance, limit: int = 20) -> tuple[int, Labeling]:
    """Exact minimum weak-edge count and a witness labeling."""
    m = inst.graph.m
    if m > limit:
        raise InstanceTooLarge(f"{m} edges exceeds the solver limit of {limit}")
    search = _Search(inst)
    found = search.run(cap=m + 1)
    if found is None:
        raise AssertionError("the all-weak labeling was not found")
    count, assign = found
    lab = search.labeling(assign)
    _validate_witness(inst, lab)
    return count, lab


def decide(inst: Instance, limit: int = 20) -> bool:
    """Is there a valid labeling with at most k weak edges?"""
    g = inst.graph
    if inst.k >= g.m:
        return True
    if inst.k < 0:
        return False
    if not inst.uses_lists and try_color_exactly(g, inst.c) is not None:
        return True
    if g.m > limit:
        raise InstanceTooLarge(f"{g.m} edges exceeds the solver limit of {limit}")
    if inst.kind == "ecs" and inst.c == 1:
        return g.m - maximum_matching_size(g) <= inst.k
    if _degree_lower_bound(inst) > inst.k:
        return False
    found = _Search(inst).run(cap=inst.k + 1)
    return found is not None
