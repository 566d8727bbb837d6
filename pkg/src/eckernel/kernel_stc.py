"""Kernel for multi strong triadic closure, parameterized by degree distance.

The deletion set uses degree bound floor(c/2)+1.  For odd c every
periphery component can absorb its internal edges into strong classes,
so everything outside the core's closed neighborhood goes.  For even
c >= 4 only specific periphery components are that flexible; four
deletion rules fire in a fixed priority: components with no
core-adjacent vertex vanish entirely, and components owning a
low-degree vertex, a triangle edge or a cycle lose their non-close
part.  After the pipeline the surviving components with non-close
vertices are trees whose vertices all have full degree, which is what
bounds the kernel size.

The module also exposes the weak-edge moving machinery those deletions
rest on (shift a weak edge along a path, rotate a cycle's colors,
relocate a strong color on a cycle) as checkable operations.
"""

from __future__ import annotations

from eckernel.graph import (
    Graph,
    Path,
    connected_components,
    edge_in_triangle,
    induced_subgraph,
    normalize_edge,
)
from eckernel.instance import Instance, KernelOutcome, RuleApplication, settle_decision
from eckernel.kernel_ecs import _close_neighborhood_kernel
from eckernel.labeling import Labeling, check_stc
from eckernel.params import core_periphery, greedy_deletion_set


def stc_degree_bound(c: int) -> int:
    """Degree bound of the deletion set used for c strong colors."""
    if c == 1:
        return 0
    if c == 2:
        return 1
    return c // 2 + 1


def kernel_stc(inst: Instance) -> KernelOutcome:
    """Dispatch on the number of strong colors; k is never changed."""
    if inst.kind != "mstc":
        raise ValueError("this kernel handles multi strong triadic closure instances")
    if inst.c == 1:
        return _kernel_trivial(inst)
    if inst.c == 2:
        return _kernel_c2(inst)
    if inst.c % 2 == 1:
        return _kernel_odd(inst)
    return _kernel_even(inst)


def _kernel_trivial(inst: Instance) -> KernelOutcome:
    g = inst.graph
    stats = {
        "deletion_set_size": g.m,
        "n_in": g.n,
        "m_in": g.m,
        "n_out": g.n,
        "m_out": g.m,
        "bound": None,
        "bound_holds": True,
        "vertex_map": {v: v for v in range(g.n)},
    }
    return KernelOutcome(inst, settle_decision(g.m, inst.k), [], stats)


def _kernel_c2(inst: Instance) -> KernelOutcome:
    """Drop components disjoint from the core; with degree bound 1 these are
    isolated vertices and isolated edges."""
    g = inst.graph
    dset = greedy_deletion_set(g, 1)
    core = {v for e in dset.edges for v in e}
    keep: list[int] = []
    trace: list[RuleApplication] = []
    for comp in connected_components(g):
        if set(comp) & core:
            keep.extend(comp)
        else:
            trace.append(RuleApplication("stc-c2-isolated-component", comp))
    reduced, remap = induced_subgraph(g, keep)
    bound = 4 * dset.size()
    stats = _stc_stats(inst, reduced, remap, dset.size(), bound)
    return KernelOutcome(
        Instance(reduced, inst.c, inst.k, "mstc"),
        settle_decision(reduced.m, inst.k),
        trace,
        stats,
    )


def _kernel_odd(inst: Instance) -> KernelOutcome:
    """Odd c: every periphery component is flexible, keep core + N(core)."""
    g = inst.graph
    t = stc_degree_bound(inst.c)
    dset, reduced, remap, removed = _close_neighborhood_kernel(g, t)
    trace = [RuleApplication("R4", removed)] if removed else []
    bound = 2 * dset.size() * t
    stats = _stc_stats(inst, reduced, remap, dset.size(), bound)
    return KernelOutcome(
        Instance(reduced, inst.c, inst.k, "mstc"),
        settle_decision(reduced.m, inst.k),
        trace,
        stats,
    )


def _kernel_even(inst: Instance) -> KernelOutcome:
    """Even c >= 4: rules 5-8 in priority order to a global fixpoint."""
    c = inst.c
    t = stc_degree_bound(c)
    g0 = inst.graph
    dset = greedy_deletion_set(g0, t)
    core = frozenset(v for e in dset.edges for v in e)
    cur = g0
    labels = list(range(g0.n))
    trace: list[RuleApplication] = []

    def delete(doomed: set[int], rule: str) -> None:
        nonlocal cur, labels
        trace.append(RuleApplication(rule, tuple(sorted(labels[v] for v in doomed))))
        keep = [v for v in range(cur.n) if v not in doomed]
        cur, _ = induced_subgraph(cur, keep)
        labels = [labels[v] for v in sorted(keep)]

    while True:
        core_cur = {v for v in range(cur.n) if labels[v] in core}
        comps = _periphery_components(cur, core_cur)
        step = _next_deletion(cur, comps, t)
        if step is None:
            break
        rule, doomed = step
        delete(doomed, rule)

    remap = {old: new for new, old in enumerate(labels)}
    bound = (c + 7) * dset.size()
    stats = _stc_stats(inst, cur, remap, dset.size(), bound)
    return KernelOutcome(
        Instance(cur, c, inst.k, "mstc"),
        settle_decision(cur.m, inst.k),
        trace,
        stats,
    )


def _periphery_components(g: Graph, core: set[int]) -> list[tuple[tuple[int, ...], set[int]]]:
    peri = frozenset(v for v in range(g.n) if v not in core)
    comps = []
    seen: set[int] = set()
    for v in sorted(peri):
        if v in seen:
            continue
        stack = [v]
        comp = {v}
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in peri and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        close = {u for u in comp if any(w in core for w in g.adj[u])}
        comps.append((tuple(sorted(comp)), close))
    return comps


def _next_deletion(g: Graph, comps, t: int) -> tuple[str, set[int]] | None:
    """First applicable rule 5-8 deletion, scanning rules by priority."""
    for comp, close in comps:
        if not close:
            return "R5", set(comp)
    for comp, close in comps:
        nonclose = set(comp) - close
        if nonclose and any(g.degree(v) < t for v in comp):
            return "R6", nonclose
    for comp, close in comps:
        nonclose = set(comp) - close
        if not nonclose:
            continue
        comp_set = set(comp)
        if any(
            u in comp_set and v in comp_set and edge_in_triangle(g, (u, v))
            for (u, v) in g.edges
        ):
            return "R7", nonclose
    for comp, close in comps:
        nonclose = set(comp) - close
        if nonclose and _has_cycle_within(g, set(comp)):
            return "R8", nonclose
    return None


def _has_cycle_within(g: Graph, allowed: set[int]) -> bool:
    seen: set[int] = set()
    for root in sorted(allowed):
        if root in seen:
            continue
        stack = [(root, -1)]
        parents = {root: -1}
        while stack:
            u, parent = stack.pop()
            seen.add(u)
            for w in g.adj[u]:
                if w not in allowed or w == parent:
                    continue
                if w in parents:
                    return True
                parents[w] = u
                stack.append((w, u))
    return False


def _stc_stats(inst, reduced, remap, dsize, bound) -> dict:
    return {
        "deletion_set_size": dsize,
        "n_in": inst.graph.n,
        "m_in": inst.graph.m,
        "n_out": reduced.n,
        "m_out": reduced.m,
        "bound": bound,
        "bound_holds": bound is None or reduced.n <= bound,
        "vertex_map": remap,
    }


def _require_periphery_path(g: Graph, c: int, vertices) -> None:
    t = c // 2 + 1
    for v in set(vertices):
        if g.degree(v) > t:
            raise ValueError(f"vertex {v} has degree above {t}")


def move_weak_edge_along_path(g: Graph, lab: Labeling, p: Path) -> Labeling:
    """Shift the leading weak edge to the end of an edge-simple path.

    Every path vertex must have degree at most floor(c/2)+1 and the
    first path edge must be weak.  The result agrees with the input off
    the path and either rotates the path's color sequence one step left
    with a trailing weak, or has strictly fewer weak edges (when some
    step could recolor the moving weak edge outright).
    """
    p.validate_in(g)
    if not p.is_edge_simple():
        raise ValueError("path must be edge-simple")
    _require_periphery_path(g, lab.c, p.vertices)
    if not check_stc(g, lab):
        raise ValueError("input labeling violates the triadic condition")
    edges = p.edge_seq()
    if not edges:
        raise ValueError("path has no edges")
    if lab.color[edges[0]] != 0:
        raise ValueError("first path edge must be weak")
    color = dict(lab.color)
    for i in range(len(edges) - 1):
        cur, nxt = edges[i], edges[i + 1]
        q = color[nxt]
        if q == 0:
            continue  # two adjacent weaks: already in shifted form
        if _strong_at_edge(g, color, cur, q, skip=nxt):
            # some other incident edge already carries q: the weak edge
            # itself has a spare color, use it and win one weak edge
            color[cur] = _free_strong_color(g, color, cur, lab.c)
            return Labeling(lab.c, color)
        color[cur] = q
        color[nxt] = 0
    return Labeling(lab.c, color)


def _incident_edges_of_edge(g: Graph, e) -> list:
    u, v = e
    out = [normalize_edge(u, w) for w in g.adj[u] if w != v]
    out += [normalize_edge(v, w) for w in g.adj[v] if w != u]
    return out


def _strong_at_edge(g: Graph, color, e, q: int, skip) -> bool:
    return any(
        f != skip and color[f] == q for f in _incident_edges_of_edge(g, e)
    )


def _free_strong_color(g: Graph, color, e, c: int) -> int:
    used = {color[f] for f in _incident_edges_of_edge(g, e)}
    for col in range(1, c + 1):
        if col not in used:
            return col
    raise AssertionError("no free color although the incident colors collide")


def _cycle_edges(p: Path) -> list:
    if p.kind != "cycle":
        raise ValueError("expected a cycle path")
    return p.edge_seq()


def rotate_cycle(g: Graph, lab: Labeling, cycle: Path, i: int) -> Labeling:
    """Rotate a cycle's color sequence i steps left, or lose a weak edge.

    The cycle must carry at least one weak edge and stay inside a
    low-degree region.  Each step moves the current weak edge once
    around the whole cycle, which shifts every position by one.
    """
    edges = _cycle_edges(cycle)
    cycle.validate_in(g)
    _require_periphery_path(g, lab.c, cycle.vertices)
    if all(lab.color[e] != 0 for e in edges):
        raise ValueError("cycle carries no weak edge")
    if not 0 <= i < len(edges):
        raise ValueError("rotation amount out of range")
    cur = lab
    before = cur.weak_count
    vs = cycle.vertices[:-1]
    r = len(vs)
    for _ in range(i):
        w_idx = next(
            j for j in range(r) if cur.color[normalize_edge(vs[j], vs[(j + 1) % r])] == 0
        )
        walk = tuple(vs[(w_idx + s) % r] for s in range(r + 1))
        cur = move_weak_edge_along_path(g, cur, Path(walk, "edge-simple"))
        if cur.weak_count < before:
            return cur
    return cur


def move_strong_color_in_cycle(g: Graph, lab: Labeling, cycle: Path, e1, e2) -> Labeling:
    """Rotate the cycle until e1 carries e2's strong color, or lose a weak.

    Both edges must lie on the cycle, e2 strong, and the cycle must
    contain a weak edge.
    """
    edges = _cycle_edges(cycle)
    e1 = normalize_edge(*e1)
    e2 = normalize_edge(*e2)
    if e1 not in edges or e2 not in edges:
        raise ValueError("both edges must lie on the cycle")
    q = lab.color[e2]
    if q == 0:
        raise ValueError("the source edge must be strong")
    weak_positions = [idx for idx, e in enumerate(edges) if lab.color[e] == 0]
    if not weak_positions:
        raise ValueError("cycle carries no weak edge")
    r = len(edges)
    base = weak_positions[0]
    j = (edges.index(e1) - base) % r
    t_pos = (edges.index(e2) - base) % r
    out = rotate_cycle(g, lab, cycle, (t_pos - j) % r)
    return out
