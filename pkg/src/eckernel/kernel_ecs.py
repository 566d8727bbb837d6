"""Kernels for the edge-colorable-subgraph problem.

Two parameterizations: the low-degree distance kernel keeps only the
closed neighborhood of the deletion-set endpoints (everything farther
out can always be colored because its whole closed neighborhood has
degree below the palette size); the component-order kernel removes
covered-away components outright and collapses oversized residual parts
through the expansion step, paying the budget for the edges that can
never all be strong around the expansion centers.
"""

from __future__ import annotations

from eckernel.graph import Graph, connected_components, induced_subgraph
from eckernel.instance import Instance, KernelOutcome, RuleApplication, settle_decision
from eckernel.params import (
    approx_component_cover,
    core_periphery,
    ecs_expansion,
    greedy_deletion_set,
    saturate,
)


def _close_neighborhood_kernel(g: Graph, t: int):
    """Greedy deletion set for bound t, then the kept set core + N(core)."""
    dset = greedy_deletion_set(g, t)
    cp = core_periphery(g, dset)
    keep = set(cp.core)
    for v in cp.core:
        keep.update(g.adj[v])
    reduced, remap = induced_subgraph(g, keep)
    removed = tuple(v for v in range(g.n) if v not in keep)
    return dset, reduced, remap, removed


def kernel_ecs_xi(inst: Instance) -> KernelOutcome:
    """Low-degree-distance kernel: keep the core and its neighbors, k unchanged.

    Vertex bound 2|D'|c and edge bound |D'| + n_out(c-1), where D' is
    the greedy deletion set for degree bound c-1 actually used.
    """
    if inst.kind != "ecs":
        raise ValueError("this kernel handles plain edge-colorable-subgraph instances")
    if inst.c < 2:
        raise ValueError("single-color instances are matching problems; use the solver")
    g = inst.graph
    dset, reduced, remap, removed = _close_neighborhood_kernel(g, inst.c - 1)
    trace = [RuleApplication("R1", removed)] if removed else []
    out = Instance(reduced, inst.c, inst.k, "ecs")
    bound_vertices = 2 * dset.size() * inst.c
    bound_edges = dset.size() + reduced.n * (inst.c - 1)
    stats = {
        "deletion_set_size": dset.size(),
        "n_in": g.n,
        "m_in": g.m,
        "n_out": reduced.n,
        "m_out": reduced.m,
        "bound": bound_vertices,
        "bound_edges": bound_edges,
        "bound_holds": reduced.n <= bound_vertices and reduced.m <= bound_edges,
        "vertex_map": remap,
    }
    return KernelOutcome(out, settle_decision(reduced.m, inst.k), trace, stats)


def kernel_edge_coloring(inst: Instance) -> KernelOutcome:
    """Exact edge-coloring mode: degree reject, then the same kernel.

    Requires a zero weak budget.  Any vertex of degree above c settles
    the answer as no; otherwise the instance size is linear in the
    number of degree-c vertices.
    """
    if inst.kind != "ecs":
        raise ValueError("edge coloring is the zero-budget mode of plain instances")
    if inst.k != 0:
        raise ValueError("edge coloring requires a zero weak budget")
    g = inst.graph
    h_c = sum(1 for v in range(g.n) if g.degree(v) == inst.c)
    too_big = [v for v in range(g.n) if g.degree(v) > inst.c]
    if too_big:
        stats = {
            "deletion_set_size": None,
            "n_in": g.n,
            "m_in": g.m,
            "n_out": g.n,
            "m_out": g.m,
            "degree_c_vertices": h_c,
            "bound": None,
            "bound_holds": True,
            "vertex_map": {v: v for v in range(g.n)},
        }
        trace = [RuleApplication("degree-reject", (too_big[0],))]
        return KernelOutcome(Instance(g, inst.c, 0, "ecs"), "no", trace, stats)
    outcome = kernel_ecs_xi(inst)
    outcome.stats["degree_c_vertices"] = h_c
    return outcome


def kernel_ecs_coc(inst: Instance) -> KernelOutcome:
    """Component-order kernel: drop covered-away components, expand the rest.

    Alternates two reductions until fixpoint, recomputing a fresh
    saturated cover each round: whole components disjoint from the
    cover are deletable (their order is at most c, so they color
    freely); while the residual part has at least c^2 vertices per
    cover vertex, an expansion witness X, Y is deleted and the budget
    drops by the number of X-incident edges beyond c per center.
    """
    if inst.kind != "ecs":
        raise ValueError("this kernel handles plain edge-colorable-subgraph instances")
    if inst.c < 2:
        raise ValueError("single-color instances are matching problems; use the solver")
    c = inst.c
    cur = inst.graph
    labels = list(range(cur.n))
    k = inst.k
    trace: list[RuleApplication] = []

    def shrink(keep: list[int]) -> None:
        nonlocal cur, labels
        cur, _ = induced_subgraph(cur, keep)
        labels = [labels[v] for v in sorted(keep)]

    while True:
        cover = saturate(cur, approx_component_cover(cur, c))
        doomed = [
            comp
            for comp in connected_components(cur)
            if not set(comp) & cover.vertices
        ]
        if doomed:
            gone: set[int] = set()
            for comp in doomed:
                trace.append(RuleApplication("R2", tuple(labels[v] for v in comp)))
                gone.update(comp)
            shrink([v for v in range(cur.n) if v not in gone])
            continue
        if cur.n == 0:
            break
        exp = ecs_expansion(cur, cover, c)
        if exp is None:
            break
        x_set = set(exp.x)
        x_edges = sum(1 for (u, v) in cur.edges if u in x_set or v in x_set)
        k_delta = -(x_edges - c * len(exp.x))
        k += k_delta
        gone = x_set | set(exp.y)
        trace.append(
            RuleApplication("R3", tuple(sorted(labels[v] for v in gone)), k_delta)
        )
        shrink([v for v in range(cur.n) if v not in gone])

    final_cover = saturate(cur, approx_component_cover(cur, c))
    cover_size = len(final_cover.vertices)
    bound = (c * c + 1) * cover_size
    out = Instance(cur, c, k, "ecs")
    stats = {
        "deletion_set_size": cover_size,
        "n_in": inst.graph.n,
        "m_in": inst.graph.m,
        "n_out": cur.n,
        "m_out": cur.m,
        "bound": bound,
        "bound_holds": cur.n == 0 or cur.n < bound,
        "vertex_map": {old: new for new, old in enumerate(labels)},
    }
    return KernelOutcome(out, settle_decision(cur.m, k), trace, stats)
