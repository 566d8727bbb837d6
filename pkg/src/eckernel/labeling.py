"""Edge labelings with c strong colors plus weak, and their validity checks.

Weak is encoded as color 0, strong colors are 1..c.  A labeling is
proper when no two incident edges share a strong color.  The triadic
relaxation only forbids two edges of the same strong color that form an
induced path on three vertices (the endpoints are non-adjacent); inside
triangles repetition is allowed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from eckernel.graph import Edge, Graph, Path, normalize_edge


@dataclass(frozen=True)
class Labeling:
    """Assignment of one color in 0..c to every edge of a host graph."""

    c: int
    color: dict[Edge, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.c < 0:
            raise ValueError("color count must be nonnegative")
        for e, col in self.color.items():
            if e != normalize_edge(*e):
                raise ValueError(f"edge {e} is not normalized")
            if not 0 <= col <= self.c:
                raise ValueError(f"color {col} of edge {e} outside 0..{self.c}")

    def of(self, e: Edge) -> int:
        return self.color[e]

    @property
    def weak_count(self) -> int:
        return sum(1 for col in self.color.values() if col == 0)

    def weak_edges(self) -> set[Edge]:
        return {e for e, col in self.color.items() if col == 0}

    def with_colors(self, updates: dict[Edge, int]) -> "Labeling":
        merged = dict(self.color)
        merged.update(updates)
        return Labeling(self.c, merged)


@dataclass(frozen=True)
class EdgeLists:
    """Per-edge allowed strong colors.

    Edges absent from ``allowed`` default to the full palette 1..c;
    recorded full lists are normalized away so equality is semantic.
    """

    c: int
    allowed: dict[Edge, frozenset[int]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        full = frozenset(range(1, self.c + 1))
        normalized = {}
        for e, cols in self.allowed.items():
            cols = frozenset(cols)
            if e != normalize_edge(*e):
                raise ValueError(f"edge {e} is not normalized")
            if not cols <= full:
                raise ValueError(f"list {sorted(cols)} of edge {e} outside 1..{self.c}")
            if cols != full:
                normalized[e] = cols
        object.__setattr__(self, "allowed", normalized)

    def colors(self, e: Edge) -> frozenset[int]:
        return self.allowed.get(e, frozenset(range(1, self.c + 1)))

    def restricted_to(self, edges: set[Edge]) -> "EdgeLists":
        return EdgeLists(self.c, {e: s for e, s in self.allowed.items() if e in edges})


def _check_coverage(g: Graph, lab: Labeling) -> None:
    if set(lab.color) != set(g.edges):
        raise ValueError("labeling does not cover exactly the edges of the graph")


def check_proper(g: Graph, lab: Labeling) -> bool:
    """True iff no two incident edges carry the same strong color."""
    _check_coverage(g, lab)
    for v in range(g.n):
        seen: set[int] = set()
        for w in g.adj[v]:
            col = lab.color[normalize_edge(v, w)]
            if col == 0:
                continue
            if col in seen:
                return False
            seen.add(col)
    return True


def check_stc(g: Graph, lab: Labeling) -> bool:
    """True iff no induced path on three vertices is monochromatic strong.

    Iterates over centers and non-adjacent neighbor pairs; quadratic in
    the degrees, which is fine at validation scale.
    """
    _check_coverage(g, lab)
    for v in range(g.n):
        nbrs = g.adj[v]
        for i in range(len(nbrs)):
            ci = lab.color[normalize_edge(v, nbrs[i])]
            if ci == 0:
                continue
            for j in range(i + 1, len(nbrs)):
                if lab.color[normalize_edge(v, nbrs[j])] != ci:
                    continue
                if not g.has_edge(nbrs[i], nbrs[j]):
                    return False
    return True


def check_psi_satisfying(g: Graph, lab: Labeling, psi: EdgeLists) -> bool:
    """True iff every edge is weak or colored from its allowed list."""
    _check_coverage(g, lab)
    return all(
        col == 0 or col in psi.colors(e) for e, col in lab.color.items()
    )


def color_sequence(g: Graph, lab: Labeling, p: Path) -> tuple[int, ...]:
    """Colors along the edges of ``p``, in path order."""
    p.validate_in(g)
    _check_coverage(g, lab)
    return tuple(lab.color[e] for e in p.edge_seq())


def apply_sequence(g: Graph, lab: Labeling, p: Path, seq: tuple[int, ...]) -> Labeling:
    """Write ``seq`` onto the edges of ``p``; all other edges keep their color.

    The path must be edge-simple, otherwise an edge would receive two
    positions of the sequence.
    """
    p.validate_in(g)
    _check_coverage(g, lab)
    edges = p.edge_seq()
    if len(edges) != len(set(edges)):
        raise ValueError("path is not edge-simple")
    if len(seq) != len(edges):
        raise ValueError("sequence length must equal the path edge count")
    return lab.with_colors(dict(zip(edges, seq)))
