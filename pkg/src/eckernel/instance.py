"""Problem instances and kernelization outcomes shared by all kernels."""

from __future__ import annotations

from dataclasses import dataclass, field

from eckernel.graph import Graph
from eckernel.labeling import EdgeLists

KINDS = ("ecs", "mstc", "el-ecs", "el-mstc")
EL_KINDS = ("el-ecs", "el-mstc")


@dataclass(frozen=True)
class Instance:
    """One decision-problem input: graph, color count, weak budget, kind.

    Edge lists are present exactly for the el-* kinds.  Fresh inputs
    carry ``k >= 0``; kernelization may drive the budget negative, which
    certifies a no-instance, so reduced instances are allowed to hold
    negative budgets.
    """

    graph: Graph
    c: int
    k: int
    kind: str
    psi: EdgeLists | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown problem kind {self.kind!r}")
        if self.c < 1:
            raise ValueError("strong color count must be at least 1")
        if self.kind in EL_KINDS:
            if self.psi is None:
                raise ValueError(f"kind {self.kind} requires edge lists")
            if self.psi.c != self.c:
                raise ValueError("edge lists disagree with the color count")
            for e in self.psi.allowed:
                if e not in set(self.graph.edges):
                    raise ValueError(f"edge list for non-edge {e}")
        elif self.psi is not None:
            raise ValueError(f"kind {self.kind} does not take edge lists")

    @property
    def uses_stc(self) -> bool:
        return self.kind in ("mstc", "el-mstc")

    @property
    def uses_lists(self) -> bool:
        return self.kind in EL_KINDS


@dataclass(frozen=True)
class RuleApplication:
    """One trace entry: which rule fired, on what, and the budget change."""

    rule: str
    affected: tuple = ()
    k_delta: int = 0


@dataclass
class KernelOutcome:
    """Reduced instance plus an early decision and the ordered rule trace.

    decision is ``yes`` (reduced graph edgeless with budget intact),
    ``no`` (budget provably exceeded) or ``open`` (reduced instance is
    answer-equivalent to the input).
    """

    reduced: Instance
    decision: str
    trace: list[RuleApplication] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.decision not in ("yes", "no", "open"):
            raise ValueError(f"unknown decision {self.decision!r}")

    @property
    def k_delta(self) -> int:
        return sum(t.k_delta for t in self.trace)

    def rule_counts(self) -> list[dict]:
        counts: dict[str, int] = {}
        for t in self.trace:
            counts[t.rule] = counts.get(t.rule, 0) + 1
        return [{"rule": r, "count": n} for r, n in sorted(counts.items())]


def settle_decision(graph_m: int, k: int) -> str:
    """Decision for a fully reduced instance: edgeless settles it, else budget."""
    if graph_m == 0:
        return "yes" if k >= 0 else "no"
    return "no" if k < 0 else "open"
