"""Line graphs, iterated line graphs under budgets, and degree-only predictions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BudgetExceeded, Disconnected, GraphError
from .graph import Edge, Graph, is_connected


@dataclass(frozen=True)
class Budget:
    """Resource caps; every field must be positive.

    ``solver_time_cap`` is in seconds and ``None`` disables it.
    """

    max_vertices: int = 50_000
    max_iterations: int = 8
    solver_node_cap: int = 5_000_000
    solver_time_cap: float | None = None

    def __post_init__(self):
        for name in ("max_vertices", "max_iterations", "solver_node_cap"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.solver_time_cap is not None and self.solver_time_cap <= 0:
            raise ValueError("solver_time_cap must be positive")


DEFAULT_BUDGET = Budget()


def line_graph(g: Graph) -> tuple[Graph, tuple[Edge, ...]]:
    """Return ``(L(g), labeling)`` where L-vertex ``i`` is the edge ``g.edges[i]``."""
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    ledges = []
    for ids in incident:
        k = len(ids)
        for a in range(k):
            x = ids[a]
            for b in range(a + 1, k):
                y = ids[b]
                ledges.append((x, y) if x < y else (y, x))
    # Two distinct edges of a simple graph share at most one endpoint, so no duplicates.
    ledges.sort()
    return Graph._trusted(g.e, ledges), g.edges


def predicted_counts(g: Graph) -> tuple[int, int, tuple[int, ...]]:
    """``(n_1, e_1, sorted degree multiset of L(g))`` from degrees alone."""
    deg = g.degrees
    e1 = sum(d * (d - 1) // 2 for d in deg)
    multiset = tuple(sorted(deg[u] + deg[v] - 2 for u, v in g.edges))
    return g.e, e1, multiset


@dataclass(frozen=True)
class Level:
    k: int
    n: int
    e: int
    degrees: tuple[int, ...]
    """Sorted degree multiset (ascending)."""
    graph: Graph | None = None
    labeling: tuple[Edge, ...] | None = None

    @property
    def max_degree(self) -> int:
        return self.degrees[-1] if self.degrees else 0

    @property
    def min_degree(self) -> int:
        return self.degrees[0] if self.degrees else 0

    @property
    def avg_degree(self) -> Fraction:
        return Fraction(2 * self.e, self.n) if self.n else Fraction(0)

    @property
    def materialized(self) -> bool:
        return self.graph is not None


@dataclass(frozen=True)
class IterationTrace:
    levels: tuple[Level, ...]
    truncated: str | None = None
    """``None`` when every requested level was produced, else the cap that stopped it."""
    requested: int = 0

    def __len__(self) -> int:
        return len(self.levels)

    def __getitem__(self, k: int) -> Level:
        return self.levels[k]

    def column(self, attr: str) -> list:
        return [getattr(lv, attr) for lv in self.levels]


def iterate_line_graph(
    g: Graph,
    k: int,
    budget: Budget = DEFAULT_BUDGET,
    *,
    degree_only_last: bool = False,
    keep_labelings: bool = True,
) -> IterationTrace:
    """Levels ``0..k`` of the line graph sequence of a connected graph.

    Stops early (``truncated`` set) when the next level would exceed
    ``budget.max_vertices`` or ``k`` exceeds ``budget.max_iterations``.
    With ``degree_only_last`` the final level is derived from the degree
    formulas and not materialized, which is all n, e, Δ, δ and d need.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if not is_connected(g):
        raise Disconnected("iterate_line_graph requires a connected graph")
    truncated = None
    target = k
    if k > budget.max_iterations:
        target = budget.max_iterations
        truncated = "iterations"
    levels = [Level(0, g.n, g.e, tuple(sorted(g.degrees)), g, None)]
    cur = g
    for depth in range(1, target + 1):
        if cur.e > budget.max_vertices:
            truncated = "vertices"
            break
        if degree_only_last and depth == target:
            n1, e1, ms = predicted_counts(cur)
            levels.append(Level(depth, n1, e1, ms, None, None))
            break
        nxt, lab = line_graph(cur)
        levels.append(Level(depth, nxt.n, nxt.e, tuple(sorted(nxt.degrees)), nxt, lab if keep_labelings else None))
        cur = nxt
    return IterationTrace(tuple(levels), truncated, k)


def iterate_graphs(g: Graph, k: int, budget: Budget = DEFAULT_BUDGET) -> list[Graph]:
    """Materialized ``[g, L(g), ..., L^k(g)]``; raises BudgetExceeded instead of truncating."""
    out = [g]
    cur = g
    for _ in range(k):
        if cur.e > budget.max_vertices:
            raise BudgetExceeded("vertices", f"next level would have {cur.e} vertices")
        cur, _ = line_graph(cur)
        out.append(cur)
    return out


def edge_endpoints_at_level(trace: IterationTrace, k: int, vertex: int) -> frozenset[int]:
    """Compose labelings: the set of level-0 vertices underlying a level-``k`` vertex."""
    current = {vertex}
    for depth in range(k, 0, -1):
        lab = trace.levels[depth].labeling
        if lab is None:
            raise GraphError(f"level {depth} has no labeling")
        nxt = set()
        for v in current:
            nxt.update(lab[v])
        current = nxt
    return frozenset(current)


def degree_histogram(degrees) -> dict[int, int]:
    """``x_j``: number of vertices of degree ``j``."""
    return dict(sorted(Counter(degrees).items()))
