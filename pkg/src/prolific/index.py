"""ind(P, G) under budgets, with bound shortcuts, and family scans k(P, F)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BudgetExceeded, NotProlific
from .families import is_prolific
from .graph import Graph
from .graph6 import write_graph6
from .linegraph import Budget, line_graph, predicted_counts
from .parameters import ParamKind, ParamValue, compute
from .solvers._budget import ticker_from
from .solvers.coloring import chromatic_index
from .solvers.connectivity import edge_connectivity, vertex_connectivity
from .solvers.cycles import has_cycle_at_least
from .solvers.matching import _greedy_maximal, matching_number, min_maximal_matching

INDEX_BUDGET = Budget(max_iterations=6)

DEGREE_ONLY = frozenset({ParamKind.N, ParamKind.E, ParamKind.MAXDEG, ParamKind.MINDEG, ParamKind.AVGDEG})


@dataclass(frozen=True)
class LevelValue:
    """P at one level: exact ``value`` or a bracket ``lower <= P <= upper``."""

    k: int
    value: ParamValue | None
    lower: ParamValue | None
    upper: ParamValue | None
    method: str

    @property
    def exact(self) -> bool:
        return self.value is not None

    def as_dict(self) -> dict:
        def enc(x):
            return str(x) if isinstance(x, Fraction) else x

        return {"k": self.k, "value": enc(self.value), "lower": enc(self.lower), "upper": enc(self.upper), "method": self.method}


@dataclass(frozen=True)
class IndexResult:
    kind: ParamKind
    base: ParamValue
    found: bool
    r: int | None
    levels: tuple[LevelValue, ...]
    levels_completed: int
    exhausted: str | None = None
    """Resource name when the outcome is BudgetExceeded."""
    shortcut_log: tuple[str, ...] = ()
    disagreements: tuple[str, ...] = ()

    @property
    def lower_bound(self) -> int:
        """Smallest index consistent with the outcome (``r`` when found)."""
        return self.r if self.found else self.levels_completed + 1

    def describe(self) -> str:
        if self.found:
            return f"Found({self.r})"
        return f"BudgetExceeded(levels={self.levels_completed}, {self.exhausted})"

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "base": str(self.base) if isinstance(self.base, Fraction) else self.base,
            "outcome": "found" if self.found else "budget_exceeded",
            "r": self.r,
            "levels_completed": self.levels_completed,
            "exhausted": self.exhausted,
            "levels": [lv.as_dict() for lv in self.levels],
            "shortcuts": list(self.shortcut_log),
            "disagreements": list(self.disagreements),
        }


class _Levels:
    """Materializes L^k(G) on demand, refusing levels above the vertex cap."""

    def __init__(self, g: Graph, budget: Budget):
        self.graphs = [g]
        self.budget = budget

    def get(self, k: int) -> Graph:
        while len(self.graphs) <= k:
            cur = self.graphs[-1]
            if cur.e > self.budget.max_vertices:
                raise BudgetExceeded("vertices", f"L^{len(self.graphs)} would have {cur.e} vertices")
            self.graphs.append(line_graph(cur)[0])
        return self.graphs[k]


def _degree_level(h: Graph, kind: ParamKind) -> ParamValue:
    """Degree-only value of P on L(h) from the degree formulas."""
    n1, e1, ms = predicted_counts(h)
    if kind is ParamKind.N:
        return n1
    if kind is ParamKind.E:
        return e1
    if kind is ParamKind.MAXDEG:
        return ms[-1] if ms else 0
    if kind is ParamKind.MINDEG:
        return ms[0] if ms else 0
    return Fraction(2 * e1, n1)


def _level(levels: _Levels, k: int, kind: ParamKind, base: ParamValue, budget: Budget, log: list[str]) -> LevelValue:
    """Value or deciding bracket of P_k (k >= 1)."""
    h = levels.get(k - 1)
    if kind in DEGREE_ONLY:
        return LevelValue(k, _degree_level(h, kind), None, None, "degree formula")
    if kind is ParamKind.MATCHING:
        # L^k is connected and claw-free, so Sumner gives a (near) perfect matching.
        log.append(f"level {k}: mu = floor(n_{k}/2)")
        return LevelValue(k, h.e // 2, None, None, "sumner")
    if kind is ParamKind.INDEPENDENCE:
        if k == 1:
            return LevelValue(k, matching_number(h), None, None, "alpha(L(G)) = mu(G)")
        log.append(f"level {k}: alpha = floor(e_{k - 2}/2)")
        return LevelValue(k, levels.get(k - 2).e // 2, None, None, "alpha = mu of claw-free predecessor")
    if kind is ParamKind.CLIQUE:
        delta = max(h.degrees)
        log.append(f"level {k}: omega = Delta_{k - 1}")
        return LevelValue(k, delta, None, None, "omega(L(H)) = Delta(H)")
    if kind in (ParamKind.DOMINATION, ParamKind.IND_DOMINATION):
        mu = h.n // 2 if k >= 2 else matching_number(h)
        lo = (mu + 1) // 2
        hi = _greedy_maximal(h.masks, (1 << h.n) - 1)
        if lo > base:
            log.append(f"level {k}: mu*_{k - 1} >= ceil(mu/2) = {lo} decides")
            return LevelValue(k, None, lo, hi, "ceil(mu/2) lower bound on mu*")
        if hi <= base:
            log.append(f"level {k}: greedy maximal matching {hi} decides")
            return LevelValue(k, None, lo, hi, "greedy maximal matching upper bound on mu*")
        val = min_maximal_matching(h, ticker_from(budget, "mu*"))
        return LevelValue(k, val, None, None, "gamma(L(H)) = i(L(H)) = mu*(H)")
    if kind is ParamKind.CHROMATIC:
        delta = max(h.degrees)
        if delta > base:
            log.append(f"level {k}: chi = chi'_{k - 1} >= Delta = {delta} decides")
            return LevelValue(k, None, delta, delta + 1, "Vizing bracket on chi'")
        if delta + 1 <= base:
            log.append(f"level {k}: chi = chi'_{k - 1} <= Delta + 1 = {delta + 1} decides")
            return LevelValue(k, None, delta, delta + 1, "Vizing bracket on chi'")
        return LevelValue(k, chromatic_index(h, ticker_from(budget, "chi'")), None, None, "chi(L(H)) = chi'(H)")
    if kind is ParamKind.CHROMATIC_INDEX:
        ms = predicted_counts(h)[2]
        delta = ms[-1]
        if delta > base:
            log.append(f"level {k}: chi' >= Delta_{k} = {delta} decides")
            return LevelValue(k, None, delta, delta + 1, "Vizing bracket")
        if delta + 1 <= base:
            log.append(f"level {k}: chi' <= Delta_{k} + 1 = {delta + 1} decides")
            return LevelValue(k, None, delta, delta + 1, "Vizing bracket")
        return LevelValue(k, chromatic_index(levels.get(k), ticker_from(budget, "chi'")), None, None, "edge colouring")
    if kind is ParamKind.CIRCUMFERENCE:
        g = levels.get(k)
        if has_cycle_at_least(g, base + 1, ticker_from(budget, "circumference")):
            return LevelValue(k, None, base + 1, g.n, "cycle longer than c(G) found")
        return LevelValue(k, None, 0, base, "no cycle longer than c(G)")
    if kind in (ParamKind.EDGE_CONN, ParamKind.VERTEX_CONN):
        ms = predicted_counts(h)[2]
        dmin = ms[0]
        if dmin <= base:
            log.append(f"level {k}: connectivity <= delta_{k} = {dmin} decides")
            return LevelValue(k, None, None, dmin, "minimum degree upper bound")
        g = levels.get(k)
        fn = edge_connectivity if kind is ParamKind.EDGE_CONN else vertex_connectivity
        return LevelValue(k, fn(g, ticker_from(budget, kind.value)), None, None, "max-flow")
    raise ValueError(kind)


def longest_pendant_path(g: Graph) -> int:
    """Edges on the longest path from a leaf through degree-2 vertices to a vertex of degree >= 3."""
    deg = g.degrees
    best = 0
    for leaf in range(g.n):
        if deg[leaf] != 1:
            continue
        prev, cur, length = -1, leaf, 0
        while True:
            nxt = [w for w in g.adj[cur] if w != prev]
            if not nxt:
                length = 0  # the whole graph is a path
                break
            prev, cur, length = cur, nxt[0], length + 1
            if deg[cur] != 2:
                break
        best = max(best, length)
    return best


def _decides_increase(lv: LevelValue, base: ParamValue) -> bool:
    if lv.value is not None:
        return lv.value > base
    if lv.lower is not None and lv.lower > base:
        return True
    return False


def _consistent(lv: LevelValue, exact: ParamValue) -> bool:
    if lv.value is not None:
        return lv.value == exact
    return (lv.lower is None or lv.lower <= exact) and (lv.upper is None or exact <= lv.upper)


def parameter_index(g: Graph, kind: ParamKind, budget: Budget = INDEX_BUDGET, verify: bool = False) -> IndexResult:
    """ind(P, G) = least r >= 1 with P(L^r G) > P(G), or the budget outcome.

    Levels are decided by cheap bounds when those settle the comparison with
    P(G); ``verify`` recomputes every level exactly and records mismatches.
    """
    if not is_prolific(g):
        raise NotProlific("parameter_index requires a prolific graph")
    base = compute(g, kind, budget)
    levels = _Levels(g, budget)
    values = [LevelValue(0, base, None, None, "exact")]
    log: list[str] = []
    bad: list[str] = []
    # A pendant path of l edges shortens by one per step, so delta stays 1
    # on L^1..L^(l-1) without materializing those levels.
    pendant = longest_pendant_path(g) if kind is ParamKind.MINDEG and base == 1 else 0
    for r in range(1, budget.max_iterations + 1):
        try:
            if r < pendant:
                log.append(f"level {r}: pendant path of {pendant - r} edges keeps delta = 1")
                lv = LevelValue(r, 1, None, None, "pendant path")
            else:
                lv = _level(levels, r, kind, base, budget, log)
        except BudgetExceeded as exc:
            return IndexResult(kind, base, False, None, tuple(values), r - 1, exc.resource, tuple(log), tuple(bad))
        values.append(lv)
        up = _decides_increase(lv, base)
        if verify:
            try:
                exact = compute(levels.get(r), kind, budget)
            except BudgetExceeded as exc:
                bad.append(f"level {r}: verification skipped ({exc.resource})")
            else:
                if not _consistent(lv, exact) or up != (exact > base):
                    bad.append(f"level {r}: engine {lv.as_dict()} vs exact {exact}")
        if up:
            return IndexResult(kind, base, True, r, tuple(values), r, None, tuple(log), tuple(bad))
    return IndexResult(kind, base, False, None, tuple(values), budget.max_iterations, "iterations", tuple(log), tuple(bad))


@dataclass(frozen=True)
class FamilyScanResult:
    kind: ParamKind
    universe: str
    count: int
    max_index: int | None
    witnesses: tuple[str, ...]
    histogram: dict[int, int]
    budget_exceeded: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "universe": self.universe,
            "count": self.count,
            "max_index": self.max_index,
            "witnesses": list(self.witnesses),
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "budget_exceeded": list(self.budget_exceeded),
        }


def _index_job(args) -> tuple[str, bool, int | None, int]:
    g, kind, budget = args
    res = parameter_index(g, kind, budget)
    return write_graph6(g), res.found, res.r, res.lower_bound


def family_index_scan(
    graphs: Iterable[Graph],
    kind: ParamKind,
    budget: Budget = INDEX_BUDGET,
    universe: str = "",
    workers: int = 1,
) -> FamilyScanResult:
    """Aggregate ind(P, G) over prolific ``graphs``; deterministic in the worker count."""
    from .harness import parallel_map

    gs = list(graphs)
    rows = parallel_map(_index_job, [(g, kind, budget) for g in gs], workers)
    hist: dict[int, int] = {}
    best: int | None = None
    wit: list[str] = []
    over: list[str] = []
    for code, found, r, _lb in rows:
        if not found:
            over.append(code)
            continue
        hist[r] = hist.get(r, 0) + 1
        if best is None or r > best:
            best, wit = r, [code]
        elif r == best:
            wit.append(code)
    return FamilyScanResult(kind, universe, len(gs), best, tuple(sorted(wit)), dict(sorted(hist.items())), tuple(sorted(over)))


def index_trace(g: Graph, kind: ParamKind, depth: int, budget: Budget = INDEX_BUDGET) -> list[ParamValue]:
    """Exact P_0..P_depth on materialized iterates (no shortcuts)."""
    levels = _Levels(g, budget)
    return [compute(levels.get(k), kind, budget) for k in range(depth + 1)]
