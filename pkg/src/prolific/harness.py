"""Named checks: each binds one theorem clause to an assertion over a finite universe.

A check enumerates its universe (a corpus slice or a generated family
range), evaluates every graph with a top-level worker function, and merges
the per-graph outcomes into a :class:`CheckReport`.  Evaluation is spread
over ``parallel_map``; merging sorts everything, so the report does not
depend on the worker count or on scheduling.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Sequence

from .enumeration import connected_graphs
from .errors import BudgetExceeded, UnknownCheck
from .families import (
    CP,
    ChartrandHarary,
    ClawSubdivision,
    CycleWithChords,
    DoubleStarSubdivision,
    Star,
    TwoCyclesPath,
    classify_special,
    describe,
    generate,
    is_claw,
    is_cycle_with_chord,
    is_prolific,
    is_theta,
    is_two_cycles_path,
)
from .graph import Graph, canonical_graph, drop_isolated, is_connected, is_tree, remove_edge
from .graph6 import write_graph6
from .index import INDEX_BUDGET, parameter_index
from .linegraph import Budget, line_graph
from .parameters import ParamKind, compute, is_claw_free, stacho_phi
from .solvers._budget import ticker_from
from .solvers.cliques import clique_number, independence_number
from .solvers.coloring import chromatic_index, chromatic_number
from .solvers.connectivity import edge_connectivity, vertex_connectivity
from .solvers.cycles import circumference, has_cycle_at_least, is_hamiltonian
from .solvers.domination import domination_number, independent_domination_number
from .solvers.matching import matching_number, min_maximal_matching

REPORT_FORMAT = "prolific-check-report/1"
MAX_LISTED = 100
"""Counterexample lists are truncated to this many graph6 strings (the count is always exact)."""


def parallel_map(fn: Callable, items: Iterable, workers: int = 1) -> list:
    """``[fn(x) for x in items]``, optionally over a process pool; order is preserved."""
    items = list(items)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


# ---------------------------------------------------------------------------
# reports


@dataclass
class Clause:
    name: str
    statement: str
    tested: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def record(self, ok: bool, witness: str) -> None:
        self.tested += 1
        if not ok:
            self.counterexamples.append(witness)

    def as_dict(self) -> dict:
        bad = sorted(set(self.counterexamples))
        return {
            "name": self.name,
            "statement": self.statement,
            "tested": self.tested,
            "passed": self.passed,
            "counterexample_count": len(bad),
            "counterexamples": bad[:MAX_LISTED],
        }


@dataclass
class CheckReport:
    check_id: str
    anchor: dict
    universe: str
    graphs_tested: int
    clauses: list[Clause]
    observations: dict = field(default_factory=dict)
    budget_exceeded: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)

    def clause(self, name: str) -> Clause:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self, timing: bool = False) -> dict:
        d = {
            "format": REPORT_FORMAT,
            "check": self.check_id,
            "anchor": dict(self.anchor),
            "universe": self.universe,
            "graphs_tested": self.graphs_tested,
            "passed": self.passed,
            "clauses": [c.as_dict() for c in self.clauses],
            "observations": self.observations,
            "budget_exceeded": sorted(set(self.budget_exceeded)),
        }
        if timing:
            d["wall_time"] = round(self.wall_time, 3)
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.as_dict(timing), sort_keys=True, indent=2)


@dataclass(frozen=True)
class CheckConfig:
    """Universe and resource settings shared by all checks.

    ``max_n`` caps corpus-based universes (each check has its own default);
    ``family_max_n`` caps generated family ranges.
    """

    max_n: int | None = None
    family_max_n: int = 13
    workers: int = 1
    budget: Budget = INDEX_BUDGET


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    label: str
    claim: str
    run: Callable[[CheckConfig], CheckReport]
    default_on: bool = True
    default_max_n: int | None = 8


REGISTRY: dict[str, CheckSpec] = {}


def _register(check_id: str, label: str, claim: str, default_max_n: int | None = 8, default_on: bool = True):
    def deco(fn):
        REGISTRY[check_id] = CheckSpec(check_id, label, claim, fn, default_on, default_max_n)
        return fn

    return deco


def list_checks(include_optional: bool = True) -> list[str]:
    return [k for k, spec in REGISTRY.items() if include_optional or spec.default_on]


def run_check(check_id: str, cfg: CheckConfig | None = None) -> CheckReport:
    """Run one registered check and return its report."""
    key = check_id.upper()
    if key not in REGISTRY:
        raise UnknownCheck(check_id)
    cfg = cfg or CheckConfig()
    spec = REGISTRY[key]
    t0 = time.perf_counter()
    rep = spec.run(cfg)
    rep.wall_time = time.perf_counter() - t0
    rep.anchor = {"label": spec.label, "claim": spec.claim}
    return rep


def traceability_table() -> str:
    """Markdown table of registry entries (id, theorem label, asserted claim)."""
    rows = ["| check | anchor | assertion | default |", "|---|---|---|---|"]
    for spec in REGISTRY.values():
        rows.append(f"| {spec.check_id} | {spec.label} | {spec.claim} | {'on' if spec.default_on else 'off'} |")
    return "\n".join(rows)


# ---------------------------------------------------------------------------
# universes


def _limit(cfg: CheckConfig, check_id: str) -> int:
    if cfg.max_n is not None:
        return cfg.max_n
    return REGISTRY[check_id].default_max_n


def prolific_corpus(max_n: int, min_n: int = 4, max_excess: int | None = None) -> list[Graph]:
    out = []
    for n in range(max(min_n, 1), max_n + 1):
        out.extend(g for g in connected_graphs(n, max_excess) if is_prolific(g))
    return out


def connected_corpus(max_n: int, min_n: int = 1, max_excess: int | None = None) -> list[Graph]:
    out = []
    for n in range(max(min_n, 1), max_n + 1):
        out.extend(connected_graphs(n, max_excess))
    return out


def claw_members(max_n: int, min_n: int = 4, cap: int | None = None) -> list[ClawSubdivision]:
    """Every claw subdivision with ``min_n <= n <= max_n`` (and legs ``<= cap``)."""
    out = []
    top = max_n if cap is None else cap
    for m1 in range(2, top + 1):
        for m2 in range(1, min(m1, top) + 1):
            for m3 in range(1, m2 + 1):
                d = ClawSubdivision(m1, m2, m3)
                if min_n <= d.n <= max_n:
                    out.append(d)
    return out


def double_star_members(max_n: int, strict_only: bool = False, min_middle: int = 1) -> list[DoubleStarSubdivision]:
    seen = set()
    for middle in range(min_middle, max_n):
        legs_range = [(1, 1, 1, 1)] if strict_only else itertools.product(range(1, max_n), repeat=4)
        for legs in legs_range:
            d = DoubleStarSubdivision(middle, tuple(legs))
            if d.n <= max_n:
                seen.add(d)
    return sorted(seen, key=lambda d: (d.n, d.middle, d.legs))


def cp_members(max_n: int, k_values: Sequence[int] | None = None) -> list[CP]:
    return [CP(k, t) for k in range(3, max_n) for t in range(1, max_n - k + 1) if k_values is None or k in k_values]


def _code(g: Graph) -> str:
    return write_graph6(g)


def _canon_code(g: Graph) -> str:
    return write_graph6(canonical_graph(g))


# ---------------------------------------------------------------------------
# degree-only profile shared by the A/B/C/E/T checks


def degree_profile(g: Graph) -> dict:
    """Sizes and degree extremes of L^0..L^2 (and e_3, plus Delta_3 when Delta_2 <= Delta)."""
    deg0 = g.degrees
    L1 = line_graph(g)[0]
    deg1 = L1.degrees
    deg2 = [deg1[u] + deg1[v] - 2 for u, v in L1.edges]
    prof = {
        "code": _code(g),
        "n": g.n,
        "e": g.e,
        "e1": L1.e,
        "e2": sum(comb(d, 2) for d in deg1),
        "e3": sum(comb(d, 2) for d in deg2),
        "maxdeg": [max(deg0), max(deg1) if deg1 else 0, max(deg2) if deg2 else 0],
        "mindeg": [min(deg0), min(deg1) if deg1 else 0, min(deg2) if deg2 else 0],
        "x": {d: deg0.count(d) for d in sorted(set(deg0))},
        "fine": any(deg0[u] + deg0[v] - 2 > max(deg0) for u, v in g.edges),
        "tree": is_tree(g),
    }
    if prof["maxdeg"][2] <= prof["maxdeg"][0]:
        L2 = line_graph(L1)[0]
        d3 = [L2.degrees[u] + L2.degrees[v] - 2 for u, v in L2.edges]
        prof["maxdeg"].append(max(d3) if d3 else 0)
    cls = classify_special(g)
    prof["tag"] = cls.tag
    prof["claw_type"] = cls.claw_type
    prof["strict_double_star"] = cls.strict_double_star
    prof["descriptor"] = describe(cls.descriptor) if cls.descriptor is not None else None
    prof["dstar_middle"] = cls.descriptor.middle if cls.tag == "double_star" else None
    prof["k14"] = g.n == 5 and sorted(deg0) == [1, 1, 1, 1, 4]
    return prof


def _profiles(graphs: Sequence[Graph], cfg: CheckConfig) -> list[dict]:
    return parallel_map(degree_profile, graphs, cfg.workers)


def _descriptor_graphs(descs) -> list[Graph]:
    return [canonical_graph(generate(d)) for d in descs]


def _is_excepted_delta3(p: dict) -> bool:
    return p["claw_type"] == "A" or (p["strict_double_star"] and (p["dstar_middle"] or 0) >= 3)


# ---------------------------------------------------------------------------
# A: number of edges


@_register("A1", "Theorem A (1)", "every prolific G has e1 >= e; e1 = e exactly for subdivisions of K_{1,3}")
def _check_a1(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "A1")
    profs = _profiles(prolific_corpus(N), cfg)
    ineq = Clause("inequality", "e1 >= e")
    fwd = Clause("equality_implies_claw", "e1 = e implies G is a claw subdivision")
    back = Clause("claw_attains_equality", "every claw subdivision with 4 <= n <= max_n has e1 = e")
    eq_set = []
    for p in profs:
        ineq.record(p["e1"] >= p["e"], p["code"])
        if p["e1"] == p["e"]:
            eq_set.append(p["code"])
            fwd.record(p["tag"] == "claw", p["code"])
    members = _descriptor_graphs(claw_members(N))
    for p in _profiles(members, cfg):
        back.record(p["e1"] == p["e"], p["code"])
    obs = {"equality_set_size": len(eq_set), "claw_subdivisions": len(members), "equality_set": sorted(eq_set)}
    return CheckReport("A1", {}, f"prolific graphs 4 <= n <= {N}", len(profs), [ineq, fwd, back], obs)


@_register("A2", "Theorem A (2)", "non-claw prolific G has e1 >= e + 1; equality exactly for S22-type trees and CP(k, n-k)")
def _check_a2(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "A2")
    profs = [p for p in _profiles(prolific_corpus(N), cfg) if p["tag"] != "claw"]
    ineq = Clause("inequality", "e1 >= e + 1 when G is not a claw subdivision")
    fwd = Clause("equality_implies_class", "e1 = e + 1 implies G is a double-star subdivision or CP(k, n-k)")
    back = Clause("class_attains_equality", "every double-star subdivision and every CP(k, t) with n <= max_n has e1 = e + 1")
    strict_misses = []
    for p in profs:
        ineq.record(p["e1"] >= p["e"] + 1, p["code"])
        if p["e1"] == p["e"] + 1:
            fwd.record(p["tag"] in ("double_star", "cp"), p["code"])
            if p["tag"] == "double_star" and not p["strict_double_star"]:
                strict_misses.append(p["code"])
    members = _descriptor_graphs(double_star_members(N) + cp_members(N))
    for p in _profiles(members, cfg):
        back.record(p["e1"] == p["e"] + 1, p["code"])
    obs = {
        "loose_reading_matches": fwd.passed and back.passed,
        "strict_reading_matches": not strict_misses,
        "equality_outside_strict_reading": len(strict_misses),
        "note": "the double-star class is read as every tree with exactly two degree-3 vertices and four leaves; "
        "the strict reading (only the middle edge subdivided) misses the listed count of equality graphs",
    }
    return CheckReport("A2", {}, f"non-claw prolific graphs 4 <= n <= {N}", len(profs), [ineq, fwd, back], obs)


@_register("A3", "Theorem A (3)", "e2 >= e + 1, equality exactly for type A claw subdivisions, which also have e1 = e")
def _check_a3(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "A3")
    profs = _profiles(prolific_corpus(N), cfg)
    ineq = Clause("inequality", "e2 >= e + 1")
    fwd = Clause("equality_implies_type_a", "e2 = e + 1 implies G is a type A claw subdivision")
    back = Clause("type_a_attains_equality", "every type A claw subdivision has e2 = e1 + 1 = e + 1")
    for p in profs:
        ineq.record(p["e2"] >= p["e"] + 1, p["code"])
        if p["e2"] == p["e"] + 1:
            fwd.record(p["claw_type"] == "A", p["code"])
    members = _descriptor_graphs(d for d in claw_members(N) if d.type == "A")
    for p in _profiles(members, cfg):
        back.record(p["e2"] == p["e1"] + 1 == p["e"] + 1, p["code"])
    return CheckReport("A3", {}, f"prolific graphs 4 <= n <= {N}", len(profs), [ineq, fwd, back])


@_register("A4", "Theorem A (4)", "e3 >= e + 4 with equality only for the four-edge type A claw subdivision; otherwise e3 >= e + 5")
def _check_a4(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "A4")
    profs = _profiles(prolific_corpus(N), cfg)
    special = _canon_code(generate(ClawSubdivision(2, 1, 1)))
    ineq = Clause("inequality", "e3 >= e + 4")
    eq = Clause("equality_class", "e3 = e + 4 exactly for claw:2,1,1")
    rest = Clause("otherwise_plus_five", "e3 >= e + 5 for every other prolific graph")
    gaps = []
    for p in profs:
        ineq.record(p["e3"] >= p["e"] + 4, p["code"])
        eq.record((p["e3"] == p["e"] + 4) == (p["code"] == special), p["code"])
        if p["code"] != special:
            rest.record(p["e3"] >= p["e"] + 5, p["code"])
            gaps.append(p["e3"] - p["e"])
    obs = {"min_gap_others": min(gaps) if gaps else None}
    return CheckReport("A4", {}, f"prolific graphs 4 <= n <= {N}", len(profs), [ineq, eq, rest], obs)


def _index_row(args) -> tuple:
    g, kind, budget = args
    res = parameter_index(g, kind, budget)
    desc = classify_special(g)
    return (
        _code(g),
        res.found,
        res.r,
        res.lower_bound,
        res.exhausted,
        desc.tag,
        desc.claw_type,
        desc.descriptor.m1 if desc.tag == "claw" else None,
        desc.descriptor.m2 if desc.tag == "claw" else None,
        desc.strict_double_star,
        desc.descriptor.middle if desc.tag == "double_star" else None,
        g.n,
    )


def _index_rows(graphs: Sequence[Graph], kind: ParamKind, budget: Budget, cfg: CheckConfig) -> list[tuple]:
    return parallel_map(_index_row, [(g, kind, budget) for g in graphs], cfg.workers)


def _histogram(rows) -> dict:
    hist: dict[str, int] = {}
    for row in rows:
        key = str(row[2]) if row[1] else f">{row[3] - 1}"
        hist[key] = hist.get(key, 0) + 1
    return dict(sorted(hist.items()))


def _scan_summary(rows) -> tuple[int | None, list[str]]:
    found = [r for r in rows if r[1]]
    if not found:
        return None, []
    top = max(r[2] for r in found)
    return top, sorted(r[0] for r in found if r[2] == top)


@_register("A5", "Theorem A (5)", "k(e, F) = 2: ind(e, G) <= 2, attained exactly by the claw subdivisions")
def _check_a5(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "A5")
    graphs = prolific_corpus(N)
    rows = _index_rows(graphs, ParamKind.E, cfg.budget, cfg)
    bound = Clause("index_at_most_2", "ind(e, G) <= 2")
    wit = Clause("witnesses_are_claws", "ind(e, G) = 2 exactly for claw subdivisions")
    over = []
    for row in rows:
        code, found = row[0], row[1]
        if not found:
            over.append(code)
        bound.record(found and row[2] <= 2, code)
        wit.record((found and row[2] == 2) == (row[5] == "claw"), code)
    top, witnesses = _scan_summary(rows)
    obs = {
        "max_index": top,
        "witness_count": len(witnesses),
        "witnesses": witnesses,
        "witness_types": sorted({r[6] for r in rows if r[1] and r[2] == top and r[6]}),
        "histogram": _histogram(rows),
    }
    return CheckReport("A5", {}, f"prolific graphs 4 <= n <= {N}", len(rows), [bound, wit], obs, over)


# ---------------------------------------------------------------------------
# B: number of vertices


@_register("B1", "Theorem B (1)", "e >= n + 1 implies n1 > n")
def _check_b1(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "B1")
    profs = [p for p in _profiles(prolific_corpus(N), cfg) if p["e"] >= p["n"] + 1]
    c = Clause("n1_exceeds_n", "n1 = e > n")
    for p in profs:
        c.record(p["e"] > p["n"], p["code"])
    return CheckReport("B1", {}, f"prolific graphs 4 <= n <= {N} with e >= n + 1", len(profs), [c])


@_register("B2", "Theorem B (2)", "e = n implies n2 > n")
def _check_b2(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "B2")
    profs = [p for p in _profiles(prolific_corpus(N), cfg) if p["e"] == p["n"]]
    c = Clause("n2_exceeds_n", "n2 = e1 > n")
    for p in profs:
        c.record(p["e1"] > p["n"], p["code"])
    return CheckReport("B2", {}, f"prolific graphs 4 <= n <= {N} with e = n", len(profs), [c])


@_register("B3", "Theorem B (3)", "tree case analysis: which of n2, n3, n4 first exceeds n, by degree counts and claw type")
def _check_b3(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "B3")
    trees = [p for p in _profiles(prolific_corpus(N, max_excess=-1), cfg)]
    fams = _profiles(_descriptor_graphs(claw_members(cfg.family_max_n)), cfg)
    a = Clause("high_degree", "x_j > 0 for some j >= 4 implies n2 > n")
    b = Clause("three_branch_vertices", "x3 >= 3 implies n2 > n")
    c = Clause("two_branch_vertices", "x3 = 2 (no j >= 4) implies n2 = n, n3 > n, and G is a double-star subdivision")
    d = Clause("type_b_c", "type B or C claw subdivision implies n3 > n")
    e = Clause("type_a", "type A claw subdivision implies n3 = n and n4 > n")
    seen = set()
    for p in trees + fams:
        if p["code"] in seen:
            continue
        seen.add(p["code"])
        n, n2, n3, n4 = p["n"], p["e1"], p["e2"], p["e3"]
        x = p["x"]
        high = any(j >= 4 for j in x)
        if high:
            a.record(n2 > n, p["code"])
        elif x.get(3, 0) >= 3:
            b.record(n2 > n, p["code"])
        elif x.get(3, 0) == 2:
            c.record(n2 == n and n3 > n and p["tag"] == "double_star", p["code"])
        elif p["claw_type"] in ("B", "C"):
            d.record(n3 > n, p["code"])
        elif p["claw_type"] == "A":
            e.record(n3 == n and n4 > n, p["code"])
    uni = f"prolific trees 4 <= n <= {N} and claw subdivisions n <= {cfg.family_max_n}"
    return CheckReport("B3", {}, uni, len(seen), [a, b, c, d, e])


@_register("B4", "Theorem B (4)", "k(n, F) = 4, reached only by type A claw subdivisions")
def _check_b4(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "B4")
    rows = _index_rows(prolific_corpus(N), ParamKind.N, cfg.budget, cfg)
    bound = Clause("index_at_most_4", "ind(n, G) <= 4")
    wit = Clause("witnesses_type_a", "ind(n, G) = 4 exactly for type A claw subdivisions")
    over = []
    for row in rows:
        if not row[1]:
            over.append(row[0])
        bound.record(row[1] and row[2] <= 4, row[0])
        wit.record((row[1] and row[2] == 4) == (row[6] == "A"), row[0])
    top, witnesses = _scan_summary(rows)
    obs = {"max_index": top, "witness_count": len(witnesses), "witnesses": witnesses, "histogram": _histogram(rows)}
    return CheckReport("B4", {}, f"prolific graphs 4 <= n <= {N}", len(rows), [bound, wit], obs, over)


# ---------------------------------------------------------------------------
# C: maximum degree


@_register("C1", "Theorem C (1)", "Delta1 > Delta iff G is fine")
def _check_c1(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "C1")
    profs = _profiles(prolific_corpus(N), cfg)
    c = Clause("fine_iff_growth", "Delta(L(G)) > Delta(G) exactly when some edge uv has d(u) + d(v) - 2 > Delta")
    for p in profs:
        c.record((p["maxdeg"][1] > p["maxdeg"][0]) == p["fine"], p["code"])
    obs = {"fine": sum(p["fine"] for p in profs), "not_fine": sum(not p["fine"] for p in profs)}
    return CheckReport("C1", {}, f"prolific graphs 4 <= n <= {N}", len(profs), [c], obs)


@_register("C2", "Theorem C (2)", "non-fine with Delta >= 4 implies Delta2 > Delta, except K_{1,4} (trace 4, 3, 4, 6)")
def _check_c2(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "C2")
    profs = [p for p in _profiles(prolific_corpus(N), cfg) if not p["fine"] and p["maxdeg"][0] >= 4]
    grow = Clause("growth_by_level_2", "Delta2 > Delta unless G = K_{1,4}")
    star = Clause("k14_trace", "K_{1,4} has Delta trace 4, 3, 4, 6")
    for p in profs:
        grow.record(p["maxdeg"][2] > p["maxdeg"][0] or p["k14"], p["code"])
    k14 = degree_profile(canonical_graph(generate(Star(4))))
    star.record(k14["maxdeg"] == [4, 3, 4, 6], k14["code"])
    return CheckReport("C2", {}, f"non-fine prolific graphs with Delta >= 4, 4 <= n <= {N}", len(profs), [grow, star])


@_register(
    "C3",
    "Theorem C (3)",
    "non-fine with Delta = 3 implies Delta2 > Delta, except type A claw subdivisions and S22 with the middle edge subdivided at least twice",
)
def _check_c3(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "C3")
    F = cfg.family_max_n
    profs = [p for p in _profiles(prolific_corpus(N), cfg) if not p["fine"] and p["maxdeg"][0] == 3]
    fwd = Clause("stall_implies_exception", "Delta2 <= Delta implies G is in the exception classes")
    back = Clause("exceptions_stall", "every exception-class member (n <= family_max_n) has Delta2 = Delta and Delta3 > Delta")
    for p in profs:
        if p["maxdeg"][2] <= p["maxdeg"][0]:
            fwd.record(_is_excepted_delta3(p), p["code"])
    members = [d for d in claw_members(F) if d.type == "A"] + double_star_members(F, strict_only=True, min_middle=3)
    for p in _profiles(_descriptor_graphs(members), cfg):
        back.record(p["maxdeg"][2] == 3 and len(p["maxdeg"]) == 4 and p["maxdeg"][3] > 3, p["code"])
    uni = f"non-fine prolific graphs with Delta = 3, 4 <= n <= {N}; exception families n <= {F}"
    return CheckReport("C3", {}, uni, len(profs), [fwd, back])


# ---------------------------------------------------------------------------
# D: minimum degree


@_register("D1", "Theorem D (2)", "delta >= 3 implies delta1 > delta")
def _check_d1(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "D1")
    profs = [p for p in _profiles(prolific_corpus(N), cfg) if p["mindeg"][0] >= 3]
    c = Clause("growth", "delta(L(G)) > delta(G)")
    for p in profs:
        c.record(p["mindeg"][1] > p["mindeg"][0], p["code"])
    return CheckReport("D1", {}, f"prolific graphs with delta >= 3, 4 <= n <= {N}", len(profs), [c])


D2_BUDGET = Budget(max_iterations=16)


def _d2_row(t: int) -> tuple[int, bool, int | None, int, str | None]:
    res = parameter_index(generate(CP(3, t)), ParamKind.MINDEG, D2_BUDGET)
    return t, res.found, res.r, res.lower_bound, res.exhausted


@_register("D2", "Theorem D (1)", "ind(delta, CP(3, t)) grows without bound in t: its lower envelope strictly increases and passes 3 for some t <= 12", None)
def _check_d2(cfg: CheckConfig) -> CheckReport:
    T = cfg.max_n if cfg.max_n is not None else 12
    rows = parallel_map(_d2_row, range(1, T + 1), cfg.workers)
    mono = Clause("strictly_growing", "the certified lower bound on ind(delta, CP(3, t)) strictly increases with t")
    big = Clause("exceeds_3", "some t <= max_t has ind(delta, CP(3, t)) > 3")
    lbs = [r[3] for r in rows]
    for i in range(1, len(rows)):
        mono.record(lbs[i] > lbs[i - 1], f"t={rows[i][0]}")
    big.record(any(lb > 3 for lb in lbs), f"t<={T}")
    obs = {
        "lower_bounds": {str(t): lb for t, _, _, lb, _ in rows},
        "exact": {str(t): r for t, found, r, _, _ in rows if found},
        "budget_note": "an exhausted budget counts as the lower bound levels_completed + 1",
    }
    over = [f"t={t}:{ex}" for t, found, _, _, ex in rows if not found]
    return CheckReport("D2", {}, f"CP(3, t) for 1 <= t <= {T}", len(rows), [mono, big], obs, over)


# ---------------------------------------------------------------------------
# E, T2: average degree


@_register("E1", "Theorem E", "d1 > d for every prolific graph")
def _check_e1(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "E1")
    profs = _profiles(prolific_corpus(N), cfg)
    c = Clause("growth", "2 e1 / e > 2 e / n (exact rationals)")
    for p in profs:
        c.record(Fraction(2 * p["e1"], p["e"]) > Fraction(2 * p["e"], p["n"]), p["code"])
    return CheckReport("E1", {}, f"prolific graphs 4 <= n <= {N}", len(profs), [c])


@_register("T2", "average degree tool", "d1 >= 2(d - 1) for connected G with an edge, equality exactly for regular G")
def _check_t2(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "T2")
    profs = _profiles(connected_corpus(N, min_n=2), cfg)
    ineq = Clause("inequality", "d1 >= 2(d - 1)")
    eq = Clause("equality_iff_regular", "d1 = 2(d - 1) exactly when G is regular")
    for p in profs:
        d = Fraction(2 * p["e"], p["n"])
        d1 = Fraction(2 * p["e1"], p["e"])
        ineq.record(d1 >= 2 * (d - 1), p["code"])
        eq.record((d1 == 2 * (d - 1)) == (p["maxdeg"][0] == p["mindeg"][0]), p["code"])
    return CheckReport("T2", {}, f"connected graphs 2 <= n <= {N}", len(profs), [ineq, eq])


# ---------------------------------------------------------------------------
# F: circumference


def _f1_row(g: Graph) -> tuple[str, bool]:
    c = circumference(g)
    return _code(g), has_cycle_at_least(line_graph(g)[0], c + 1)


@_register("F1", "Theorem F", "c1 > c for every prolific graph")
def _check_f1(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "F1")
    rows = parallel_map(_f1_row, prolific_corpus(N), cfg.workers)
    c = Clause("growth", "L(G) has a cycle longer than c(G)")
    for code, ok in rows:
        c.record(ok, code)
    return CheckReport("F1", {}, f"prolific graphs 4 <= n <= {N}", len(rows), [c])


# ---------------------------------------------------------------------------
# G: matching number


def _mu_universe(cfg: CheckConfig, check_id: str) -> tuple[list[Graph], str]:
    N = _limit(cfg, check_id)
    F = cfg.family_max_n
    graphs = {g: None for g in prolific_corpus(N)}
    for g in _descriptor_graphs(claw_members(F)):
        graphs.setdefault(g, None)
    return list(graphs), f"prolific graphs 4 <= n <= {N} and claw subdivisions n <= {F}"


def _g_is_extremal(row) -> bool:
    ctype, m1, m2, n = row[6], row[7], row[8], row[11]
    if ctype == "A":
        return n % 2 == 1
    if ctype == "B":
        return n % 2 == 0 and m1 % 2 == 0 and m2 % 2 == 0
    return False


_mu_cache: dict = {}


def _mu_rows(cfg: CheckConfig) -> tuple[list[tuple], str]:
    key = (cfg.max_n, cfg.family_max_n, cfg.budget, cfg.workers)
    if key not in _mu_cache:
        graphs, uni = _mu_universe(cfg, "G1")
        _mu_cache[key] = (_index_rows(graphs, ParamKind.MATCHING, cfg.budget, cfg), uni)
    return _mu_cache[key]


@_register("G1", "Theorem G", "ind(mu, G) <= 4 for every prolific graph")
def _check_g1(cfg: CheckConfig) -> CheckReport:
    rows, uni = _mu_rows(cfg)
    c = Clause("index_at_most_4", "ind(mu, G) <= 4")
    for row in rows:
        c.record(row[1] and row[2] <= 4, row[0])
    obs = {"max_index": _scan_summary(rows)[0], "histogram": _histogram(rows)}
    return CheckReport("G1", {}, uni, len(rows), [c], obs, [r[0] for r in rows if not r[1]])


@_register("G2", "Theorem G", "ind(mu, G) = 4 exactly for odd-n type A and even-n type B claw subdivisions with m1, m2 even")
def _check_g2(cfg: CheckConfig) -> CheckReport:
    rows, uni = _mu_rows(cfg)
    fwd = Clause("witness_in_class", "ind(mu, G) = 4 implies G is in the stated class")
    back = Clause("class_attains_4", "every member of the stated class has ind(mu, G) = 4")
    for row in rows:
        four = row[1] and row[2] == 4
        if four:
            fwd.record(_g_is_extremal(row), row[0])
        if _g_is_extremal(row):
            back.record(four, row[0])
    wit = sorted(r[0] for r in rows if r[1] and r[2] == 4)
    obs = {"witness_count": len(wit), "class_size": back.tested}
    return CheckReport("G2", {}, uni, len(rows), [fwd, back], obs, [r[0] for r in rows if not r[1]])


# ---------------------------------------------------------------------------
# H: chromatic number


@_register("H1", "Theorem H", "ind(chi, G) <= 3 for every prolific graph")
def _check_h1(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "H1")
    rows = _index_rows(prolific_corpus(N), ParamKind.CHROMATIC, cfg.budget, cfg)
    c = Clause("index_at_most_3", "ind(chi, G) <= 3")
    for row in rows:
        c.record(row[1] and row[2] <= 3, row[0])
    top, wit = _scan_summary(rows)
    obs = {"max_index": top, "witness_count": len(wit), "histogram": _histogram(rows)}
    return CheckReport("H1", {}, f"prolific graphs 4 <= n <= {N}", len(rows), [c], obs, [r[0] for r in rows if not r[1]])


def _h2_row(n: int) -> tuple[int, str, list[int], str]:
    g = generate(CP(3, n - 3))
    trace = [chromatic_number(h) for h in _iterates(g, 3)]
    return n, _code(canonical_graph(g)), trace, parameter_index(g, ParamKind.CHROMATIC).describe()


def _iterates(g: Graph, depth: int) -> list[Graph]:
    out = [g]
    for _ in range(depth):
        out.append(line_graph(out[-1])[0])
    return out


@_register("H2", "Theorem H", "CP(3, n - 3) has chi trace 3, 3, 3, 4, so ind(chi) = 3 is attained infinitely often", 10)
def _check_h2(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "H2")
    rows = parallel_map(_h2_row, range(6, N + 1), cfg.workers)
    c = Clause("trace", "chi(L^k CP(3, n - 3)) for k = 0..3 is 3, 3, 3, 4")
    idx = Clause("index_3", "ind(chi, CP(3, n - 3)) = 3")
    for n, code, trace, outcome in rows:
        c.record(trace == [3, 3, 3, 4], code)
        idx.record(outcome == "Found(3)", code)
    obs = {"traces": {str(n): trace for n, _, trace, _ in rows}}
    return CheckReport("H2", {}, f"CP(3, n - 3) for 6 <= n <= {N}", len(rows), [c, idx], obs)


# ---------------------------------------------------------------------------
# I: chromatic index


@_register("I1", "Theorem I", "ind(chi', G) <= 3, equality exactly for K_{1,4}, type A claw subdivisions, S22 with middle subdivided at least twice")
def _check_i1(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "I1")
    F = cfg.family_max_n
    graphs = {g: None for g in prolific_corpus(N)}
    fam = [d for d in claw_members(F) if d.type == "A"] + double_star_members(F, strict_only=True, min_middle=3) + [Star(4)]
    for g in _descriptor_graphs(fam):
        graphs.setdefault(g, None)
    rows = _index_rows(list(graphs), ParamKind.CHROMATIC_INDEX, cfg.budget, cfg)
    bound = Clause("index_at_most_3", "ind(chi', G) <= 3")
    fwd = Clause("witness_in_class", "ind(chi', G) = 3 implies G is in the stated class")
    back = Clause("class_attains_3", "every member of the stated class has ind(chi', G) = 3")
    for row in rows:
        code = row[0]
        three = row[1] and row[2] == 3
        member = row[6] == "A" or (row[9] and (row[10] or 0) >= 3) or code == _K14
        bound.record(row[1] and row[2] <= 3, code)
        if three:
            fwd.record(member, code)
        if member:
            back.record(three, code)
    uni = f"prolific graphs 4 <= n <= {N} and equality-class members n <= {F}"
    return CheckReport("I1", {}, uni, len(rows), [bound, fwd, back], {"histogram": _histogram(rows)}, [r[0] for r in rows if not r[1]])


_K14 = write_graph6(canonical_graph(generate(Star(4))))


# ---------------------------------------------------------------------------
# J: clique number


def _j_row(g: Graph) -> tuple:
    res = parameter_index(g, ParamKind.CLIQUE)
    deg = g.degrees
    w = clique_number(g)
    d = max(deg)
    threes = [v for v in range(g.n) if deg[v] == 3]
    indep = all(not g.has_edge(a, b) for a, b in itertools.combinations(threes, 2))
    k4 = g.n == 4 and g.e == 6
    member = k4 or (w == d == 3 and indep)
    return _code(g), res.found, res.r, member


@_register("J1", "Theorem J", "ind(omega, G) <= 3, equality exactly for K4 and for omega = Delta = 3 with independent degree-3 vertices")
def _check_j1(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "J1")
    rows = parallel_map(_j_row, prolific_corpus(N), cfg.workers)
    bound = Clause("index_at_most_3", "ind(omega, G) <= 3")
    eq = Clause("equality_class", "ind(omega, G) = 3 exactly for the stated class (both directions)")
    for code, found, r, member in rows:
        bound.record(found and r <= 3, code)
        eq.record((found and r == 3) == member, code)
    obs = {"class_size": sum(m for *_, m in rows)}
    return CheckReport("J1", {}, f"prolific graphs 4 <= n <= {N}", len(rows), [bound, eq], obs)


# ---------------------------------------------------------------------------
# K, L: connectivity


def _k_row(g: Graph) -> tuple[str, int, int, int]:
    L = line_graph(g)[0]
    return _code(g), min(g.degrees), edge_connectivity(g), edge_connectivity(L)


@_register("K1", "Theorem (edge connectivity)", "delta >= 3 implies lambda1 > lambda")
def _check_k1(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "K1")
    graphs = [g for g in prolific_corpus(N) if min(g.degrees) >= 3]
    rows = parallel_map(_k_row, graphs, cfg.workers)
    c = Clause("growth", "lambda(L(G)) > lambda(G)")
    for code, _, lam, lam1 in rows:
        c.record(lam1 > lam, code)
    return CheckReport("K1", {}, f"prolific graphs with delta >= 3, 4 <= n <= {N}", len(rows), [c])


@_register("K2", "Theorem (edge connectivity)", "lambda1 >= 2 lambda - 2 for every prolific graph")
def _check_k2(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "K2")
    rows = parallel_map(_k_row, prolific_corpus(N), cfg.workers)
    c = Clause("inequality", "lambda(L(G)) >= 2 lambda(G) - 2")
    for code, _, lam, lam1 in rows:
        c.record(lam1 >= 2 * lam - 2, code)
    return CheckReport("K2", {}, f"prolific graphs 4 <= n <= {N}", len(rows), [c])


L_BUDGET = Budget(max_iterations=2)


@_register("L1", "Theorem (vertex connectivity)", "delta >= 3 implies ind(kappa, G) <= 2")
def _check_l1(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "L1")
    graphs = [g for g in prolific_corpus(N) if min(g.degrees) >= 3]
    rows = _index_rows(graphs, ParamKind.VERTEX_CONN, L_BUDGET, cfg)
    c = Clause("index_at_most_2", "kappa increases within two line-graph steps")
    for row in rows:
        c.record(row[1] and row[2] <= 2, row[0])
    obs = {"histogram": _histogram(rows)}
    return CheckReport("L1", {}, f"prolific graphs with delta >= 3, 4 <= n <= {N}", len(rows), [c], obs)


def _l2_row(g: Graph) -> tuple[str, int, int]:
    L2 = line_graph(line_graph(g)[0])[0]
    return _code(g), vertex_connectivity(g), vertex_connectivity(L2)


@_register("L2", "Theorem (vertex connectivity)", "kappa2 >= 2 kappa - 2 for every prolific graph", 7)
def _check_l2(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "L2")
    rows = parallel_map(_l2_row, prolific_corpus(N), cfg.workers)
    c = Clause("inequality", "kappa(L^2(G)) >= 2 kappa(G) - 2")
    for code, k0, k2 in rows:
        c.record(k2 >= 2 * k0 - 2, code)
    return CheckReport("L2", {}, f"prolific graphs 4 <= n <= {N}", len(rows), [c])


def _l3_row(args) -> tuple:
    kappa, lam, delta = args
    g = generate(ChartrandHarary(kappa, lam, delta))
    params = (vertex_connectivity(g), edge_connectivity(g), min(g.degrees))
    res = parameter_index(g, ParamKind.VERTEX_CONN) if kappa == lam and delta >= 3 else None
    return kappa, lam, delta, _code(canonical_graph(g)), params, res.describe() if res else None


@_register("L3", "Theorem (vertex connectivity)", "Chartrand-Harary graphs with kappa = lambda <= delta, delta >= 3, attain ind(kappa) = 2", 5)
def _check_l3(cfg: CheckConfig) -> CheckReport:
    D = _limit(cfg, "L3")
    triples = [(k, l, d) for d in range(1, D + 1) for l in range(1, d + 1) for k in range(1, l + 1)]
    rows = parallel_map(_l3_row, triples, cfg.workers)
    built = Clause("construction", "the generated graph has the prescribed (kappa, lambda, delta)")
    two = Clause("index_2", "kappa = lambda and delta >= 3 give ind(kappa, G) = 2")
    for k, l, d, code, params, outcome in rows:
        built.record(params == (k, l, d), code)
        if outcome is not None:
            two.record(outcome == "Found(2)", code)
    obs = {f"{k},{l},{d}": outcome for k, l, d, _, _, outcome in rows if outcome is not None}
    return CheckReport("L3", {}, f"triples 1 <= kappa <= lambda <= delta <= {D}", len(rows), [built, two], {"indices": obs})


# ---------------------------------------------------------------------------
# M, N: independence and domination (upper bounds only)


def _class_rows(cfg: CheckConfig, check_id: str, kind: ParamKind, pred) -> tuple[list[tuple], str]:
    N = _limit(cfg, check_id)
    graphs = [g for g in prolific_corpus(N) if pred(g)]
    return _index_rows(graphs, kind, cfg.budget, cfg), f"prolific graphs 4 <= n <= {N}"


def _bound_check(check_id: str, cfg: CheckConfig, kind: ParamKind, pred, cls_text: str, bound: int, extra_obs=None) -> CheckReport:
    rows, uni = _class_rows(cfg, check_id, kind, pred)
    c = Clause("upper_bound", f"{cls_text} implies ind({kind.symbol}, G) <= {bound}")
    for row in rows:
        c.record(row[1] and row[2] <= bound, row[0])
    top, wit = _scan_summary(rows)
    obs = {"observed_max": top, "observed_max_witnesses": wit[:MAX_LISTED], "histogram": _histogram(rows), "sharpness": "not asserted"}
    obs.update(extra_obs or {})
    return CheckReport(check_id, {}, f"{uni} with {cls_text}", len(rows), [c], obs, [r[0] for r in rows if not r[1]])


def _avg_at_least(g: Graph, d: int) -> bool:
    return Fraction(2 * g.e, g.n) >= d


@_register("M1", "Theorem M (1)", "d >= 4 implies ind(alpha, G) <= 2")
def _check_m1(cfg):
    return _bound_check("M1", cfg, ParamKind.INDEPENDENCE, lambda g: _avg_at_least(g, 4), "d >= 4", 2)


@_register("M2", "Theorem M (2)", "delta >= 3 implies ind(alpha, G) <= 2")
def _check_m2(cfg):
    return _bound_check("M2", cfg, ParamKind.INDEPENDENCE, lambda g: min(g.degrees) >= 3, "delta >= 3", 2)


@_register("M3", "Theorem M (3)", "d >= 3 implies ind(alpha, G) <= 3")
def _check_m3(cfg):
    return _bound_check("M3", cfg, ParamKind.INDEPENDENCE, lambda g: _avg_at_least(g, 3), "d >= 3", 3)


@_register("M4", "Theorem M (4)", "delta = 2 implies ind(alpha, G) <= 3")
def _check_m4(cfg):
    return _bound_check("M4", cfg, ParamKind.INDEPENDENCE, lambda g: min(g.degrees) == 2, "delta = 2", 3)


_N_NOTE = {
    "reading": "gamma",
    "discrepancy": "the theorem statement writes ind(alpha, G) in all three clauses; the checks use the domination number, "
    "matching the surrounding argument and the summary table",
}


def _gamma_ratio(rows_graphs: list[Graph]) -> str | None:
    best = None
    for g in rows_graphs:
        r = Fraction(domination_number(g), g.n)
        best = r if best is None or r > best else best
    return str(best) if best is not None else None


@_register("N1", "Theorem N (1)", "delta >= 4 implies ind(gamma, G) <= 2")
def _check_n1(cfg):
    N = _limit(cfg, "N1")
    extra = dict(_N_NOTE)
    extra["max_gamma_over_n"] = _gamma_ratio([g for g in prolific_corpus(N) if min(g.degrees) >= 4])
    return _bound_check("N1", cfg, ParamKind.DOMINATION, lambda g: min(g.degrees) >= 4, "delta >= 4", 2, extra)


@_register("N2", "Theorem N (2)", "delta = 3 implies ind(gamma, G) <= 3")
def _check_n2(cfg):
    return _bound_check("N2", cfg, ParamKind.DOMINATION, lambda g: min(g.degrees) == 3, "delta = 3", 3, dict(_N_NOTE))


@_register("N3", "Theorem N (3)", "d >= 3 implies ind(gamma, G) <= 3")
def _check_n3(cfg):
    return _bound_check("N3", cfg, ParamKind.DOMINATION, lambda g: _avg_at_least(g, 3), "d >= 3", 3, dict(_N_NOTE))


# ---------------------------------------------------------------------------
# S1: identities used throughout the arguments


def _s1_row(g: Graph) -> tuple:
    L = line_graph(g)[0]
    deg = g.degrees
    mu = matching_number(g)
    mu_star = min_maximal_matching(g)
    chi1 = chromatic_index(g)
    chi = chromatic_number(g)
    have_line = L.n > 0
    claw_free = is_claw_free(g)
    kappa = vertex_connectivity(g) if g.n > 1 else 0
    lam = edge_connectivity(g) if g.n > 1 else 0
    return (
        _code(g),
        is_prolific(g),
        claw_free,
        g.n,
        max(deg),
        min(deg),
        mu,
        mu_star,
        chi1,
        chromatic_number(L) if have_line else 0,
        independence_number(L) if have_line else 0,
        independent_domination_number(L) if have_line else 0,
        domination_number(L) if have_line else 0,
        clique_number(L) if have_line else 0,
        kappa,
        lam,
        chi,
        stacho_phi(g),
    )


@_register("S1", "identity suite", "line-graph identities and classical bounds used by the arguments hold on every connected graph")
def _check_s1(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "S1")
    rows = parallel_map(_s1_row, connected_corpus(N, min_n=2), cfg.workers)
    c_chi = Clause("chi_prime_is_chi_of_line", "chi'(G) = chi(L(G))")
    c_alpha = Clause("alpha_of_line_is_mu", "alpha(L(G)) = mu(G)")
    c_i = Clause("i_of_line_is_mu_star", "i(L(G)) = mu*(G)")
    c_gamma = Clause("gamma_of_line_is_i", "gamma(L(G)) = i(L(G)) (line graphs are claw-free)")
    c_omega = Clause("omega_of_line_is_delta", "omega(L(G)) = Delta(G) for prolific G")
    c_sumner = Clause("claw_free_near_perfect", "connected claw-free G has mu = floor(n / 2)")
    c_mm = Clause("mu_star_brackets_mu", "mu* <= mu <= 2 mu*")
    c_conn = Clause("whitney", "kappa <= lambda <= delta")
    c_phi = Clause("stacho", "chi <= phi + 1")
    c_viz = Clause("vizing", "Delta <= chi' <= Delta + 1")
    for (code, prol, cf, n, dmax, dmin, mu, mus, chi1, chiL, alphaL, iL, gammaL, omegaL, kappa, lam, chi, phi) in rows:
        c_chi.record(chi1 == chiL, code)
        c_alpha.record(alphaL == mu, code)
        c_i.record(iL == mus, code)
        c_gamma.record(gammaL == iL, code)
        if prol:
            c_omega.record(omegaL == dmax, code)
        if cf:
            c_sumner.record(mu == n // 2, code)
        c_mm.record(mus <= mu <= 2 * mus, code)
        c_conn.record(kappa <= lam <= dmin, code)
        c_phi.record(chi <= phi + 1, code)
        c_viz.record(dmax <= chi1 <= dmax + 1, code)
    clauses = [c_chi, c_alpha, c_i, c_gamma, c_omega, c_sumner, c_mm, c_conn, c_phi, c_viz]
    return CheckReport("S1", {}, f"connected graphs 2 <= n <= {N}", len(rows), clauses)


# ---------------------------------------------------------------------------
# T: tools


@_register("T1", "tree identity", "for trees, 2 e1 - 2 e = -2 + sum_j (j - 1)(j - 2) x_j", 10)
def _check_t1(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "T1")
    trees = connected_corpus(N, min_n=2, max_excess=-1)
    c = Clause("identity", "2 e1 - 2 e = -2 + sum (j - 1)(j - 2) x_j")
    for g in trees:
        e1 = line_graph(g)[0].e
        rhs = -2 + sum((d - 1) * (d - 2) for d in g.degrees)
        c.record(2 * e1 - 2 * g.e == rhs, _code(g))
    return CheckReport("T1", {}, f"trees 2 <= n <= {N}", len(trees), [c])


def _excess(h: Graph) -> int:
    """e1(H) - e(H), from the materialized line graph."""
    return line_graph(h)[0].e - h.e


def _t3_row(g: Graph) -> tuple[str, int, list[str], int, list[str]]:
    code = _code(g)
    base = _excess(g)
    steps, bad_steps = 0, []
    for edge in g.edges:
        h = remove_edge(g, edge)
        core = drop_isolated(h)
        if core.n == 0 or not is_connected(core):
            continue
        steps += 1
        if base < _excess(h):
            bad_steps.append(code)
    pairs, bad_pairs = 0, []
    if g.e <= 10:
        deg_g = sum(comb(d, 2) for d in g.degrees) - g.e
        edges = g.edges
        for size in range(1, g.e + 1):
            for sub in itertools.combinations(range(g.e), size):
                deg = [0] * g.n
                chosen = [edges[i] for i in sub]
                for u, v in chosen:
                    deg[u] += 1
                    deg[v] += 1
                # connected (ignoring isolated vertices)
                adj: dict[int, list[int]] = {}
                for u, v in chosen:
                    adj.setdefault(u, []).append(v)
                    adj.setdefault(v, []).append(u)
                start = chosen[0][0]
                seen = {start}
                stack = [start]
                while stack:
                    x = stack.pop()
                    for y in adj[x]:
                        if y not in seen:
                            seen.add(y)
                            stack.append(y)
                if len(seen) != len(adj):
                    continue
                pairs += 1
                if sum(comb(d, 2) for d in deg) - size > deg_g:
                    bad_pairs.append(code)
    return code, steps, bad_steps, pairs, bad_pairs


@_register("T3", "subgraph monotonicity", "for connected H inside connected G, e1(G) - e1(H) >= e(G) - e(H)", 7)
def _check_t3(cfg: CheckConfig) -> CheckReport:
    N = _limit(cfg, "T3")
    rows = parallel_map(_t3_row, connected_corpus(N, min_n=2), cfg.workers)
    step = Clause(
        "single_deletions",
        "deleting one edge and keeping a connected remainder never raises e1 - e; "
        "every connected pair is a chain of such steps, so this covers all connected pairs",
    )
    brute = Clause("all_connected_subgraphs", "direct check over every connected edge subset when e(G) <= 10")
    for code, steps, bad_steps, pairs, bad_pairs in rows:
        step.tested += steps
        step.counterexamples.extend(bad_steps)
        brute.tested += pairs
        brute.counterexamples.extend(bad_pairs)
    return CheckReport("T3", {}, f"connected graphs 2 <= n <= {N}", len(rows), [step, brute])


def _partitions(m: int, parts: int, cap: int | None = None):
    """Non-increasing sequences of ``parts`` non-negative integers summing to ``m``."""
    cap = m if cap is None else cap
    if parts == 0:
        if m == 0:
            yield ()
        return
    for first in range(min(m, cap), -1, -1):
        if first * parts < m:
            break
        for rest in _partitions(m - first, parts - 1, first):
            yield (first,) + rest


def balanced_sequence(n: int, m: int) -> tuple[int, ...]:
    q, r = divmod(m, n)
    return tuple([q + 1] * r + [q] * (n - r))


@_register("T4", "balanced sequences", "sum of C(t_j, 2) over F(n, m) is minimized exactly by the balanced sequence", None)
def _check_t4(cfg: CheckConfig) -> CheckReport:
    N = cfg.max_n if cfg.max_n is not None else 8
    M = 20
    mins = Clause("balanced_is_minimum", "the minimum of sum C(t_j, 2) is attained exactly by y(n, m)")
    avg = Clause("jensen_bound", "sum C(t_j, 2) >= n C(m / n, 2), with equality exactly when all t_j are equal")
    count = 0
    for n in range(1, N + 1):
        for m in range(0, M + 1):
            best = balanced_sequence(n, m)
            best_val = sum(comb(t, 2) for t in best)
            floor = n * Fraction(m, n) * (Fraction(m, n) - 1) / 2
            for seq in _partitions(m, n):
                count += 1
                val = sum(comb(t, 2) for t in seq)
                tag = f"n={n},m={m},t={','.join(map(str, seq))}"
                mins.record((val == best_val) == (seq == best) and val >= best_val, tag)
                avg.record(val >= floor and ((val == floor) == (seq[0] == seq[-1])), tag)
    return CheckReport("T4", {}, f"F(n, m) for 1 <= n <= {N}, 0 <= m <= {M}", count, [mins, avg])


@_register("T5", "claw subdivision lemmas", "by type C/B/A: e1 = e, e2 - e = 3/2/1, e3 - e >= 15/9/4 (exactly 4 when m1 = 2 in type A)", None)
def _check_t5(cfg: CheckConfig) -> CheckReport:
    cap = cfg.max_n if cfg.max_n is not None else 4
    members = claw_members(3 * cap + 1, cap=cap)
    graphs = _descriptor_graphs(members)
    profs = _profiles(graphs, cfg)
    c_e1 = Clause("e1_equals_e", "e1 = e")
    c_e2 = Clause("e2_delta", "e2 - e is 3, 2, 1 for types C, B, A")
    c_e3 = Clause("e3_bound", "e3 - e is at least 15, 9, 4 for types C, B, A")
    c_a2 = Clause("type_a_m1_2", "type A with m1 = 2 has e3 = e + 4")
    target2 = {"C": 3, "B": 2, "A": 1}
    target3 = {"C": 15, "B": 9, "A": 4}
    gaps: dict[str, int] = {}
    for d, p in zip(members, profs):
        t = d.type
        c_e1.record(p["e1"] == p["e"], p["code"])
        c_e2.record(p["e2"] - p["e"] == target2[t], p["code"])
        c_e3.record(p["e3"] - p["e"] >= target3[t], p["code"])
        if t == "A" and d.m1 == 2:
            c_a2.record(p["e3"] == p["e"] + 4, p["code"])
        key = t if not (t == "A" and d.m1 >= 3) else "A(m1>=3)"
        if t == "A" and d.m1 == 2:
            key = "A(m1=2)"
        gaps[key] = min(gaps.get(key, 10**9), p["e3"] - p["e"])
    obs = {"min_e3_gap": dict(sorted(gaps.items()))}
    return CheckReport("T5", {}, f"claw subdivisions with legs <= {cap}", len(members), [c_e1, c_e2, c_e3, c_a2], obs)


def _t6_universe(cfg: CheckConfig) -> tuple[list[Graph], str]:
    N = _limit(cfg, "T6")
    full = min(N, 8)
    graphs = prolific_corpus(full)
    if N > 8:
        graphs += prolific_corpus(N, min_n=9, max_excess=4)
        return graphs, f"prolific graphs 4 <= n <= 8, plus 9 <= n <= {N} with e <= n + 4"
    return graphs, f"prolific graphs 4 <= n <= {N}"


def _t6_row(g: Graph) -> tuple:
    L = line_graph(g)[0]
    deg = sorted(g.degrees, reverse=True)
    return (_code(g), g.n, g.e, L.e, tuple(deg), classify_special(g).tag, is_cycle_with_chord(g), is_two_cycles_path(g), is_theta(g))


def cycle_with_disjoint_chords(n: int, k: int) -> Graph:
    """C_n plus k vertex-disjoint chords (i, i + n // 2), for 2k <= n and n >= 4."""
    half = n // 2
    return generate(CycleWithChords(n, tuple((i, i + half) for i in range(k))))


@_register("T6", "prolific edge bounds", "lower bounds on e1 by excess e - n, with the named equality realizations", 9)
def _check_t6(cfg: CheckConfig) -> CheckReport:
    graphs, uni = _t6_universe(cfg)
    rows = parallel_map(_t6_row, graphs, cfg.workers)
    p2 = Clause("excess_2", "e = n + 2 implies e1 >= n + 8, equality exactly for degree sequence 3^4 2^(n-4)")
    p1 = Clause("excess_1", "e = n + 1 implies e1 >= n + 4, equality exactly for degree sequence 3^2 2^(n-2)")
    p1r = Clause("excess_1_realizations", "cycles with a chord and two cycles joined by a path attain e1 = n + 4")
    p0 = Clause("excess_0", "e = n implies e1 >= n + 1, equality exactly for CP(k, n - k)")
    pk = Clause("excess_k", "e = n + k with n >= 2k implies e1 >= e + 3k")
    pks = Clause("excess_k_sharp", "C_n with k disjoint chords attains e1 = e + 3k")
    p6 = Clause("excess_ge_2", "e >= n + 2 implies e1 >= e + 6")
    theta_extra = []
    for code, n, e, e1, deg, tag, chord, dumbbell, theta in rows:
        if e == n + 2:
            target = (3, 3, 3, 3) + (2,) * (n - 4)
            p2.record(e1 >= n + 8 and ((e1 == n + 8) == (deg == target)), code)
        if e == n + 1:
            target = (3, 3) + (2,) * (n - 2)
            p1.record(e1 >= n + 4 and ((e1 == n + 4) == (deg == target)), code)
            if chord or dumbbell:
                p1r.record(e1 == n + 4, code)
            elif e1 == n + 4 and theta:
                theta_extra.append(code)
        if e == n:
            p0.record(e1 >= n + 1 and ((e1 == n + 1) == (tag == "cp")), code)
        k = e - n
        if k >= 1 and n >= 2 * k:
            pk.record(e1 >= e + 3 * k, code)
        if k >= 2:
            p6.record(e1 >= e + 6, code)
    N = _limit(cfg, "T6")
    for n in range(4, N + 1):
        for k in range(1, n // 2 + 1):
            g = cycle_with_disjoint_chords(n, k)
            pks.record(line_graph(g)[0].e == g.e + 3 * k, _canon_code(g))
        for p1_ in range(3, n):
            for p2_ in range(3, p1_ + 1):
                if p1_ + p2_ < n:
                    g = generate(TwoCyclesPath(p1_, p2_, n + 1 - p1_ - p2_))
                    p1r.record(line_graph(g)[0].e == n + 4, _canon_code(g))
    obs = {
        "theta_equality_without_chord": len(theta_extra),
        "note": "theta graphs whose degree-3 vertices are not adjacent (e.g. K_{2,3}) also reach e1 = n + 4",
        "sharpness_degree_sequence": "2k vertices of degree 3 and n - 2k of degree 2",
    }
    return CheckReport("T6", {}, uni, len(rows), [p2, p1, p1r, p0, pk, pks, p6], obs)


# ---------------------------------------------------------------------------
# X: Hamiltonicity of iterates (optional)

X_BUDGET = Budget(solver_node_cap=2_000_000)


def _x_row(args) -> tuple[str, bool | None]:
    g, depth = args
    h = g
    for _ in range(depth):
        h = line_graph(h)[0]
    try:
        return _code(g), is_hamiltonian(h, ticker_from(X_BUDGET, "hamiltonicity"))
    except BudgetExceeded:
        return _code(g), None


def _x_report(check_id: str, cfg: CheckConfig, graphs, depth_of, statement: str, uni: str) -> CheckReport:
    rows = parallel_map(_x_row, [(g, depth_of(g)) for g in graphs], cfg.workers)
    c = Clause("hamiltonian", statement)
    over = []
    for code, ok in rows:
        if ok is None:
            over.append(code)
            continue
        c.record(ok, code)
    return CheckReport(check_id, {}, uni, len(rows), [c], {}, over)


@_register("X1", "iterated Hamiltonicity", "delta >= 3 prolific graphs have Hamiltonian L^2(G)", 7, default_on=False)
def _check_x1(cfg: CheckConfig) -> CheckReport:
    N = min(_limit(cfg, "X1"), 7)
    graphs = [g for g in prolific_corpus(N) if min(g.degrees) >= 3]
    return _x_report("X1", cfg, graphs, lambda g: 2, "L^2(G) is Hamiltonian", f"prolific graphs with delta >= 3, 4 <= n <= {N}")


@_register("X2", "iterated Hamiltonicity", "prolific graphs on n vertices have Hamiltonian L^(n-3)(G)", 6, default_on=False)
def _check_x2(cfg: CheckConfig) -> CheckReport:
    N = min(_limit(cfg, "X2"), 6)
    graphs = prolific_corpus(N)
    return _x_report("X2", cfg, graphs, lambda g: g.n - 3, "L^(n-3)(G) is Hamiltonian", f"prolific graphs 4 <= n <= {N}")
