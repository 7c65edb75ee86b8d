"""The fifteen graph parameters and the auxiliary quantities used alongside them."""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Callable, Union

from .errors import EmptyGraph
from .graph import Graph
from .linegraph import Budget
from .solvers._budget import Ticker, ticker_from
from .solvers.cliques import clique_number, independence_number
from .solvers.coloring import chromatic_index, chromatic_number, is_bipartite
from .solvers.connectivity import edge_connectivity, vertex_connectivity
from .solvers.cycles import circumference, has_cycle_at_least, is_hamiltonian
from .solvers.domination import domination_number, independent_domination_number
from .solvers.matching import has_near_perfect_matching, matching_number, maximum_matching, min_maximal_matching

ParamValue = Union[int, Fraction]

__all__ = [
    "ParamKind",
    "ParamValue",
    "basic_params",
    "compute",
    "compute_many",
    "circumference",
    "matching_number",
    "maximum_matching",
    "min_maximal_matching",
    "chromatic_number",
    "chromatic_index",
    "clique_number",
    "independence_number",
    "domination_number",
    "independent_domination_number",
    "edge_connectivity",
    "vertex_connectivity",
    "stacho_phi",
    "is_fine",
    "has_near_perfect_matching",
    "is_claw_free",
    "is_bipartite",
    "is_hamiltonian",
    "has_cycle_at_least",
]


class ParamKind(enum.Enum):
    N = "n"
    E = "e"
    MAXDEG = "maxdeg"
    MINDEG = "mindeg"
    AVGDEG = "avgdeg"
    CIRCUMFERENCE = "circumference"
    MATCHING = "matching"
    CHROMATIC = "chromatic"
    CHROMATIC_INDEX = "chromatic_index"
    CLIQUE = "clique"
    EDGE_CONN = "edge_conn"
    VERTEX_CONN = "vertex_conn"
    INDEPENDENCE = "independence"
    IND_DOMINATION = "ind_domination"
    DOMINATION = "domination"

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @classmethod
    def parse(cls, text: str) -> ParamKind:
        key = text.strip().lower().replace("-", "_")
        if key in _ALIASES:
            return _ALIASES[key]
        for kind in cls:
            if kind.value == key or kind.name.lower() == key:
                return kind
        raise ValueError(f"unknown parameter {text!r}; try one of {', '.join(sorted(_ALIASES))}")


_SYMBOLS = {
    ParamKind.N: "n",
    ParamKind.E: "e",
    ParamKind.MAXDEG: "Delta",
    ParamKind.MINDEG: "delta",
    ParamKind.AVGDEG: "d",
    ParamKind.CIRCUMFERENCE: "c",
    ParamKind.MATCHING: "mu",
    ParamKind.CHROMATIC: "chi",
    ParamKind.CHROMATIC_INDEX: "chi'",
    ParamKind.CLIQUE: "omega",
    ParamKind.EDGE_CONN: "lambda",
    ParamKind.VERTEX_CONN: "kappa",
    ParamKind.INDEPENDENCE: "alpha",
    ParamKind.IND_DOMINATION: "i",
    ParamKind.DOMINATION: "gamma",
}

_ALIASES = {
    "n": ParamKind.N,
    "e": ParamKind.E,
    "maxdeg": ParamKind.MAXDEG,
    "mindeg": ParamKind.MINDEG,
    "d": ParamKind.AVGDEG,
    "avgdeg": ParamKind.AVGDEG,
    "c": ParamKind.CIRCUMFERENCE,
    "mu": ParamKind.MATCHING,
    "chi": ParamKind.CHROMATIC,
    "chi1": ParamKind.CHROMATIC_INDEX,
    "chiprime": ParamKind.CHROMATIC_INDEX,
    "omega": ParamKind.CLIQUE,
    "lambda": ParamKind.EDGE_CONN,
    "kappa": ParamKind.VERTEX_CONN,
    "alpha": ParamKind.INDEPENDENCE,
    "i": ParamKind.IND_DOMINATION,
    "gamma": ParamKind.DOMINATION,
}


def basic_params(g: Graph) -> tuple[int, int, int, int, Fraction]:
    """``(n, e, Δ, δ, d)`` with the average degree as an exact fraction."""
    if g.n == 0:
        raise EmptyGraph("basic parameters are undefined for the graph with no vertices")
    deg = g.degrees
    return g.n, g.e, max(deg), min(deg), Fraction(2 * g.e, g.n)


def stacho_phi(g: Graph) -> int:
    """max over u of the largest neighbour degree not exceeding deg(u); empty inner maxima count 0."""
    deg = g.degrees
    best = 0
    for u in range(g.n):
        du = deg[u]
        for v in g.adj[u]:
            dv = deg[v]
            if best < dv <= du:
                best = dv
    return best


def is_fine(g: Graph) -> bool:
    """Some edge uv has deg(u) + deg(v) − 2 > Δ."""
    if g.e == 0:
        return False
    deg = g.degrees
    top = max(deg)
    return any(deg[u] + deg[v] - 2 > top for u, v in g.edges)


def is_claw_free(g: Graph) -> bool:
    """No induced K_{1,3}: no vertex has three pairwise nonadjacent neighbours."""
    masks = g.masks
    for v in range(g.n):
        nb = g.adj[v]
        if len(nb) < 3:
            continue
        nmask = masks[v]
        for a in nb:
            rest = nmask & ~masks[a] & ~((1 << (a + 1)) - 1)
            while rest:
                lo = rest & -rest
                b = lo.bit_length() - 1
                rest ^= lo
                if nmask & ~masks[a] & ~masks[b] & ~((1 << (b + 1)) - 1):
                    return False
    return True


_EXACT: dict[ParamKind, Callable[[Graph, Ticker], ParamValue]] = {
    ParamKind.N: lambda g, t: g.n,
    ParamKind.E: lambda g, t: g.e,
    ParamKind.MAXDEG: lambda g, t: basic_params(g)[2],
    ParamKind.MINDEG: lambda g, t: basic_params(g)[3],
    ParamKind.AVGDEG: lambda g, t: basic_params(g)[4],
    ParamKind.CIRCUMFERENCE: lambda g, t: circumference(g, t),
    ParamKind.MATCHING: lambda g, t: matching_number(g),
    ParamKind.CHROMATIC: lambda g, t: chromatic_number(g, t),
    ParamKind.CHROMATIC_INDEX: lambda g, t: chromatic_index(g, t),
    ParamKind.CLIQUE: lambda g, t: clique_number(g, t),
    ParamKind.EDGE_CONN: lambda g, t: edge_connectivity(g, t),
    ParamKind.VERTEX_CONN: lambda g, t: vertex_connectivity(g, t),
    ParamKind.INDEPENDENCE: lambda g, t: independence_number(g, t),
    ParamKind.IND_DOMINATION: lambda g, t: independent_domination_number(g, t),
    ParamKind.DOMINATION: lambda g, t: domination_number(g, t),
}


def compute(g: Graph, kind: ParamKind, budget: Budget | None = None) -> ParamValue:
    """Exact value of parameter ``kind`` on ``g``; may raise BudgetExceeded."""
    return _EXACT[kind](g, ticker_from(budget, kind.value))


def compute_many(g: Graph, kinds, budget: Budget | None = None) -> dict[ParamKind, ParamValue]:
    return {k: compute(g, k, budget) for k in kinds}
