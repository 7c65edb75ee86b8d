"""Vertex colouring (DSATUR branch and bound) and edge colouring decisions."""

from __future__ import annotations

from ..graph import Graph, components
from ._budget import Ticker
from .cliques import max_clique_masks


def dsatur_greedy(masks) -> list[int]:
    """Greedy DSATUR colouring; returns the colour of each vertex."""
    n = len(masks)
    colour = [-1] * n
    forb = [0] * n
    for _ in range(n):
        best, key = -1, None
        for v in range(n):
            if colour[v] < 0:
                k = (forb[v].bit_count(), masks[v].bit_count())
                if key is None or k > key:
                    best, key = v, k
        c = 0
        f = forb[best]
        while (f >> c) & 1:
            c += 1
        colour[best] = c
        m = masks[best]
        while m:
            low = m & -m
            forb[low.bit_length() - 1] |= 1 << c
            m ^= low
    return colour


def is_k_colourable(masks, k: int, ticker: Ticker | None = None) -> list[int] | None:
    """A proper ``k``-colouring, or ``None`` when none exists.

    DSATUR branching with per-colour neighbour counts (undoable), and the
    usual symmetry break: a vertex may open at most one new colour.
    """
    n = len(masks)
    if n == 0:
        return []
    if k <= 0:
        return None
    ticker = ticker or Ticker(label="colouring")
    colour = [-1] * n
    counts = [[0] * k for _ in range(n)]
    forb = [0] * n
    nbrs = []
    for v in range(n):
        m = masks[v]
        lst = []
        while m:
            low = m & -m
            lst.append(low.bit_length() - 1)
            m ^= low
        nbrs.append(lst)
    deg = [len(x) for x in nbrs]
    full = (1 << k) - 1

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if colour[v] < 0:
                kk = (forb[v].bit_count(), deg[v], -v)
                if key is None or kk > key:
                    best, key = v, kk
        return best

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        ticker.tick()
        v = pick()
        allowed = full & ~forb[v]
        limit = min(used + 1, k)
        for c in range(limit):
            if not (allowed >> c) & 1:
                continue
            colour[v] = c
            bit = 1 << c
            dead = False
            for w in nbrs[v]:
                cw = counts[w]
                cw[c] += 1
                if cw[c] == 1:
                    forb[w] |= bit
                    if colour[w] < 0 and forb[w] == full:
                        dead = True
            if not dead and rec(done + 1, max(used, c + 1)):
                return True
            for w in nbrs[v]:
                cw = counts[w]
                cw[c] -= 1
                if cw[c] == 0:
                    forb[w] &= ~bit
            colour[v] = -1
        return False

    if rec(0, 0):
        return colour[:]
    return None


def chromatic_number_masks(masks, ticker: Ticker | None = None) -> int:
    n = len(masks)
    if n == 0:
        return 0
    if all(m == 0 for m in masks):
        return 1
    lb = len(max_clique_masks(masks, ticker))
    ub = max(dsatur_greedy(masks)) + 1
    while ub > lb:
        if is_k_colourable(masks, ub - 1, ticker) is None:
            break
        ub -= 1
    return ub


def chromatic_number(g: Graph, ticker: Ticker | None = None) -> int:
    """Exact χ: clique lower bound, DSATUR upper bound, decision search downward."""
    if g.n == 0:
        return 0
    best = 1
    for comp in components(g):
        if len(comp) == 1:
            continue
        index = {v: i for i, v in enumerate(comp)}
        sub = []
        for v in comp:
            m = 0
            for w in g.adj[v]:
                m |= 1 << index[w]
            sub.append(m)
        best = max(best, chromatic_number_masks(sub, ticker))
    return best


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def _core_is_forest(g: Graph, delta: int) -> bool:
    core = [v for v in range(g.n) if len(g.adj[v]) == delta]
    inside = set(core)
    parent = {v: v for v in core}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        if u in inside and v in inside:
            a, b = find(u), find(v)
            if a == b:
                return False
            parent[a] = b
    return True


def is_delta_edge_colourable(g: Graph, k: int, ticker: Ticker | None = None) -> bool:
    """Decide a proper ``k``-edge-colouring by DSATUR over edges.

    ``used[x]`` is the bitmask of colours already on edges at ``x``, so the
    forbidden set of edge ``uv`` is ``used[u] | used[v]``.
    """
    edges = g.edges
    m = len(edges)
    if m == 0:
        return True
    ticker = ticker or Ticker(label="edge colouring")
    used = [0] * g.n
    colour = [-1] * m
    full = (1 << k) - 1
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    adjdeg = [len(incident[u]) + len(incident[v]) - 2 for u, v in edges]

    def rec(done: int, opened: int) -> bool:
        if done == m:
            return True
        ticker.tick()
        best, key = -1, None
        for i in range(m):
            if colour[i] < 0:
                u, v = edges[i]
                f = used[u] | used[v]
                if f == full:
                    return False
                kk = (f.bit_count(), adjdeg[i])
                if key is None or kk > key:
                    best, key = i, kk
        u, v = edges[best]
        allowed = full & ~(used[u] | used[v])
        for c in range(min(opened + 1, k)):
            if not (allowed >> c) & 1:
                continue
            bit = 1 << c
            colour[best] = c
            used[u] |= bit
            used[v] |= bit
            if rec(done + 1, max(opened, c + 1)):
                return True
            used[u] &= ~bit
            used[v] &= ~bit
            colour[best] = -1
        return False

    return rec(0, 0)


def chromatic_index(g: Graph, ticker: Ticker | None = None) -> int:
    """Exact χ′ ∈ {Δ, Δ+1}, with König, overfull and Fournier shortcuts first."""
    if g.e == 0:
        return 0
    delta = max(g.degrees)
    if delta <= 1:
        return delta
    if is_bipartite(g):
        return delta
    if g.e > delta * (g.n // 2):
        return delta + 1
    if _core_is_forest(g, delta):
        return delta
    return delta if is_delta_edge_colourable(g, delta, ticker) else delta + 1
