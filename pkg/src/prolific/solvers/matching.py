"""Maximum matching (blossom algorithm) and minimum maximal matching."""

from __future__ import annotations

from collections import deque

from ..graph import Graph
from ._budget import Ticker


def _augment_from(root: int, adj, match: list[int]) -> bool:
    """Search an augmenting path from exposed ``root``; flip it if found."""
    n = len(adj)
    used = [False] * n
    p = [-1] * n
    base = list(range(n))
    used[root] = True
    q = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = p[match[b]]

    def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    while q:
        v = q.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and p[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark(v, cur, to, blossom)
                mark(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            q.append(i)
            elif p[to] == -1:
                p[to] = v
                if match[to] == -1:
                    while to != -1:
                        pv = p[to]
                        nxt = match[pv]
                        match[to], match[pv] = pv, to
                        to = nxt
                    return True
                used[match[to]] = True
                q.append(match[to])
    return False


def maximum_matching(g: Graph) -> list[int]:
    """Mate array of a maximum matching (``-1`` for exposed vertices).

    Edmonds' blossom contraction, BFS from each exposed vertex, seeded by a
    greedy matching.
    """
    adj = g.adj
    match = [-1] * g.n
    for u in range(g.n):
        if match[u] == -1:
            for v in adj[u]:
                if match[v] == -1:
                    match[u], match[v] = v, u
                    break
    for root in range(g.n):
        if match[root] == -1 and adj[root]:
            _augment_from(root, adj, match)
    return match


def matching_number(g: Graph) -> int:
    return sum(1 for v, m in enumerate(maximum_matching(g)) if m > v)


def has_near_perfect_matching(g: Graph) -> bool:
    return matching_number(g) == g.n // 2


def _greedy_maximal(masks, avail: int) -> int:
    """Size of a greedy maximal matching inside ``avail`` (min-degree first)."""
    size = 0
    while True:
        best_v, best_d = -1, None
        m = avail
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            d = (masks[v] & avail).bit_count()
            if d and (best_d is None or d < best_d):
                best_v, best_d = v, d
        if best_v < 0:
            return size
        nb = masks[best_v] & avail
        # partner: neighbour with fewest remaining neighbours
        pick, pick_d = -1, None
        while nb:
            low = nb & -nb
            w = low.bit_length() - 1
            nb ^= low
            d = (masks[w] & avail).bit_count()
            if pick_d is None or d < pick_d:
                pick, pick_d = w, d
        avail &= ~((1 << best_v) | (1 << pick))
        size += 1


def _induced_matching_lb(masks, avail: int) -> int:
    """Greedy induced matching in G[avail]; each maximal-matching edge dominates at most one of its edges."""
    size = 0
    free = avail
    while free:
        low = free & -free
        u = low.bit_length() - 1
        nb = masks[u] & free
        if not nb:
            free ^= low
            continue
        w = (nb & -nb).bit_length() - 1
        size += 1
        free &= ~(masks[u] | masks[w] | low | (1 << w))
    return size


def min_maximal_matching(g: Graph, ticker: Ticker | None = None) -> int:
    """μ*: minimum size of a maximal matching, by memoized branch and bound.

    The state is the set U of still unmatched vertices; an edge inside U is not
    yet dominated, and some chosen edge must cover one of its endpoints.
    """
    masks = g.masks
    ticker = ticker or Ticker(label="min_maximal_matching")
    exact: dict[int, int] = {}
    lower: dict[int, int] = {}

    def lb(U: int) -> int:
        return max(_induced_matching_lb(masks, U), (_greedy_maximal(masks, U) + 1) // 2)

    def solve(U: int, ub: int) -> int:
        # pick the undominated edge with the fewest branching options
        best_u, best_opts = -1, None
        m = U
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            d = (masks[u] & U).bit_count()
            if d and (best_opts is None or d < best_opts):
                best_u, best_opts = u, d
        if best_u < 0:
            return 0
        if U in exact:
            return exact[U]
        bound = max(lb(U), lower.get(U, 0))
        if bound >= ub:
            return bound
        ticker.tick()
        u = best_u
        nbu = masks[u] & U
        v = -1
        bv = None
        t = nbu
        while t:
            low = t & -t
            w = low.bit_length() - 1
            t ^= low
            d = (masks[w] & U).bit_count()
            if bv is None or d < bv:
                v, bv = w, d
        options = []
        t = nbu
        while t:
            low = t & -t
            options.append((u, low.bit_length() - 1))
            t ^= low
        t = masks[v] & U & ~(1 << u)
        while t:
            low = t & -t
            options.append((v, low.bit_length() - 1))
            t ^= low
        best = ub
        for x, w in options:
            r = 1 + solve(U & ~((1 << x) | (1 << w)), best - 1)
            if r < best:
                best = r
                if best <= bound:
                    break
        if best < ub:
            exact[U] = best
            return best
        lower[U] = max(lower.get(U, 0), ub)
        return ub

    full = (1 << g.n) - 1
    start = _greedy_maximal(masks, full)
    return solve(full, start + 1)
