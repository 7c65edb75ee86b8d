"""Domination and independent domination by memoized branch and bound."""

from __future__ import annotations

from ..graph import Graph
from ._budget import Ticker


def _min_cover(closed: list[int], n: int, independent: bool, ticker: Ticker) -> int:
    """Fewest closed neighbourhoods covering every vertex.

    With ``independent`` the chosen vertices must also be pairwise
    nonadjacent.  Then the candidates that stay available are exactly the
    undominated vertices, so the undominated set alone is the search state.
    """
    exact: dict[int, int] = {}
    lower: dict[int, int] = {}
    everyone = (1 << n) - 1

    def bound(U: int) -> int:
        cand = U if independent else everyone
        best = 1
        m = cand
        while m:
            low = m & -m
            c = (closed[low.bit_length() - 1] & U).bit_count()
            if c > best:
                best = c
            m ^= low
        total = U.bit_count()
        return -(-total // best)

    def greedy(U: int) -> int:
        size = 0
        while U:
            cand = U if independent else everyone
            pick, cov = -1, -1
            m = cand
            while m:
                low = m & -m
                v = low.bit_length() - 1
                c = (closed[v] & U).bit_count()
                if c > cov:
                    pick, cov = v, c
                m ^= low
            U &= ~closed[pick]
            size += 1
        return size

    def solve(U: int, ub: int) -> int:
        if not U:
            return 0
        if U in exact:
            return exact[U]
        lb = max(bound(U), lower.get(U, 0))
        if lb >= ub:
            return lb
        ticker.tick()
        # branch on the undominated vertex with the fewest possible dominators
        target, options = -1, None
        m = U
        while m:
            low = m & -m
            v = low.bit_length() - 1
            opts = closed[v] & U if independent else closed[v]
            c = opts.bit_count()
            if options is None or c < options.bit_count():
                target, options = v, opts
                if c == 1:
                    break
            m ^= low
        cand = []
        m = options
        while m:
            low = m & -m
            w = low.bit_length() - 1
            cand.append((-(closed[w] & U).bit_count(), w))
            m ^= low
        cand.sort()
        best = ub
        for _, w in cand:
            r = 1 + solve(U & ~closed[w], best - 1)
            if r < best:
                best = r
                if best <= lb:
                    break
        if best < ub:
            exact[U] = best
            return best
        lower[U] = max(lower.get(U, 0), ub)
        return ub

    return solve(everyone, greedy(everyone) + 1)


def _closed(g: Graph) -> list[int]:
    return [m | (1 << v) for v, m in enumerate(g.masks)]


def domination_number(g: Graph, ticker: Ticker | None = None) -> int:
    if g.n == 0:
        return 0
    return _min_cover(_closed(g), g.n, False, ticker or Ticker(label="domination"))


def independent_domination_number(g: Graph, ticker: Ticker | None = None) -> int:
    """Minimum size of a maximal independent set."""
    if g.n == 0:
        return 0
    return _min_cover(_closed(g), g.n, True, ticker or Ticker(label="independent domination"))
