"""Maximum clique by branch and bound with greedy colouring bounds."""

from __future__ import annotations

from ..graph import Graph
from ._budget import Ticker


def _relabel_by_degree(masks: list[int] | tuple[int, ...]) -> tuple[list[int], list[int]]:
    n = len(masks)
    order = sorted(range(n), key=lambda v: (-masks[v].bit_count(), v))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = [0] * n
    for v in range(n):
        m = masks[v]
        r = 0
        while m:
            low = m & -m
            r |= 1 << pos[low.bit_length() - 1]
            m ^= low
        out[pos[v]] = r
    return out, order


def max_clique_masks(masks, ticker: Ticker | None = None) -> list[int]:
    """A maximum clique (vertex list) of the graph given by adjacency bitmasks."""
    n = len(masks)
    if n == 0:
        return []
    ticker = ticker or Ticker(label="clique")
    rm, order = _relabel_by_degree(masks)
    best: list[int] = [0]
    best_size = 1

    def colour_sort(P: int) -> tuple[list[int], list[int]]:
        verts: list[int] = []
        cols: list[int] = []
        colour = 0
        uncoloured = P
        while uncoloured:
            colour += 1
            Q = uncoloured
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                Q &= ~rm[v] & ~low
                uncoloured ^= low
                verts.append(v)
                cols.append(colour)
        return verts, cols

    def expand(R: list[int], P: int) -> None:
        nonlocal best, best_size
        ticker.tick()
        verts, cols = colour_sort(P)
        for idx in range(len(verts) - 1, -1, -1):
            if len(R) + cols[idx] <= best_size:
                return
            v = verts[idx]
            R.append(v)
            NP = P & rm[v]
            if NP:
                expand(R, NP)
            elif len(R) > best_size:
                best, best_size = R[:], len(R)
            R.pop()
            P &= ~(1 << v)

    expand([], (1 << n) - 1)
    return sorted(order[v] for v in best)


def clique_number(g: Graph, ticker: Ticker | None = None) -> int:
    if g.n == 0:
        return 0
    return len(max_clique_masks(g.masks, ticker))


def independence_number(g: Graph, ticker: Ticker | None = None) -> int:
    if g.n == 0:
        return 0
    full = (1 << g.n) - 1
    comp = [full & ~m & ~(1 << v) for v, m in enumerate(g.masks)]
    return len(max_clique_masks(comp, ticker))
