"""Longest cycles and Hamiltonicity by depth-first search within blocks."""

from __future__ import annotations

import random

from ..graph import Graph
from ._budget import Ticker


def biconnected_blocks(g: Graph) -> list[int]:
    """Vertex bitmasks of the blocks with at least three vertices (the only ones holding cycles)."""
    n = g.n
    adj = g.adj
    disc = [-1] * n
    low = [0] * n
    timer = 0
    blocks: list[int] = []
    edge_stack: list[tuple[int, int]] = []
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(adj[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    mask = 0
                    while True:
                        a, b = edge_stack.pop()
                        mask |= (1 << a) | (1 << b)
                        if (a, b) == (parent, u):
                            break
                    if mask.bit_count() >= 3:
                        blocks.append(mask)
    return blocks


def _reachable(masks, start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            lo = m & -m
            nxt |= masks[lo.bit_length() - 1]
            m ^= lo
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def _longest_in_block(masks, block: int, target: int | None, floor: int, ticker: Ticker) -> int:
    """Longest cycle inside ``block`` exceeding ``floor`` (else ``floor``).

    With ``target`` set, stops as soon as a cycle of that length or more is found.
    """
    best = floor
    remaining = block
    while remaining:
        if remaining.bit_count() <= best:
            break
        low = remaining & -remaining
        s = low.bit_length() - 1
        allowed = remaining
        sn = masks[s] & allowed
        if sn.bit_count() >= 2:
            # cycles through s whose other vertices all lie in ``allowed``
            stack = [(s, 1, low, masks[s] & allowed & ~low)]
            while stack:
                v, length, visited, cand = stack.pop()
                ticker.tick()
                if length >= 3 and (masks[v] >> s) & 1 and length > best:
                    best = length
                    if target is not None and best >= target:
                        return best
                    if best == remaining.bit_count():
                        break
                free = allowed & ~visited
                reach = _reachable(masks, v, free | (1 << v))
                if not (reach & sn & ~visited) and length > 1:
                    continue
                if length + (reach & ~(1 << v)).bit_count() <= best:
                    continue
                c = cand
                while c:
                    lo = c & -c
                    w = lo.bit_length() - 1
                    c ^= lo
                    stack.append((w, length + 1, visited | lo, masks[w] & allowed & ~visited & ~lo))
        remaining &= ~low
    return best


def circumference(g: Graph, ticker: Ticker | None = None) -> int:
    """Length of a longest cycle; 0 for forests."""
    ticker = ticker or Ticker(label="circumference")
    best = 0
    for block in sorted(biconnected_blocks(g), key=lambda b: -b.bit_count()):
        if block.bit_count() <= best:
            continue
        best = _longest_in_block(g.masks, block, None, best, ticker)
    return best


def has_cycle_at_least(g: Graph, length: int, ticker: Ticker | None = None) -> bool:
    """Whether some cycle has at least ``length`` vertices."""
    ticker = ticker or Ticker(label="long cycle")
    if length <= 3:
        return bool(biconnected_blocks(g))
    for block in sorted(biconnected_blocks(g), key=lambda b: -b.bit_count()):
        if block.bit_count() < length:
            continue
        if _longest_in_block(g.masks, block, length, length - 1, ticker) >= length:
            return True
    return False


def posa_hamiltonian_cycle(g: Graph, tries: int | None = None, seed: int = 0) -> list[int] | None:
    """Rotation-extension heuristic; a Hamiltonian cycle as a vertex list, or ``None``.

    A ``None`` answer proves nothing.  The fixed seed keeps runs reproducible.
    """
    n = g.n
    if n < 3:
        return None
    adj = g.adj
    masks = g.masks
    rng = random.Random(seed)
    limit = tries if tries is not None else 40 * n * n
    path = [min(range(n), key=lambda v: (len(adj[v]), v))]
    on = 1 << path[0]
    steps = 0
    while steps < limit:
        steps += 1
        end = path[-1]
        free = masks[end] & ~on
        if free:
            # extend to the free neighbour with fewest free neighbours
            best, bc = -1, None
            m = free
            while m:
                lo = m & -m
                w = lo.bit_length() - 1
                m ^= lo
                c = (masks[w] & ~on).bit_count()
                if bc is None or c < bc:
                    best, bc = w, c
            path.append(best)
            on |= 1 << best
            continue
        if len(path) == n and (masks[end] >> path[0]) & 1:
            return path
        pos = {v: i for i, v in enumerate(path)}
        pivots = [pos[w] for w in adj[end] if pos[w] < len(path) - 2]
        if not pivots:
            path.reverse()
            continue
        i = rng.choice(pivots)
        path[i + 1:] = reversed(path[i + 1:])
    return None


def is_hamiltonian(g: Graph, ticker: Ticker | None = None) -> bool:
    """Hamiltonicity: rotation heuristic first, then exhaustive search with dead-end checks."""
    n = g.n
    if n < 3:
        return False
    masks = g.masks
    if any(m.bit_count() < 2 for m in masks):
        return False
    if posa_hamiltonian_cycle(g) is not None:
        return True
    ticker = ticker or Ticker(label="hamiltonicity")
    full = (1 << n) - 1
    start = min(range(n), key=lambda v: (masks[v].bit_count(), v))

    def feasible(visited: int, end: int) -> bool:
        free = full & ~visited
        # every unvisited vertex needs two usable neighbours among free ∪ {end, start}
        ends = (1 << end) | (1 << start)
        m = free
        while m:
            lo = m & -m
            v = lo.bit_length() - 1
            if (masks[v] & (free | ends)).bit_count() < 2:
                return False
            m ^= lo
        return _reachable(masks, end, free | (1 << end)) | (1 << end) | visited == full

    def rec(v: int, visited: int, depth: int) -> bool:
        ticker.tick()
        if depth == n:
            return (masks[v] >> start) & 1 == 1
        cand = masks[v] & ~visited
        opts = []
        while cand:
            lo = cand & -cand
            w = lo.bit_length() - 1
            cand ^= lo
            opts.append(((masks[w] & ~visited).bit_count(), w))
        opts.sort()
        for _, w in opts:
            nv = visited | (1 << w)
            if depth + 1 < n and not feasible(nv, w):
                continue
            if rec(w, nv, depth + 1):
                return True
        return False

    return rec(start, 1 << start, 1)
