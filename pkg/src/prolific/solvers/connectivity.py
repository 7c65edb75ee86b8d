"""Edge and vertex connectivity by unit-capacity augmenting paths on bitsets."""

from __future__ import annotations

from ..errors import Disconnected
from ..graph import Graph, is_connected
from ._budget import Ticker


def _edge_flow(masks, s: int, t: int, cap: int, ticker: Ticker) -> int:
    """Number of edge-disjoint s-t paths, stopping once ``cap`` is reached.

    ``sent[u]`` holds the v with one unit of net flow u→v; the residual
    arcs out of u are ``masks[u] & ~sent[u]``.
    """
    n = len(masks)
    sent = [0] * n
    flow = 0
    tbit = 1 << t
    while flow < cap:
        ticker.tick()
        parent = [-1] * n
        seen = 1 << s
        queue = [s]
        found = False
        qi = 0
        while qi < len(queue) and not found:
            u = queue[qi]
            qi += 1
            new = masks[u] & ~sent[u] & ~seen
            if not new:
                continue
            seen |= new
            while new:
                low = new & -new
                w = low.bit_length() - 1
                new ^= low
                parent[w] = u
                queue.append(w)
            if seen & tbit:
                found = True
        if not found:
            break
        v = t
        while v != s:
            u = parent[v]
            if (sent[v] >> u) & 1:
                sent[v] &= ~(1 << u)
            else:
                sent[u] |= 1 << v
            v = u
        flow += 1
    return flow


def edge_connectivity(g: Graph, ticker: Ticker | None = None) -> int:
    """λ: minimum over t of the s-t edge flow, s a vertex of minimum degree."""
    if not is_connected(g):
        raise Disconnected("edge connectivity requires a connected graph")
    if g.n <= 1:
        return 0
    ticker = ticker or Ticker(label="edge connectivity")
    degs = g.degrees
    s = min(range(g.n), key=lambda v: (degs[v], v))
    best = degs[s]
    for t in range(g.n):
        if t == s or best == 0:
            continue
        best = min(best, _edge_flow(g.masks, s, t, best, ticker))
        if best == 1:
            break
    return best


def _vertex_flow(masks, s: int, t: int, cap: int, ticker: Ticker) -> int:
    """Internally vertex-disjoint s-t paths (s, t nonadjacent), capped.

    Split graph: node v is "v in", node v+n is "v out"; arcs v_in -> v_out
    and u_out -> w_in for every edge.  Residual arcs are bitmasks.
    """
    n = len(masks)
    N = 2 * n
    R = [0] * N
    for v in range(n):
        R[v] = 1 << (v + n)
        R[v + n] = masks[v]
    source, sink = s + n, t
    sink_bit = 1 << sink
    flow = 0
    while flow < cap:
        ticker.tick()
        parent = [-1] * N
        seen = (1 << source) | (1 << s)
        queue = [source]
        qi = 0
        found = False
        while qi < len(queue):
            a = queue[qi]
            qi += 1
            new = R[a] & ~seen
            if not new:
                continue
            seen |= new
            while new:
                low = new & -new
                b = low.bit_length() - 1
                new ^= low
                parent[b] = a
                queue.append(b)
            if seen & sink_bit:
                found = True
                break
        if not found:
            break
        b = sink
        while b != source:
            a = parent[b]
            R[a] &= ~(1 << b)
            R[b] |= 1 << a
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph, ticker: Ticker | None = None) -> int:
    """κ with κ(K_n) = n−1.

    Esfahanian–Hakimi: for a minimum-degree vertex x, κ is the minimum of
    κ(x, y) over y not adjacent to x and κ(a, b) over nonadjacent pairs of
    neighbours of x.
    """
    if not is_connected(g):
        raise Disconnected("vertex connectivity requires a connected graph")
    n = g.n
    if n <= 1:
        return 0
    masks = g.masks
    if g.e == n * (n - 1) // 2:
        return n - 1
    ticker = ticker or Ticker(label="vertex connectivity")
    degs = g.degrees
    x = min(range(n), key=lambda v: (degs[v], v))
    best = degs[x]
    for y in range(n):
        if best == 0:
            break
        if y != x and not (masks[x] >> y) & 1:
            best = min(best, _vertex_flow(masks, x, y, best, ticker))
    nb = g.adj[x]
    for i, a in enumerate(nb):
        for b in nb[i + 1:]:
            if best <= 1:
                return best
            if not (masks[a] >> b) & 1:
                best = min(best, _vertex_flow(masks, a, b, best, ticker))
    return best
