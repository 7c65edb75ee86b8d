"""Immutable simple graphs, connectivity, canonical labeling and isomorphism."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicateEdge, EndpointOutOfRange, SelfLoop

Edge = tuple[int, int]


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``edges`` is the lexicographically sorted tuple of pairs ``(u, v)`` with
    ``u < v``; ``adj[u]`` is the sorted tuple of neighbours of ``u``.  Instances
    are immutable; bitset adjacency (``masks``) is derived lazily.
    """

    __slots__ = ("n", "edges", "adj", "_masks")

    def __init__(self, n: int, edges: tuple[Edge, ...], adj: tuple[tuple[int, ...], ...]):
        self.n = n
        self.edges = edges
        self.adj = adj
        self._masks: tuple[int, ...] | None = None

    @classmethod
    def _trusted(cls, n: int, edges: Sequence[Edge]) -> Graph:
        """Build from an already sorted, duplicate-free, loop-free edge list."""
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        for lst in nbrs:
            lst.sort()
        return cls(n, tuple(edges), tuple(tuple(lst) for lst in nbrs))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        n = len(masks)
        edges = []
        for u in range(n):
            m = masks[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    edges.append((u, v))
                m >>= 1
                v += 1
        g = cls._trusted(n, edges)
        g._masks = tuple(masks)
        return g

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def masks(self) -> tuple[int, ...]:
        if self._masks is None:
            out = []
            for nb in self.adj:
                m = 0
                for v in nb:
                    m |= 1 << v
                out.append(m)
            self._masks = tuple(out)
        return self._masks

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.e})"

    def __getstate__(self):
        return (self.n, self.edges)

    def __setstate__(self, state):
        n, edges = state
        g = Graph._trusted(n, edges)
        self.n, self.edges, self.adj, self._masks = g.n, g.edges, g.adj, None


def build_graph(n: int, edge_pairs: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edge_pairs`` and return the graph on ``n`` vertices.

    Raises SelfLoop, DuplicateEdge or EndpointOutOfRange; a pair given twice
    (in either orientation) is a DuplicateEdge, never silently merged.
    """
    if n < 0:
        raise EndpointOutOfRange(f"negative vertex count {n}")
    seen: set[Edge] = set()
    for pair in edge_pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise EndpointOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"edge {key} given more than once")
        seen.add(key)
    return Graph._trusted(n, sorted(seen))


def empty_graph(n: int) -> Graph:
    return Graph._trusted(n, [])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
    edges = []
    for u, v in g.edges:
        a, b = perm[u], perm[v]
        edges.append((a, b) if a < b else (b, a))
    edges.sort()
    return Graph._trusted(g.n, edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled in increasing order."""
    vs = sorted(set(vertices))
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph._trusted(len(vs), edges)


def remove_edge(g: Graph, edge: Edge) -> Graph:
    u, v = edge if edge[0] < edge[1] else (edge[1], edge[0])
    edges = [e for e in g.edges if e != (u, v)]
    if len(edges) == g.e:
        raise KeyError(edge)
    return Graph._trusted(g.n, edges)


def drop_isolated(g: Graph) -> Graph:
    keep = [v for v in range(g.n) if g.adj[v]]
    if len(keep) == g.n:
        return g
    return induced_subgraph(g, keep)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_masks([full & ~m & ~(1 << v) for v, m in enumerate(g.masks)])


def _reach(masks: Sequence[int], start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= masks[low.bit_length() - 1]
            m ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph) -> list[list[int]]:
    masks = g.masks
    remaining = (1 << g.n) - 1
    out = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = _reach(masks, start, remaining)
        out.append(bits(comp))
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    """True iff ``g`` has one component; graphs with ``n <= 1`` count as connected."""
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    return _reach(g.masks, 0, full) == full


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.e == g.n - 1 and is_connected(g)


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# -- canonical labeling -----------------------------------------------------


def _refine(masks: Sequence[int], cells: list[list[int]], splitters: Iterable[int]) -> list[list[int]]:
    """Refine an ordered partition to the coarsest equitable one below it.

    Every newly created cell is queued as a splitter, and parts are ordered
    by neighbour count, so the result depends only on the isomorphism class
    of (graph, ordered partition).
    """
    queue = deque(splitters)
    n_cells = len(cells)
    n = len(masks)
    while queue and n_cells < n:
        w = queue.popleft()
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((masks[v] & w).bit_count(), []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            for key in sorted(groups):
                part = groups[key]
                new_cells.append(part)
                queue.append(mask_of(part))
        cells = new_cells
        n_cells = len(cells)
    return cells


def _twin_generators(g: Graph) -> list[list[int]]:
    """Transpositions of (true or false) twins; each is an automorphism."""
    masks = g.masks
    n = g.n
    gens = []
    for u in range(n):
        for v in range(u + 1, n):
            bu, bv = 1 << u, 1 << v
            if masks[u] & ~bv == masks[v] & ~bu:
                perm = list(range(n))
                perm[u], perm[v] = v, u
                gens.append(perm)
                break
    return gens


_MAX_STORED_AUTS = 64


def _canonical_search(g: Graph) -> tuple[list[int], tuple[int, ...]]:
    masks = g.masks
    n = g.n
    if n == 0:
        return [], ()
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(len(g.adj[v]), []).append(v)
    cells = [by_deg[d] for d in sorted(by_deg)]
    cells = _refine(masks, cells, [mask_of(c) for c in cells])

    auts = _twin_generators(g)
    best_key: tuple | None = None
    best_order: list[int] = []

    def orbit_rep(v: int, path: list[int]) -> dict[int, int]:
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in auts:
            if all(gamma[p] == p for p in path):
                for x in range(n):
                    a, b = find(x), find(gamma[x])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return {x: find(x) for x in range(n)}

    def rec(cells: list[list[int]], path: list[int], inv_path: tuple) -> None:
        nonlocal best_key, best_order
        if best_key is not None and inv_path < best_key[0][: len(inv_path)]:
            return
        target = -1
        for i, c in enumerate(cells):
            if len(c) > 1:
                target = i
                break
        if target < 0:
            order = [c[0] for c in cells]
            pos = [0] * n
            for i, v in enumerate(order):
                pos[v] = i
            cert = []
            for v in order:
                m = masks[v]
                r = 0
                while m:
                    low = m & -m
                    r |= 1 << pos[low.bit_length() - 1]
                    m ^= low
                cert.append(r)
            key = (inv_path, tuple(cert))
            if best_key is None or key > best_key:
                best_key, best_order = key, order
            elif key == best_key and len(auts) < _MAX_STORED_AUTS:
                gamma = [0] * n
                for a, b in zip(best_order, order):
                    gamma[a] = b
                auts.append(gamma)
            return
        explored: list[int] = []
        for v in sorted(cells[target]):
            if explored:
                reps = orbit_rep(v, path)
                if any(reps[u] == reps[v] for u in explored):
                    continue
            explored.append(v)
            cell = cells[target]
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1 :]
            child = _refine(masks, child, [1 << v])
            rec(child, path + [v], inv_path + (tuple(len(c) for c in child),))

    rec(cells, [], ())
    assert best_key is not None
    return best_order, best_key[1]


@dataclass(frozen=True)
class CanonicalForm:
    """Edge list of ``g`` under its canonical relabeling.

    Equal forms iff isomorphic graphs.  ``key`` is the graph6 text of the
    canonically relabelled graph, stable across runs and platforms.
    """

    n: int
    edges: tuple[Edge, ...]

    def graph(self) -> Graph:
        return Graph._trusted(self.n, self.edges)

    @property
    def key(self) -> str:
        from .graph6 import write_graph6

        return write_graph6(self.graph())


def canonical_labeling(g: Graph) -> list[int]:
    """``perm`` with ``relabel(g, perm)`` canonical: perm[v] is v's new label."""
    order, _ = _canonical_search(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return perm


def canonical_certificate(g: Graph) -> tuple[int, ...]:
    """Cheap hashable isomorphism-class key: canonical adjacency bitmasks."""
    return _canonical_search(g)[1]


def canonical_graph(g: Graph) -> Graph:
    _, cert = _canonical_search(g)
    return Graph.from_masks(cert)


def canonical_form(g: Graph) -> CanonicalForm:
    c = canonical_graph(g)
    return CanonicalForm(c.n, c.edges)


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees, reverse=True))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.e != h.e or degree_sequence(g) != degree_sequence(h):
        return False
    return canonical_certificate(g) == canonical_certificate(h)
