"""Naive exponential oracles, written without reusing any package solver.

Each oracle works directly from an edge list on vertices 0..n-1 and is
meant for n <= 7 (or small line graphs).  They are slow on purpose: the
point is that they are obviously correct.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial, gcd


def adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _connected(vertices, adj):
    vertices = set(vertices)
    if not vertices:
        return True
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y in vertices and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == vertices


def is_connected(n, edges):
    return _connected(range(n), adjacency(n, edges))


def _independent(S, adj):
    return all(v not in adj[u] for u, v in combinations(S, 2))


def clique_number(n, edges):
    adj = adjacency(n, edges)
    for k in range(n, 0, -1):
        for S in combinations(range(n), k):
            if all(v in adj[u] for u, v in combinations(S, 2)):
                return k
    return 0


def independence_number(n, edges):
    adj = adjacency(n, edges)
    for k in range(n, 0, -1):
        for S in combinations(range(n), k):
            if _independent(S, adj):
                return k
    return 0


def chromatic_number(n, edges):
    """Fewest independent sets covering V, by DP over vertex subsets."""
    if n == 0:
        return 0
    adj = adjacency(n, edges)
    full = (1 << n) - 1
    indep = [True] * (1 << n)
    for S in range(1 << n):
        vs = [v for v in range(n) if S >> v & 1]
        indep[S] = _independent(vs, adj)
    best = [0] + [n + 1] * full
    for S in range(1, full + 1):
        low = S & -S
        sub = S
        while sub:
            if sub & low and indep[sub]:
                best[S] = min(best[S], best[S ^ sub] + 1)
            sub = (sub - 1) & S
    return best[full]


def chromatic_index(n, edges):
    """Smallest k admitting a proper edge colouring, by plain backtracking in edge order."""
    edges = list(edges)
    if not edges:
        return 0
    for k in range(1, len(edges) + 1):
        colour = [-1] * len(edges)

        def ok(i, c):
            u, v = edges[i]
            for j in range(i):
                if colour[j] == c and (u in edges[j] or v in edges[j]):
                    return False
            return True

        def rec(i, used):
            if i == len(edges):
                return True
            # colours are interchangeable: never open more than one new colour
            for c in range(min(k, used + 1)):
                if ok(i, c):
                    colour[i] = c
                    if rec(i + 1, max(used, c + 1)):
                        return True
            colour[i] = -1
            return False

        if rec(0, 0):
            return k
    raise AssertionError("unreachable")


def matchings(edges):
    """Every matching, as a tuple of edge indices."""
    edges = list(edges)
    out = []

    def rec(i, chosen, covered):
        if i == len(edges):
            out.append(tuple(chosen))
            return
        rec(i + 1, chosen, covered)
        u, v = edges[i]
        if u not in covered and v not in covered:
            rec(i + 1, chosen + [i], covered | {u, v})

    rec(0, [], frozenset())
    return out


def matching_number(n, edges):
    return max(len(m) for m in matchings(edges))


def min_maximal_matching(n, edges):
    edges = list(edges)
    best = None
    for m in matchings(edges):
        covered = {x for i in m for x in edges[i]}
        if all(u in covered or v in covered for u, v in edges):
            best = len(m) if best is None else min(best, len(m))
    return best


def _dominates(S, n, adj):
    dom = set(S)
    for v in S:
        dom |= adj[v]
    return len(dom) == n


def domination_number(n, edges):
    adj = adjacency(n, edges)
    for k in range(0, n + 1):
        for S in combinations(range(n), k):
            if _dominates(S, n, adj):
                return k


def independent_domination_number(n, edges):
    adj = adjacency(n, edges)
    for k in range(0, n + 1):
        for S in combinations(range(n), k):
            if _independent(S, adj) and _dominates(S, n, adj):
                return k


def vertex_connectivity(n, edges):
    """Smallest vertex set whose removal disconnects the graph (n - 1 for complete graphs)."""
    adj = adjacency(n, edges)
    for k in range(0, n - 1):
        for S in combinations(range(n), k):
            rest = [v for v in range(n) if v not in S]
            if not _connected(rest, adj):
                return k
    return n - 1


def edge_connectivity(n, edges):
    """Fewest edges crossing a bipartition of V (both sides nonempty)."""
    if n <= 1:
        return 0
    best = None
    for S in range(1, 1 << (n - 1)):
        cross = sum(1 for u, v in edges if (S >> u & 1) != (S >> v & 1))
        best = cross if best is None else min(best, cross)
    return best


def circumference(n, edges):
    """Longest cycle length (0 if acyclic), by trying every cyclic vertex order."""
    adj = adjacency(n, edges)
    best = 0
    for k in range(3, n + 1):
        for S in combinations(range(n), k):
            first, rest = S[0], S[1:]
            found = False
            for perm in permutations(rest):
                if perm[0] > perm[-1]:
                    continue
                order = (first,) + perm
                if all(order[(i + 1) % k] in adj[order[i]] for i in range(k)):
                    found = True
                    break
            if found:
                best = k
                break
    return best


def line_graph(n, edges):
    """Vertices are edge indices; adjacency is sharing an endpoint."""
    edges = list(edges)
    out = []
    for i, j in combinations(range(len(edges)), 2):
        if set(edges[i]) & set(edges[j]):
            out.append((i, j))
    return len(edges), out


# ---------------------------------------------------------------------------
# counting connected graphs


def brute_force_connected_count(n):
    """Isomorphism classes of connected labeled graphs, bucketed by the min over all relabelings."""
    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    classes = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if n > 1 and not is_connected(n, edges):
            continue
        key = min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges)) for p in perms)
        classes.add(key)
    return len(classes)


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def graph_count(n):
    """Unlabeled graphs on n vertices via Burnside over the induced action on pairs."""
    total = Fraction(0)
    for parts in _partitions(n):
        mult = Counter(parts)
        size = factorial(n)
        for k, m in mult.items():
            size //= k**m * factorial(m)
        orbits = sum(p // 2 for p in parts) + sum(gcd(a, b) for a, b in combinations(parts, 2))
        total += size * 2**orbits
    return int(total / factorial(n))


def connected_counts(top):
    """Connected unlabeled graph counts for n = 1..top by inverting the Euler transform."""
    b = [1] + [graph_count(n) for n in range(1, top + 1)]
    c = [0] * (top + 1)
    d = [0] * (top + 1)
    for n in range(1, top + 1):
        # n b_n = sum_{k=1..n} d_k b_{n-k}, with d_k = sum_{j | k} j c_j
        d[n] = n * b[n] - sum(d[k] * b[n - k] for k in range(1, n))
        c[n] = (d[n] - sum(j * c[j] for j in range(1, n) if n % j == 0)) // n
    return c[1:]
