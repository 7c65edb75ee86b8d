"""Exhaustive enumeration of connected graphs up to isomorphism."""

from __future__ import annotations

from typing import Callable, Iterator

from .errors import CapExceeded
from .graph import Graph, canonical_certificate
from .graph6 import parse_graph6, read_graph6_lines, write_graph6, write_graph6_stream

__all__ = [
    "MAX_N",
    "enumerate_connected",
    "connected_graphs",
    "prolific_graphs",
    "parse_graph6",
    "write_graph6",
    "read_graph6_lines",
    "write_graph6_stream",
]

MAX_N = 10

_cache: dict[tuple[int, int | None], tuple[Graph, ...]] = {}


def _extend(prev: tuple[Graph, ...], n: int, max_excess: int | None) -> tuple[Graph, ...]:
    # Every connected graph on n >= 2 vertices has a non-cut vertex, so it
    # arises from a connected graph on n-1 vertices by adding one vertex
    # joined to a nonempty subset.  Duplicates are removed by certificate.
    seen: dict[tuple[int, ...], Graph] = {}
    new_bit = 1 << (n - 1)
    for g in prev:
        base = list(g.masks) + [0]
        room = None if max_excess is None else n + max_excess - g.e
        if room is not None and room < 1:
            continue
        for subset in range(1, 1 << (n - 1)):
            if room is not None and subset.bit_count() > room:
                continue
            masks = base[:]
            masks[n - 1] = subset
            s = subset
            while s:
                low = s & -s
                masks[low.bit_length() - 1] |= new_bit
                s ^= low
            h = Graph.from_masks(masks)
            cert = canonical_certificate(h)
            if cert not in seen:
                seen[cert] = Graph.from_masks(cert)
    return tuple(seen[c] for c in sorted(seen))


def connected_graphs(n: int, max_excess: int | None = None) -> tuple[Graph, ...]:
    """All connected graphs on ``n`` vertices, one canonical representative per class.

    ``max_excess`` keeps only graphs with ``e <= n + max_excess`` (``-1``
    gives the trees).  Deleting a non-cut vertex of degree d >= 1 changes
    e - n by 1 - d <= 0, so the bound is hereditary and the restricted
    construction is still exhaustive.  Results are cached in memory and
    ordered by canonical certificate.
    """
    if n < 1:
        raise CapExceeded(f"n must be at least 1, got {n}")
    if n > MAX_N:
        raise CapExceeded(f"enumeration is capped at n = {MAX_N}; feed larger corpora as graph6")
    key = (n, max_excess)
    if key in _cache:
        return _cache[key]
    if n == 1:
        result = (Graph.from_masks([0]),)
    else:
        result = _extend(connected_graphs(n - 1, max_excess), n, max_excess)
    _cache[key] = result
    return result


def enumerate_connected(n: int, max_excess: int | None = None) -> Iterator[Graph]:
    yield from connected_graphs(n, max_excess)


def prolific_graphs(n: int, max_excess: int | None = None) -> Iterator[Graph]:
    from .families import is_prolific

    for g in connected_graphs(n, max_excess):
        if is_prolific(g):
            yield g


def corpus(n_values, predicate: Callable[[Graph], bool] | None = None, max_excess: int | None = None) -> list[Graph]:
    out = []
    for n in n_values:
        for g in connected_graphs(n, max_excess):
            if predicate is None or predicate(g):
                out.append(g)
    return out


