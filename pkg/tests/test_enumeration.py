from __future__ import annotations

import pytest

import oracles
from prolific.enumeration import MAX_N, connected_graphs, corpus, enumerate_connected, prolific_graphs
from prolific.errors import CapExceeded
from prolific.families import is_prolific
from prolific.graph import canonical_certificate, is_connected

# Frozen from tests/oracles.py (Burnside count and inverse Euler transform).
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853, 11117]
TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]


def test_frozen_counts_match_oracles():
    assert oracles.connected_counts(8) == CONNECTED_COUNTS
    assert [oracles.brute_force_connected_count(n) for n in range(1, 6)] == CONNECTED_COUNTS[:5]


@pytest.mark.parametrize("n", range(1, 9))
def test_connected_counts(n):
    assert len(connected_graphs(n)) == CONNECTED_COUNTS[n - 1]


def test_tree_counts():
    assert [len(connected_graphs(n, -1)) for n in range(1, 11)] == TREE_COUNTS
    # labeled brute force for the small cases
    for n in range(2, 6):
        assert all(g.e == n - 1 for g in connected_graphs(n, -1))


def test_excess_filter_is_exact():
    for n in range(1, 8):
        full = connected_graphs(n)
        for k in (-1, 0, 1, 2):
            expected = {canonical_certificate(g) for g in full if g.e <= n + k}
            assert {canonical_certificate(g) for g in connected_graphs(n, k)} == expected


def test_emitted_graphs_are_connected_distinct_and_stable():
    for n in range(1, 8):
        gs = connected_graphs(n)
        assert all(is_connected(g) and g.n == n for g in gs)
        assert len({canonical_certificate(g) for g in gs}) == len(gs)
        assert list(enumerate_connected(n)) == list(gs)


def test_cap():
    with pytest.raises(CapExceeded):
        connected_graphs(0)
    with pytest.raises(CapExceeded):
        connected_graphs(MAX_N + 1)


def test_prolific_filter():
    assert len(list(prolific_graphs(4))) == 3
    for n in range(5, 9):
        # only the path and the cycle are removed once K_{1,3} is out of range
        assert len(list(prolific_graphs(n))) == CONNECTED_COUNTS[n - 1] - 2


def test_corpus_helper():
    gs = corpus(range(4, 6), is_prolific)
    assert len(gs) == 3 + 19
