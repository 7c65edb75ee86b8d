"""Exact solvers working on bitset adjacency."""
