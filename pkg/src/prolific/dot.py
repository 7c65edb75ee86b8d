"""Graphviz DOT export for small graphs (figure reproduction)."""

from __future__ import annotations

from .graph import Graph

DOT_MAX_VERTICES = 100


def write_dot(g: Graph, name: str = "G", labels: dict[int, str] | None = None) -> str:
    """Undirected DOT text, vertices and edges in index order."""
    if g.n > DOT_MAX_VERTICES:
        raise ValueError(f"DOT export is limited to {DOT_MAX_VERTICES} vertices (got {g.n})")
    safe = "".join(ch if ch.isalnum() or ch == "_" else "_" for ch in name) or "G"
    lines = [f"graph {safe} {{"]
    for v in range(g.n):
        if labels and v in labels:
            lines.append(f'  {v} [label="{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
