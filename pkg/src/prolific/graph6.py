"""graph6 encoding and decoding (short and long size forms)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import MalformedGraph6
from .graph import Graph

HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def write_graph6(g: Graph) -> str:
    """Encode ``g`` without a trailing newline.

    Bits follow the upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
    """
    n = g.n
    masks = g.masks
    out = [_encode_size(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        mj = masks[j]
        for i in range(j):
            acc = (acc << 1) | ((mj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str, line: int | None = None) -> Graph:
    """Decode one graph6 string; an optional ``>>graph6<<`` header is accepted."""
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise MalformedGraph6("empty graph6 string", line)
    vals = []
    for ch in s:
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise MalformedGraph6(f"invalid character {ch!r}", line)
        vals.append(c)
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise MalformedGraph6("truncated long size field", line)
        n = 0
        for c in vals[2:8]:
            n = (n << 6) | c
        pos = 8
    else:
        if len(vals) < 4:
            raise MalformedGraph6("truncated size field", line)
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    total = n * (n - 1) // 2
    need = (total + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise MalformedGraph6(f"expected {need} data bytes for n={n}, found {len(body)}", line)
    masks = [0] * n
    k = 0
    i, j = 0, 1
    for c in body:
        for shift in range(5, -1, -1):
            if k >= total:
                if (c >> shift) & 1:
                    raise MalformedGraph6("nonzero padding bits", line)
                continue
            if (c >> shift) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph.from_masks(masks)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Yield graphs from graph6 lines, skipping blank lines; errors carry 1-based line numbers."""
    for number, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        yield parse_graph6(raw, line=number)


def write_graph6_stream(graphs: Iterable[Graph], out: TextIO) -> int:
    count = 0
    for g in graphs:
        out.write(write_graph6(g) + "\n")
        count += 1
    return count
