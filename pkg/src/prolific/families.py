"""Named graph families: generation, descriptor strings, recognition, prolificity."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Union

from .errors import InvalidDescriptor
from .graph import Graph, build_graph, components, is_connected


@dataclass(frozen=True)
class ClawSubdivision:
    """K_{1,3} with legs of m1 >= m2 >= m3 >= 1 edges (m1 >= 2)."""

    m1: int
    m2: int
    m3: int

    @property
    def type(self) -> str:
        ones = [self.m1, self.m2, self.m3].count(1)
        return {2: "A", 1: "B", 0: "C"}[ones]

    @property
    def n(self) -> int:
        return self.m1 + self.m2 + self.m3 + 1


@dataclass(frozen=True)
class DoubleStarSubdivision:
    """Two degree-3 vertices joined by a path of ``middle`` edges, each carrying two legs.

    ``legs`` lists the four leg lengths (two per end); all ones gives the
    strict family, where only the middle edge of S_{2,2} is subdivided.
    """

    middle: int
    legs: tuple[int, int, int, int] = (1, 1, 1, 1)

    def __post_init__(self):
        legs = tuple(self.legs)
        if len(legs) == 4:
            a = tuple(sorted(legs[:2], reverse=True))
            b = tuple(sorted(legs[2:], reverse=True))
            legs = max(a, b) + min(a, b)
        object.__setattr__(self, "legs", legs)

    @property
    def strict(self) -> bool:
        return self.legs == (1, 1, 1, 1)

    @property
    def n(self) -> int:
        return self.middle + 1 + sum(self.legs)


@dataclass(frozen=True)
class CP:
    """Cycle C_k with a pendant path of ``tail`` edges."""

    k: int
    tail: int


@dataclass(frozen=True)
class CycleWithChords:
    n: int
    chords: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class TwoCyclesPath:
    """Disjoint cycles C_p1 and C_p2 joined by a path with ``path_edges`` edges."""

    p1: int
    p2: int
    path_edges: int


@dataclass(frozen=True)
class Star:
    leaves: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class ChartrandHarary:
    """A graph with prescribed connectivity kappa, edge connectivity lam, minimum degree delta."""

    kappa: int
    lam: int
    delta: int


@dataclass(frozen=True)
class Petersen:
    pass


FamilyDescriptor = Union[
    ClawSubdivision,
    DoubleStarSubdivision,
    CP,
    CycleWithChords,
    TwoCyclesPath,
    Star,
    Complete,
    Path,
    Cycle,
    ChartrandHarary,
    Petersen,
]


def _path_edges(start: int, length: int, first_new: int) -> tuple[list[tuple[int, int]], int]:
    """Edges of a path of ``length`` edges leaving ``start`` through new vertices."""
    edges = []
    prev = start
    nxt = first_new
    for _ in range(length):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    return edges, nxt


def validate(f: FamilyDescriptor) -> None:
    def need(cond: bool, msg: str) -> None:
        if not cond:
            raise InvalidDescriptor(f"{describe(f)}: {msg}")

    if isinstance(f, ClawSubdivision):
        need(f.m1 >= f.m2 >= f.m3 >= 1, "need m1 >= m2 >= m3 >= 1")
        need(f.m1 >= 2, "m1 = 1 is K_{1,3} itself, which is not a proper subdivision")
    elif isinstance(f, DoubleStarSubdivision):
        need(f.middle >= 1, "middle length must be at least 1")
        need(len(f.legs) == 4 and all(x >= 1 for x in f.legs), "four legs of length >= 1 required")
    elif isinstance(f, CP):
        need(f.k >= 3, "cycle length must be at least 3")
        need(f.tail >= 1, "tail must have at least one edge (CP(k, 0) is a cycle)")
    elif isinstance(f, CycleWithChords):
        need(f.n >= 4, "need n >= 4")
        used: set[int] = set()
        for a, b in f.chords:
            need(0 <= a < f.n and 0 <= b < f.n and a != b, f"chord ({a}, {b}) out of range")
            need((a - b) % f.n not in (1, f.n - 1), f"({a}, {b}) is a cycle edge")
            need(a not in used and b not in used, "chords must be vertex-disjoint")
            used.update((a, b))
    elif isinstance(f, TwoCyclesPath):
        need(f.p1 >= f.p2 >= 3, "need p1 >= p2 >= 3")
        need(f.path_edges >= 1, "path must have at least one edge")
    elif isinstance(f, Star):
        need(f.leaves >= 1, "need at least one leaf")
    elif isinstance(f, (Complete, Path)):
        need(f.n >= 1, "need n >= 1")
    elif isinstance(f, Cycle):
        need(f.n >= 3, "need n >= 3")
    elif isinstance(f, ChartrandHarary):
        need(1 <= f.kappa <= f.lam <= f.delta, "need 1 <= kappa <= lambda <= delta")


def generate(f: FamilyDescriptor) -> Graph:
    """The graph described by ``f`` (vertex 0 is the centre/first cycle vertex where relevant)."""
    validate(f)
    if isinstance(f, ClawSubdivision):
        edges: list[tuple[int, int]] = []
        nxt = 1
        for m in (f.m1, f.m2, f.m3):
            e, nxt = _path_edges(0, m, nxt)
            edges += e
        return build_graph(nxt, edges)
    if isinstance(f, DoubleStarSubdivision):
        edges, nxt = _path_edges(0, f.middle, 1)
        other = nxt - 1
        for end, lengths in ((0, f.legs[:2]), (other, f.legs[2:])):
            for m in lengths:
                e, nxt = _path_edges(end, m, nxt)
                edges += e
        return build_graph(nxt, edges)
    if isinstance(f, CP):
        edges = [(i, (i + 1) % f.k) for i in range(f.k)]
        e, nxt = _path_edges(0, f.tail, f.k)
        return build_graph(nxt, edges + e)
    if isinstance(f, CycleWithChords):
        edges = [(i, (i + 1) % f.n) for i in range(f.n)] + list(f.chords)
        return build_graph(f.n, edges)
    if isinstance(f, TwoCyclesPath):
        edges = [(i, (i + 1) % f.p1) for i in range(f.p1)]
        e, nxt = _path_edges(0, f.path_edges, f.p1)
        edges += e
        b0 = nxt - 1
        ring = [b0] + list(range(nxt, nxt + f.p2 - 1))
        edges += [(ring[i], ring[(i + 1) % f.p2]) for i in range(f.p2)]
        return build_graph(nxt + f.p2 - 1, edges)
    if isinstance(f, Star):
        return build_graph(f.leaves + 1, [(0, i) for i in range(1, f.leaves + 1)])
    if isinstance(f, Complete):
        return build_graph(f.n, [(i, j) for i in range(f.n) for j in range(i + 1, f.n)])
    if isinstance(f, Path):
        return build_graph(f.n, [(i, i + 1) for i in range(f.n - 1)])
    if isinstance(f, Cycle):
        return build_graph(f.n, [(i, (i + 1) % f.n) for i in range(f.n)])
    if isinstance(f, ChartrandHarary):
        return _chartrand_harary(f.kappa, f.lam, f.delta)
    if isinstance(f, Petersen):
        outer = [(i, (i + 1) % 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        return build_graph(10, outer + inner + spokes)
    raise InvalidDescriptor(f"unsupported descriptor {f!r}")


def _chartrand_harary(kappa: int, lam: int, delta: int) -> Graph:
    # Copies A = 0..delta and B = delta+1..2delta+1 of K_{delta+1}.  The lam
    # crossing edges a_(j mod kappa) -> b_j leave A through only kappa vertices,
    # so those vertices form a kappa-cut while the crossing edges form a lam-cut.
    size = delta + 1
    edges = []
    for base in (0, size):
        edges += [(base + i, base + j) for i in range(size) for j in range(i + 1, size)]
    for j in range(lam):
        edges.append((j % kappa, size + j))
    return build_graph(2 * size, edges)


_NAMES = {
    "claw": ClawSubdivision,
    "dstar": DoubleStarSubdivision,
    "cp": CP,
    "chords": CycleWithChords,
    "twocycles": TwoCyclesPath,
    "star": Star,
    "complete": Complete,
    "path": Path,
    "cycle": Cycle,
    "ch": ChartrandHarary,
    "petersen": Petersen,
}


def parse_descriptor(text: str) -> FamilyDescriptor:
    """Parse ``family:args``, e.g. ``claw:3,1,1``, ``cp:3,2``, ``ch:2,2,3``, ``chords:8,0-4,2-6``."""
    name, _, args = text.strip().partition(":")
    name = name.lower()
    if name not in _NAMES:
        raise InvalidDescriptor(f"unknown family {name!r}; known: {', '.join(sorted(_NAMES))}")
    parts = [p for p in args.split(",") if p.strip()] if args else []
    try:
        if name == "chords":
            n = int(parts[0])
            chords = []
            for p in parts[1:]:
                a, b = p.split("-")
                chords.append((int(a), int(b)))
            f: FamilyDescriptor = CycleWithChords(n, tuple(chords))
        elif name == "claw":
            m = sorted((int(p) for p in parts), reverse=True)
            if len(m) != 3:
                raise ValueError
            f = ClawSubdivision(*m)
        elif name == "dstar":
            vals = [int(p) for p in parts]
            if len(vals) == 1:
                f = DoubleStarSubdivision(vals[0])
            elif len(vals) == 5:
                f = DoubleStarSubdivision(vals[0], tuple(vals[1:]))
            else:
                raise ValueError
        elif name == "petersen":
            if parts:
                raise ValueError
            f = Petersen()
        else:
            f = _NAMES[name](*(int(p) for p in parts))
    except (ValueError, TypeError, IndexError):
        raise InvalidDescriptor(f"cannot parse descriptor {text!r}") from None
    validate(f)
    return f


def describe(f: FamilyDescriptor) -> str:
    """Inverse of parse_descriptor."""
    if isinstance(f, ClawSubdivision):
        return f"claw:{f.m1},{f.m2},{f.m3}"
    if isinstance(f, DoubleStarSubdivision):
        return f"dstar:{f.middle}" if f.strict else "dstar:" + ",".join(map(str, (f.middle, *f.legs)))
    if isinstance(f, CP):
        return f"cp:{f.k},{f.tail}"
    if isinstance(f, CycleWithChords):
        return "chords:" + ",".join([str(f.n)] + [f"{a}-{b}" for a, b in f.chords])
    if isinstance(f, TwoCyclesPath):
        return f"twocycles:{f.p1},{f.p2},{f.path_edges}"
    if isinstance(f, Star):
        return f"star:{f.leaves}"
    if isinstance(f, Complete):
        return f"complete:{f.n}"
    if isinstance(f, Path):
        return f"path:{f.n}"
    if isinstance(f, Cycle):
        return f"cycle:{f.n}"
    if isinstance(f, ChartrandHarary):
        return f"ch:{f.kappa},{f.lam},{f.delta}"
    if isinstance(f, Petersen):
        return "petersen"
    return repr(f)


# -- recognition ------------------------------------------------------------


def is_path_graph(g: Graph) -> bool:
    return g.n >= 1 and g.e == g.n - 1 and max(g.degrees, default=0) <= 2 and is_connected(g)


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees) and is_connected(g)


def is_claw(g: Graph) -> bool:
    return g.n == 4 and g.e == 3 and sorted(g.degrees) == [1, 1, 1, 3]


def is_prolific(g: Graph) -> bool:
    """Connected, at least one vertex, and neither a path, a cycle nor K_{1,3}."""
    if g.n == 0 or not is_connected(g):
        return False
    return not (is_path_graph(g) or is_cycle_graph(g) or is_claw(g))


def _leg_lengths(g: Graph, centre: int) -> list[tuple[int, int]]:
    """Walk each branch of a tree from ``centre`` through degree-2 vertices; (length, end vertex)."""
    out = []
    for start in g.adj[centre]:
        prev, cur, length = centre, start, 1
        while len(g.adj[cur]) == 2:
            a, b = g.adj[cur]
            prev, cur = cur, (b if a == prev else a)
            length += 1
        out.append((length, cur))
    return out


@dataclass(frozen=True)
class SpecialClassification:
    tag: str
    """One of ``"claw"``, ``"double_star"``, ``"cp"``, ``"none"``."""
    descriptor: FamilyDescriptor | None
    is_prolific: bool
    is_tree: bool
    is_unicyclic: bool
    strict_double_star: bool = False
    """Double-star subdivision in which only the middle edge is subdivided."""

    @property
    def claw_type(self) -> str | None:
        return self.descriptor.type if isinstance(self.descriptor, ClawSubdivision) else None


def classify_special(g: Graph) -> SpecialClassification:
    """Recognise claw subdivisions, double-star subdivisions and CP(k, t) from degree structure."""
    connected = g.n >= 1 and is_connected(g)
    tree = connected and g.e == g.n - 1
    unicyclic = connected and g.e == g.n
    prolific = is_prolific(g)
    deg = g.degrees
    counts = {d: deg.count(d) for d in set(deg)}
    others = g.n - counts.get(1, 0) - counts.get(2, 0) - counts.get(3, 0)

    if tree and others == 0 and counts.get(3, 0) == 1 and counts.get(1, 0) == 3:
        centre = deg.index(3)
        legs = sorted((length for length, _ in _leg_lengths(g, centre)), reverse=True)
        if legs[0] >= 2:
            return SpecialClassification("claw", ClawSubdivision(*legs), prolific, tree, unicyclic)
    if tree and others == 0 and counts.get(3, 0) == 2 and counts.get(1, 0) == 4:
        u, v = [i for i, d in enumerate(deg) if d == 3]
        branches_u = _leg_lengths(g, u)
        branches_v = _leg_lengths(g, v)
        middle = next(length for length, end in branches_u if end == v)
        legs_u = sorted((length for length, end in branches_u if end != v), reverse=True)
        legs_v = sorted((length for length, end in branches_v if end != u), reverse=True)
        desc = DoubleStarSubdivision(middle, (*legs_u, *legs_v))
        return SpecialClassification("double_star", desc, prolific, tree, unicyclic, strict_double_star=desc.strict)
    if unicyclic and others == 0 and counts.get(3, 0) == 1 and counts.get(1, 0) == 1:
        tail_len = _leg_lengths(g, deg.index(3))
        tail = next(length for length, end in tail_len if deg[end] == 1)
        return SpecialClassification("cp", CP(g.n - tail, tail), prolific, tree, unicyclic)
    return SpecialClassification("none", None, prolific, tree, unicyclic)


def is_two_cycles_path(g: Graph) -> bool:
    """Two vertex-disjoint cycles joined by a path (degrees: two 3s, rest 2, e = n + 1, a bridge between)."""
    deg = g.degrees
    if not is_connected(g) or g.e != g.n + 1 or sorted(deg)[-2:] != [3, 3] or any(d not in (2, 3) for d in deg):
        return False
    u, v = [i for i, d in enumerate(deg) if d == 3]
    # u and v lie on disjoint cycles iff some u-v branch is a bridge path.
    for length, end in _leg_lengths(g, u):
        if end == u:
            return True
    return False


def is_theta(g: Graph) -> bool:
    """Three internally disjoint paths between two degree-3 vertices."""
    deg = g.degrees
    if not is_connected(g) or g.e != g.n + 1 or sorted(deg)[-2:] != [3, 3] or any(d not in (2, 3) for d in deg):
        return False
    return not is_two_cycles_path(g)


def is_cycle_with_chord(g: Graph) -> bool:
    """A theta graph in which one of the three paths is a single edge."""
    if not is_theta(g):
        return False
    u, v = [i for i, d in enumerate(g.degrees) if d == 3]
    return g.has_edge(u, v)


def component_count(g: Graph) -> int:
    return len(components(g))
