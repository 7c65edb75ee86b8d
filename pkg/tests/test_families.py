from __future__ import annotations

import pytest

from prolific.enumeration import connected_graphs
from prolific.errors import InvalidDescriptor
from prolific.families import (
    CP,
    ChartrandHarary,
    ClawSubdivision,
    Complete,
    Cycle,
    CycleWithChords,
    DoubleStarSubdivision,
    Path,
    Star,
    TwoCyclesPath,
    classify_special,
    describe,
    generate,
    is_cycle_with_chord,
    is_prolific,
    is_theta,
    is_two_cycles_path,
    parse_descriptor,
)
from prolific.graph import build_graph, degree_sequence, is_connected, is_isomorphic
from prolific.parameters import ParamKind, compute


def test_claw_type_a_example():
    g = generate(ClawSubdivision(2, 1, 1))
    assert (g.n, g.e) == (5, 4)
    assert classify_special(g).claw_type == "A"


def test_claw_types():
    assert ClawSubdivision(3, 1, 1).type == "A"
    assert ClawSubdivision(3, 2, 1).type == "B"
    assert ClawSubdivision(2, 2, 2).type == "C"


def test_cp_example():
    g = generate(CP(3, 2))
    assert (g.n, g.e) == (5, 5)
    assert sorted(g.degrees) == [1, 2, 2, 2, 3]


@pytest.mark.parametrize("f", ["claw:1,1,1", "cp:3,0", "cp:2,3", "ch:3,2,3", "ch:0,1,1", "star:0", "dstar:0", "chords:6,0-3,0-2"])
def test_invalid_descriptors(f):
    with pytest.raises(InvalidDescriptor):
        parse_descriptor(f)


def test_unknown_family():
    with pytest.raises(InvalidDescriptor):
        parse_descriptor("wheel:5")


@pytest.mark.parametrize("text", ["claw:3,1,1", "cp:3,2", "ch:2,2,3", "dstar:2", "dstar:1,2,1,1,1", "chords:8,0-4,2-6", "twocycles:4,3,2", "star:4", "complete:5", "path:4", "cycle:6", "petersen"])
def test_descriptor_round_trip(text):
    f = parse_descriptor(text)
    assert describe(f) == text
    assert parse_descriptor(describe(f)) == f


def test_claw_leg_order_is_normalised():
    assert parse_descriptor("claw:1,3,1") == ClawSubdivision(3, 1, 1)


def test_prolific_examples():
    assert not is_prolific(generate(Star(3)))
    assert not is_prolific(generate(Cycle(7)))
    assert not is_prolific(generate(Path(5)))
    assert is_prolific(generate(Complete(4)))
    assert is_prolific(generate(Star(4)))
    assert not is_prolific(build_graph(4, [(0, 1), (2, 3)]))


def test_prolific_count_on_four_vertices():
    assert sum(is_prolific(g) for g in connected_graphs(4)) == 3


def test_classify_examples():
    g = build_graph(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)])
    c = classify_special(g)
    assert c.tag == "claw" and c.descriptor == ClawSubdivision(3, 1, 1) and c.claw_type == "A"
    assert c.is_tree and c.is_prolific
    d = classify_special(generate(DoubleStarSubdivision(3)))
    assert d.tag == "double_star" and d.descriptor == DoubleStarSubdivision(3) and d.strict_double_star
    loose = classify_special(generate(DoubleStarSubdivision(1, (2, 1, 1, 1))))
    assert loose.tag == "double_star" and not loose.strict_double_star
    assert classify_special(generate(Complete(4))).tag == "none"
    cp = classify_special(generate(CP(4, 3)))
    assert cp.tag == "cp" and cp.descriptor == CP(4, 3) and cp.is_unicyclic


def _descriptors(max_n):
    for m1 in range(2, max_n):
        for m2 in range(1, m1 + 1):
            for m3 in range(1, m2 + 1):
                if m1 + m2 + m3 + 1 <= max_n:
                    yield ClawSubdivision(m1, m2, m3)
    for middle in range(1, max_n):
        for a in range(1, 4):
            for b in range(1, a + 1):
                legs = (a, b, 1, 1)
                if middle + 1 + sum(legs) <= max_n:
                    yield DoubleStarSubdivision(middle, legs)
    for k in range(3, max_n):
        for tail in range(1, max_n - k + 1):
            yield CP(k, tail)


def test_classification_round_trip_up_to_14():
    descs = list(_descriptors(14))
    assert len(descs) == 174
    for f in descs:
        g = generate(f)
        assert g.n <= 14 and is_connected(g)
        assert classify_special(g).descriptor == f, f


def test_classification_tags_are_exclusive_on_corpus():
    seen = {}
    for n in range(4, 8):
        for g in connected_graphs(n):
            c = classify_special(g)
            if c.descriptor is not None:
                assert c.descriptor not in seen
                seen[c.descriptor] = g
                assert is_isomorphic(generate(c.descriptor), g)


@pytest.mark.parametrize("kappa, lam, delta", [(k, l, d) for d in range(1, 6) for l in range(1, d + 1) for k in range(1, l + 1)])
def test_chartrand_harary_parameters(kappa, lam, delta):
    g = generate(ChartrandHarary(kappa, lam, delta))
    assert compute(g, ParamKind.VERTEX_CONN) == kappa
    assert compute(g, ParamKind.EDGE_CONN) == lam
    assert compute(g, ParamKind.MINDEG) == delta


def test_cycle_with_chords():
    g = generate(CycleWithChords(8, ((0, 4), (2, 6))))
    assert (g.n, g.e) == (8, 10)
    assert degree_sequence(g) == (3, 3, 3, 3, 2, 2, 2, 2)


def test_cycle_structures():
    tc = generate(TwoCyclesPath(4, 3, 2))
    assert (tc.n, tc.e) == (8, 9)
    assert is_two_cycles_path(tc) and not is_theta(tc)
    chord = generate(CycleWithChords(6, ((0, 3),)))
    assert is_theta(chord) and is_cycle_with_chord(chord)
    theta = build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 3)])
    assert is_theta(theta) and not is_cycle_with_chord(theta)
