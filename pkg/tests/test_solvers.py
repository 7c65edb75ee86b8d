from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given

import oracles
from conftest import graphs
from prolific.enumeration import connected_graphs
from prolific.errors import BudgetExceeded, Disconnected
from prolific.families import CP, ChartrandHarary, Cycle, Path, Petersen, Star, generate
from prolific.graph import build_graph
from prolific.linegraph import line_graph
from prolific.solvers._budget import Ticker
from prolific.solvers.cliques import clique_number, independence_number
from prolific.solvers.coloring import chromatic_index, chromatic_number, is_bipartite
from prolific.solvers.connectivity import edge_connectivity, vertex_connectivity
from prolific.solvers.cycles import circumference, has_cycle_at_least, is_hamiltonian, posa_hamiltonian_cycle
from prolific.solvers.domination import domination_number, independent_domination_number
from prolific.solvers.matching import has_near_perfect_matching, matching_number, maximum_matching, min_maximal_matching


def K(n):
    return build_graph(n, list(combinations(range(n), 2)))


K222 = line_graph(K(4))[0]


def test_circumference_examples():
    assert circumference(generate(Path(6))) == 0
    assert circumference(generate(Star(4))) == 0
    assert circumference(generate(CP(5, 3))) == 5
    pet = generate(Petersen())
    assert circumference(pet) == oracles.circumference(pet.n, pet.edges) == 9
    assert not is_hamiltonian(pet)
    assert has_cycle_at_least(pet, 9) and not has_cycle_at_least(pet, 10)


def test_matching_examples():
    assert matching_number(generate(Star(3))) == 1
    assert matching_number(generate(Cycle(7))) == 3
    m = maximum_matching(generate(Petersen()))
    assert sum(1 for v, w in enumerate(m) if w > v) == 5


def test_min_maximal_matching_examples():
    assert min_maximal_matching(generate(Path(4))) == 1
    c6 = generate(Cycle(6))
    assert min_maximal_matching(c6) == oracles.min_maximal_matching(6, c6.edges) == 2
    assert min_maximal_matching(K(4)) == oracles.min_maximal_matching(4, K(4).edges) == 2


def test_colouring_examples():
    assert chromatic_number(generate(CP(3, 3))) == 3
    assert chromatic_number(K(4)) == 4
    assert chromatic_number(generate(Cycle(5))) == 3
    assert chromatic_index(K(4)) == 3
    assert chromatic_index(generate(Star(4))) == 4
    assert chromatic_index(K222) == 4
    assert chromatic_index(generate(Petersen())) == 4
    for n in range(3, 9):
        assert chromatic_index(K(n)) == (n - 1 if n % 2 == 0 else n)


def test_clique_and_independence_examples():
    assert clique_number(K222) == oracles.clique_number(6, K222.edges) == 3
    assert clique_number(generate(Path(5))) == 2
    assert independence_number(generate(Cycle(7))) == 3
    assert independence_number(generate(Star(4))) == 4


def test_domination_examples():
    assert domination_number(generate(Star(4))) == 1
    assert domination_number(generate(Cycle(7))) == oracles.domination_number(7, generate(Cycle(7)).edges) == 3
    assert domination_number(generate(Path(6))) == oracles.domination_number(6, generate(Path(6)).edges) == 2
    assert independent_domination_number(generate(Star(4))) == 1


def test_connectivity_examples():
    assert edge_connectivity(K(4)) == vertex_connectivity(K(4)) == 3
    assert edge_connectivity(generate(CP(3, 2))) == 1
    c6_chord = build_graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])
    assert edge_connectivity(c6_chord) == oracles.edge_connectivity(6, c6_chord.edges) == 2
    ch = generate(ChartrandHarary(2, 2, 3))
    assert vertex_connectivity(ch) == 2
    assert vertex_connectivity(generate(Cycle(5))) == 2
    for n in range(2, 8):
        assert vertex_connectivity(K(n)) == n - 1
    with pytest.raises(Disconnected):
        edge_connectivity(build_graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(Disconnected):
        vertex_connectivity(build_graph(4, [(0, 1), (2, 3)]))


def test_near_perfect_matching():
    assert not has_near_perfect_matching(generate(Star(4)))
    assert has_near_perfect_matching(generate(Cycle(6)))


@given(graphs(max_n=7))
def test_solvers_match_oracles(g):
    n, E = g.n, g.edges
    assert chromatic_number(g) == oracles.chromatic_number(n, E)
    assert clique_number(g) == oracles.clique_number(n, E)
    assert independence_number(g) == oracles.independence_number(n, E)
    assert domination_number(g) == oracles.domination_number(n, E)
    assert independent_domination_number(g) == oracles.independent_domination_number(n, E)
    assert matching_number(g) == oracles.matching_number(n, E)
    assert circumference(g) == oracles.circumference(n, E)
    if E:
        assert chromatic_index(g) == oracles.chromatic_index(n, E)
        assert min_maximal_matching(g) == oracles.min_maximal_matching(n, E)


@given(graphs(min_n=2, max_n=7, connected=True))
def test_connectivity_matches_oracles(g):
    assert edge_connectivity(g) == oracles.edge_connectivity(g.n, g.edges)
    assert vertex_connectivity(g) == oracles.vertex_connectivity(g.n, g.edges)


@given(graphs(max_n=8))
def test_chromatic_index_via_line_graph(g):
    if g.e:
        assert chromatic_index(g) == chromatic_number(line_graph(g)[0])


def test_larger_iterate_connectivity():
    L2 = line_graph(line_graph(K(6))[0])[0]
    assert (L2.n, min(L2.degrees)) == (60, 14)
    assert vertex_connectivity(L2) == edge_connectivity(L2) == 14


def test_posa_finds_cycles_on_dense_iterates():
    L2 = line_graph(line_graph(K(5))[0])[0]
    cycle = posa_hamiltonian_cycle(L2)
    assert cycle is not None and sorted(cycle) == list(range(L2.n))
    assert all(L2.has_edge(cycle[i], cycle[(i + 1) % L2.n]) for i in range(L2.n))


def test_bipartite():
    assert is_bipartite(generate(Cycle(6)))
    assert not is_bipartite(generate(Cycle(5)))


def test_node_budget_aborts():
    g = generate(Petersen())
    with pytest.raises(BudgetExceeded) as info:
        circumference(g, Ticker(node_cap=5))
    assert info.value.resource == "nodes"
    with pytest.raises(BudgetExceeded):
        chromatic_number(line_graph(K(7))[0], Ticker(node_cap=3))


def test_deterministic_results_over_corpus_sample():
    gs = connected_graphs(7)[::50]
    first = [(chromatic_number(g), domination_number(g), min_maximal_matching(g)) for g in gs]
    again = [(chromatic_number(g), domination_number(g), min_maximal_matching(g)) for g in gs]
    assert first == again
