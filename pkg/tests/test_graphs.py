import networkx as nx
import pytest

from EdgeIdealSolvers.graph_io.enumeration import enumerate_graphs
from EdgeIdealSolvers.graphs.graph import Graph, build_named, delete_vertices, induced_subgraph
from EdgeIdealSolvers.graphs.invariants import classify, induced_matching_number, is_chordal, is_unmixed, \
    matching_number, minimal_vertex_covers, ordered_matching_number, simplicial_vertices
from EdgeIdealSolvers.utilities.exceptions import CapabilityError, ParameterError
from oracles import brute_force_covers, has_long_induced_cycle, permutation_ordered_matching_number

ORSYNOEQ = Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2)))


def small_graphs(max_n):
    for n in range(1, max_n + 1):
        yield from enumerate_graphs(n)


def test_path():
    g = build_named('path', [4])
    assert g.n == 4
    assert g.edges == ((0, 1), (1, 2), (2, 3))


def test_star_triangle():
    g = build_named('star_triangle', [2])
    assert g.n == 5 and g.num_edges == 6
    assert g.degree(0) == 4


def test_complete_bipartite():
    g = build_named('complete_bipartite', [3, 5])
    assert g.n == 8 and g.num_edges == 15


def test_edges_are_canonical():
    assert Graph(3, ((2, 1), (1, 0))) == Graph(3, ((0, 1), (1, 2)))


@pytest.mark.parametrize('family, params', [
    ('path', [0]),
    ('cycle', [2]),
    ('complete_bipartite', [3]),
    ('star_triangle', [0]),
    ('hexagon', [6]),
])
def test_bad_family_parameters(family, params):
    with pytest.raises(ParameterError):
        build_named(family, params)


@pytest.mark.parametrize('edges', [((0, 0),), ((0, 3),), ((0, 1), (1, 0))])
def test_invalid_edges(edges):
    with pytest.raises(ParameterError):
        Graph(3, edges)


def test_too_many_vertices():
    with pytest.raises(CapabilityError):
        Graph(64)


def test_delete_vertices():
    g, index_map = delete_vertices(build_named('path', [4]), [0])
    assert g == build_named('path', [3])
    assert index_map == (1, 2, 3)

    p4 = build_named('path', [4])
    assert delete_vertices(p4, [])[0] == p4

    g, _ = delete_vertices(build_named('star_triangle', [1]), [0])
    assert g == Graph(2, ((0, 1),))

    with pytest.raises(ParameterError):
        delete_vertices(p4, [4])


def test_induced_subgraph_relabels():
    g, index_map = induced_subgraph(build_named('cycle', [5]), [0, 2, 3])
    assert index_map == (0, 2, 3)
    assert g.edges == ((1, 2),)


def test_networkx_roundtrip():
    g = build_named('star_triangle', [2])
    assert Graph.from_networkx(g.to_networkx()) == g


def test_minimal_vertex_covers_examples():
    assert set(minimal_vertex_covers(build_named('path', [3]))) == {frozenset({1}), frozenset({0, 2})}
    assert set(minimal_vertex_covers(build_named('complete', [3]))) == \
        {frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})}
    assert minimal_vertex_covers(build_named('path', [4])) == \
        [frozenset({0, 2}), frozenset({1, 2}), frozenset({1, 3})]
    assert minimal_vertex_covers(Graph(0)) == [frozenset()]


def test_matching_numbers_examples():
    p4 = build_named('path', [4])
    assert (matching_number(p4), induced_matching_number(p4), ordered_matching_number(p4)) == (2, 1, 2)
    assert induced_matching_number(build_named('star_triangle', [2])) == 2
    star = build_named('star', [3])
    assert (matching_number(star), induced_matching_number(star), ordered_matching_number(star)) == (1, 1, 1)


def test_classify_examples():
    inv = classify(build_named('star_triangle', [2]))
    assert inv.is_cameron_walker and inv.is_chordal
    assert inv.height == 3

    inv = classify(build_named('path', [4]))
    assert not inv.is_cameron_walker and inv.is_chordal

    inv = classify(build_named('cycle', [5]))
    assert not inv.is_chordal and not inv.is_bipartite
    assert inv.height == 3


def test_edgeless_conventions():
    inv = classify(Graph(3))
    assert (inv.match, inv.ind_match, inv.ord_match, inv.height) == (0, 0, 0, 0)
    assert inv.is_chordal and inv.is_bipartite and inv.is_cameron_walker
    assert not inv.is_connected


def test_simplicial_vertices_examples():
    assert simplicial_vertices(build_named('path', [4])) == [0, 3]
    assert simplicial_vertices(build_named('complete', [3])) == [0, 1, 2]
    assert simplicial_vertices(build_named('cycle', [4])) == []


def test_unmixed():
    assert is_unmixed(build_named('complete', [3]))
    assert is_unmixed(build_named('cycle', [5]))
    assert not is_unmixed(build_named('path', [3]))
    assert not is_unmixed(ORSYNOEQ)


def test_invariants_on_all_graphs_up_to_6():
    for g in small_graphs(6):
        inv = classify(g)
        assert inv.ind_match <= inv.ord_match <= inv.match
        assert inv.height <= g.n
        covers = minimal_vertex_covers(g)
        assert inv.height == min(len(c) for c in covers)
        assert inv.is_chordal == (not has_long_induced_cycle(g)) == nx.is_chordal(g.to_networkx())


def test_covers_match_brute_force():
    for g in small_graphs(5):
        covers = minimal_vertex_covers(g)
        assert set(covers) == set(brute_force_covers(g))
        for c in covers:
            assert all(i in c or j in c for i, j in g.edges)
            for v in c:
                assert any(not ({i, j} & (c - {v})) for i, j in g.edges)


def test_ordered_matching_against_permutations():
    for g in small_graphs(5):
        assert ordered_matching_number(g) == permutation_ordered_matching_number(g), g.edges


def test_chordality_peeling_matches_networkx_on_named():
    for family, params in [('cycle', [4]), ('cycle', [6]), ('star_triangle', [3]), ('complete', [5])]:
        g = build_named(family, params)
        assert is_chordal(g) == nx.is_chordal(g.to_networkx())
