from itertools import combinations

import pytest

from EdgeIdealSolvers.graph_io.enumeration import enumerate_graphs
from EdgeIdealSolvers.graphs.graph import Graph, build_named
from EdgeIdealSolvers.graphs.invariants import induced_matching_number, matching_number
from EdgeIdealSolvers.homology.field_rank import FieldSpec
from EdgeIdealSolvers.ideals.powers import edge_ideal, sqf_power, sqf_symbolic
from EdgeIdealSolvers.ideals.sqf_ideal import SqfIdeal, height
from EdgeIdealSolvers.regularity.betti_table import betti_table, regularity
from EdgeIdealSolvers.utilities.exceptions import DomainError
from oracles import lcm_lattice_betti

ORSYNOEQ = Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2)))


def symbolic(family, params, s):
    return sqf_symbolic(edge_ideal(build_named(family, params)), s)


def test_principal_quadric():
    table = betti_table(SqfIdeal.from_supports(2, [(0, 1)]))
    assert table.entries == {(0, 0): 1, (1, 2): 1}
    assert table.reg_ideal == 2
    assert table.projective_dimension == 1
    assert table.ideal_betti(0, 2) == 1


def test_triangle_edge_ideal():
    table = betti_table(edge_ideal(build_named('complete', [3])))
    assert table.entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert table.reg_ideal == 2
    assert table.ideal_entries == {(0, 2): 3, (1, 3): 2}


def test_to_frame():
    frame = betti_table(edge_ideal(build_named('complete', [3]))).to_frame()
    assert list(frame.columns) == [0, 1, 2]
    assert frame.loc[0, 0] == 1
    assert frame.loc[1, 1] == 3 and frame.loc[1, 2] == 2
    assert list(frame.loc['total']) == [1, 3, 2]


def test_zero_and_unit_refused():
    for J in (SqfIdeal.zero(3), SqfIdeal.unit(3)):
        with pytest.raises(DomainError):
            betti_table(J)


def test_path_and_triangle_second_power():
    J = symbolic('path', [4], 2)
    assert J == SqfIdeal.from_supports(4, [(0, 1, 2, 3)])
    assert regularity(J) == 4
    assert regularity(symbolic('complete', [3], 2)) == 3


def test_orsynoeq_powers_differ():
    assert regularity(sqf_power(ORSYNOEQ, 2)) == 4
    assert regularity(sqf_symbolic(edge_ideal(ORSYNOEQ), 2)) == 3


def test_pentagon():
    J3 = symbolic('cycle', [5], 3)
    assert len(J3.masks) == 1
    assert regularity(J3) == 5 == 5 // 2 + 3
    assert regularity(J3) < regularity(edge_ideal(build_named('cycle', [5]))) + 4


def test_complete_bipartite_3_5():
    kbip = build_named('complete_bipartite', [3, 5])
    reg_I = regularity(edge_ideal(kbip))
    assert reg_I == 2
    reg_3 = regularity(sqf_symbolic(edge_ideal(kbip), 3))
    assert reg_3 == 6 == reg_I + 4
    assert reg_3 < 8 // 2 + 3


@pytest.mark.parametrize('t', [1, 2])
def test_star_triangle_regularity(t):
    J = edge_ideal(build_named('star_triangle', [t]))
    for s in range(1, t + 2):
        assert regularity(sqf_symbolic(J, s)) == s + t


def test_pruning_does_not_change_the_table():
    # vertex 4 is isolated, so it is a cone point of the complex
    J = edge_ideal(Graph(5, ((0, 1), (1, 2), (2, 3))))
    assert betti_table(J).entries == betti_table(J, prune_free_vertices=False).entries


def test_parallel_scan_matches_serial():
    J = symbolic('cycle', [5], 2)
    assert betti_table(J, num_processes=2).entries == betti_table(J).entries


def test_characteristic_matters_for_projective_plane():
    # Stanley-Reisner ideal of the six vertex projective plane: the ten missing triangles
    faces = [(1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5), (2, 3, 4), (2, 3, 5), (2, 5, 6), (3, 4, 6),
             (4, 5, 6)]
    faces = {tuple(v - 1 for v in f) for f in faces}
    J = SqfIdeal.from_supports(6, [t for t in combinations(range(6), 3) if t not in faces])
    assert len(J.masks) == 10
    rational = betti_table(J, FieldSpec(0))
    binary = betti_table(J, FieldSpec(2))
    assert binary.betti(3, 6) - rational.betti(3, 6) == 1
    assert binary.betti(4, 6) - rational.betti(4, 6) == 1
    assert binary.reg_quotient == 3
    assert rational.reg_quotient == 2


def test_hochster_against_lcm_lattice():
    checked = 0
    for n in range(2, 6):
        for g in enumerate_graphs(n):
            if not g.num_edges:
                continue
            I = edge_ideal(g)
            candidates = [I] + [sqf_symbolic(I, s) for s in range(2, height(I) + 1)]
            for J in candidates:
                if 1 <= len(J.masks) <= 4:
                    assert betti_table(J).entries == lcm_lattice_betti(J), (g.edges, str(J))
                    checked += 1
    assert checked >= 25


def test_principal_ideals():
    for mask in range(1, 1 << 4):
        J = SqfIdeal(4, (mask,))
        assert regularity(J) == bin(mask).count("1")


def graphs_with_edges(n):
    return [g for g in enumerate_graphs(n) if g.num_edges]


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, g.edges + tuple((i + g.n, j + g.n) for i, j in h.edges))


def test_regularity_adds_over_disjoint_unions():
    for g in graphs_with_edges(2) + graphs_with_edges(3):
        for h in graphs_with_edges(3) + graphs_with_edges(4):
            union = betti_table(edge_ideal(disjoint_union(g, h)))
            parts = betti_table(edge_ideal(g)).reg_quotient + betti_table(edge_ideal(h)).reg_quotient
            assert union.reg_quotient == parts, (g.edges, h.edges)


@pytest.mark.parametrize('n', [2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_edge_ideal_regularity_between_matching_numbers(n):
    for g in graphs_with_edges(n):
        r = regularity(edge_ideal(g))
        assert induced_matching_number(g) + 1 <= r <= matching_number(g) + 1, g.edges
