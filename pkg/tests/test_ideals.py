import numpy as np
import pytest

from EdgeIdealSolvers.graph_io.enumeration import enumerate_graphs
from EdgeIdealSolvers.graphs.graph import Graph, build_named
from EdgeIdealSolvers.graphs.invariants import matching_number, minimal_vertex_covers
from EdgeIdealSolvers.ideals.monomials import Monomial, SqfMonomial
from EdgeIdealSolvers.ideals.powers import edge_ideal, sqf_power, sqf_symbolic, symbolic_member
from EdgeIdealSolvers.ideals.sqf_ideal import SqfIdeal, colon, contains, generator_degrees, height, ideal_sum, \
    intersect, minimal_primes, minimalize, restrict, variables_ideal
from EdgeIdealSolvers.utilities.exceptions import CapabilityError, DomainError, ParameterError
from oracles import brute_force_sqf_power_members, brute_force_symbolic, squarefree_members

ORSYNOEQ = Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2)))


def mono(n, *variables):
    return SqfMonomial.from_support(n, variables)


def ideal(n, *supports):
    return SqfIdeal.from_supports(n, supports)


def test_monomial_rendering():
    assert str(mono(3, 0, 2)) == "x0x2"
    assert str(mono(3)) == "1"
    assert str(Monomial((2, 1, 0))) == "x0^2x1"
    assert mono(3, 0).divides(mono(3, 0, 1))
    assert not mono(3, 2).divides(mono(3, 0, 1))


def test_monomial_errors():
    with pytest.raises(ParameterError):
        mono(3, 3)
    with pytest.raises(ParameterError):
        Monomial((1, -1))
    with pytest.raises(CapabilityError):
        SqfMonomial(64)


def test_edge_ideal_examples():
    assert str(edge_ideal(build_named('path', [3]))) == "(x0x1, x1x2)"
    assert str(edge_ideal(ORSYNOEQ)) == "(x0x1, x0x2, x0x3, x1x2)"
    assert edge_ideal(Graph(3)).is_zero


def test_minimalize_examples():
    assert minimalize([mono(3, 0, 1), mono(3, 0, 1, 2)], 3) == ideal(3, (0, 1))
    assert minimalize([mono(2, 0), mono(2, 1), mono(2, 0, 1)], 2) == ideal(2, (0,), (1,))
    assert minimalize([], 3).is_zero
    with pytest.raises(ParameterError):
        minimalize([mono(2, 0)], 3)


def test_zero_and_unit_are_distinct():
    assert SqfIdeal.zero(3) != SqfIdeal.unit(3)
    assert str(SqfIdeal.zero(3)) == "0"
    assert str(SqfIdeal.unit(3)) == "(1)"


def test_sum_intersect_colon():
    assert intersect(ideal(2, (0,)), ideal(2, (1,))) == ideal(2, (0, 1))
    primes = [ideal(3, (0,), (1,)), ideal(3, (0,), (2,)), ideal(3, (1,), (2,))]
    assert intersect(intersect(primes[0], primes[1]), primes[2]) == edge_ideal(build_named('complete', [3]))

    J = ideal(3, (0, 1, 2))
    assert colon(J, mono(3, 0, 1)) == ideal(3, (2,))
    assert colon(J, mono(3)) == J
    assert ideal_sum(ideal(3, (0, 1)), ideal(3, (0,))) == ideal(3, (0,))


def test_colon_of_zero_ideal():
    with pytest.raises(DomainError):
        colon(SqfIdeal.zero(3), mono(3, 0))


def test_ambient_mismatch():
    with pytest.raises(ParameterError):
        ideal_sum(ideal(2, (0,)), ideal(3, (0,)))
    with pytest.raises(ParameterError):
        colon(ideal(3, (0,)), mono(2, 0))


def test_restrict_contains_lift():
    J = edge_ideal(build_named('path', [3]))
    assert restrict(J, [0]) == ideal(3, (1, 2))
    assert contains(J, ideal(3, (0, 1, 2)))
    assert not contains(ideal(3, (0, 1, 2)), J)
    assert contains(variables_ideal(3, [1]), J)
    lifted = ideal(2, (0, 1)).lift(4, (1, 3))
    assert lifted == ideal(4, (1, 3))


def test_minimal_primes_examples():
    p3 = build_named('path', [3])
    assert minimal_primes(edge_ideal(p3)) == [frozenset({1}), frozenset({0, 2})]
    assert set(minimal_primes(edge_ideal(p3))) == set(minimal_vertex_covers(p3))
    assert set(minimal_primes(ideal(3, (0, 1, 2)))) == {frozenset({0}), frozenset({1}), frozenset({2})}
    assert sorted(len(p) for p in minimal_primes(edge_ideal(build_named('complete', [3])))) == [2, 2, 2]
    for bad in (SqfIdeal.zero(3), SqfIdeal.unit(3)):
        with pytest.raises(DomainError):
            minimal_primes(bad)


def test_minimal_primes_are_vertex_covers():
    for n in range(2, 6):
        for g in enumerate_graphs(n):
            if g.num_edges:
                assert set(minimal_primes(edge_ideal(g))) == set(minimal_vertex_covers(g))


def test_sqf_power_examples():
    assert sqf_power(ORSYNOEQ, 2) == ideal(4, (0, 1, 2, 3))
    assert sqf_power(build_named('path', [4]), 2) == ideal(4, (0, 1, 2, 3))
    assert sqf_power(build_named('complete', [3]), 2).is_zero
    assert sqf_power(ORSYNOEQ, 1) == edge_ideal(ORSYNOEQ)
    with pytest.raises(ParameterError):
        sqf_power(ORSYNOEQ, 0)


def test_sqf_power_vanishes_beyond_matching_number():
    for g in enumerate_graphs(5):
        if g.num_edges:
            m = matching_number(g)
            assert not sqf_power(g, m).is_zero
            assert sqf_power(g, m + 1).is_zero


def test_sqf_symbolic_examples():
    assert sqf_symbolic(edge_ideal(build_named('complete', [3])), 2) == ideal(3, (0, 1, 2))
    assert sqf_symbolic(edge_ideal(ORSYNOEQ), 2) == ideal(4, (0, 1, 2))
    assert sqf_symbolic(edge_ideal(build_named('cycle', [5])), 3) == ideal(5, (0, 1, 2, 3, 4))
    assert sqf_symbolic(edge_ideal(build_named('path', [4])), 3).is_zero
    assert sqf_symbolic(edge_ideal(build_named('path', [4])), 2) == ideal(4, (0, 1, 2, 3))
    J = edge_ideal(ORSYNOEQ)
    assert sqf_symbolic(J, 1) == J


def test_sqf_symbolic_errors():
    with pytest.raises(ParameterError):
        sqf_symbolic(edge_ideal(ORSYNOEQ), 0)
    with pytest.raises(DomainError):
        sqf_symbolic(SqfIdeal.zero(3), 1)
    with pytest.raises(DomainError):
        sqf_symbolic(SqfIdeal.unit(3), 1)


def test_symbolic_member_examples():
    K3 = edge_ideal(build_named('complete', [3]))
    assert not symbolic_member(Monomial((2, 1, 0)), K3, 2)
    assert symbolic_member(Monomial((1, 1, 1)), K3, 2)
    assert symbolic_member(Monomial((0, 0, 0)), K3, 0)
    assert symbolic_member(Monomial((2, 2, 0)), K3, 2)


def test_height_and_generator_degrees():
    startri = edge_ideal(build_named('star_triangle', [2]))
    assert height(startri) == 3
    assert 5 in generator_degrees(sqf_symbolic(startri, 3)).degrees
    assert height(edge_ideal(build_named('cycle', [5]))) == 3

    kbip = build_named('complete_bipartite', [3, 5])
    J3 = sqf_symbolic(edge_ideal(kbip), 3)
    assert J3 == sqf_power(kbip, 3)
    stats = generator_degrees(J3)
    assert (stats.min_degree, stats.max_degree) == (6, 6)
    assert stats.degrees[6] == 10

    with pytest.raises(DomainError):
        generator_degrees(SqfIdeal.zero(2))


@pytest.mark.parametrize('t', [1, 2, 3])
def test_star_triangle_top_generator(t):
    J = edge_ideal(build_named('star_triangle', [t]))
    assert height(J) == t + 1
    assert 2 * t + 1 in generator_degrees(sqf_symbolic(J, t + 1)).degrees


def test_sqf_symbolic_against_membership_oracle():
    rs = np.random.RandomState(1234)
    checked = 0
    while checked < 200:
        n = int(rs.randint(2, 8))
        pairs = [(i, j) for j in range(n) for i in range(j)]
        edges = tuple(p for p in pairs if rs.rand() < 0.5)
        if not edges:
            continue
        J = edge_ideal(Graph(n, edges))
        for s in range(1, height(J) + 1):
            assert sqf_symbolic(J, s).masks == brute_force_symbolic(J, s), (n, edges, s)
        checked += 1


def test_construction_canonicalizes():
    assert SqfIdeal(3, (3, 1)) == SqfIdeal(3, (1,))
    assert SqfIdeal(3, (6, 1, 6)).masks == (1, 6)
    assert SqfIdeal(3, (5, 0)) == SqfIdeal.unit(3)
    assert hash(SqfIdeal(3, (2, 1))) == hash(ideal(3, (0,), (1,)))
    with pytest.raises(ParameterError):
        SqfIdeal(2, (4,))


def random_ideal(rs, n):
    masks = [int(rs.randint(1, 1 << n)) for _ in range(int(rs.randint(1, 5)))]
    return SqfIdeal(n, masks)


def test_arithmetic_against_membership_sets():
    rs = np.random.RandomState(4321)
    for _ in range(150):
        n = int(rs.randint(1, 9))
        J, K = random_ideal(rs, n), random_ideal(rs, n)
        members_J, members_K = squarefree_members(J), squarefree_members(K)
        assert squarefree_members(ideal_sum(J, K)) == members_J | members_K
        assert squarefree_members(intersect(J, K)) == members_J & members_K

        m = int(rs.randint(0, 1 << n))
        assert squarefree_members(colon(J, SqfMonomial(n, m))) == frozenset(
            u for u in range(1 << n) if u | m in members_J)

        U = int(rs.randint(0, 1 << n))
        assert squarefree_members(restrict(J, [k for k in range(n) if U >> k & 1])) == frozenset(
            u for u in range(1 << n) if u & ~U in members_J)


def test_iterated_colon():
    rs = np.random.RandomState(99)
    for _ in range(150):
        n = int(rs.randint(1, 9))
        J = random_ideal(rs, n)
        u, v = SqfMonomial(n, int(rs.randint(0, 1 << n))), SqfMonomial(n, int(rs.randint(0, 1 << n)))
        assert colon(colon(J, u), v) == colon(J, u.lcm(v))


@pytest.mark.parametrize('n', [1, 2, 3, 4, 5])
def test_sqf_power_against_matchings_in_subsets(n):
    for g in enumerate_graphs(n):
        for s in range(1, matching_number(g) + 2):
            assert squarefree_members(sqf_power(g, s)) == brute_force_sqf_power_members(g, s), (g.edges, s)


@pytest.mark.parametrize('n', [2, 3, 4, 5, 6])
def test_symbolic_power_nesting(n):
    for g in enumerate_graphs(n):
        if not g.edges:
            continue
        I = edge_ideal(g)
        assert sqf_symbolic(I, 1) == I
        h = height(I)
        for s in range(1, h + 1):
            current = sqf_symbolic(I, s)
            assert contains(current, sqf_symbolic(I, s + 1)), (g.edges, s)
            assert contains(current, sqf_power(g, s)), (g.edges, s)
