"""
Edge ideals and the squarefree parts of their ordinary and symbolic powers.

For a squarefree ideal J with minimal primes P_1..P_r, a monomial lies in the symbolic power J^(s) iff its degree in
the variables of every P_k is at least s. Restricted to squarefree monomials this is the monotone family
{u : |supp(u) & P_k| >= s for all k}, whose minimal elements generate J^{s}.
"""
from itertools import combinations

from EdgeIdealSolvers.graphs.graph import Graph
from EdgeIdealSolvers.graphs.invariants import all_matchings
from EdgeIdealSolvers.ideals.monomials import Monomial
from EdgeIdealSolvers.ideals.sqf_ideal import SqfIdeal
from EdgeIdealSolvers.utilities.bitsets import bits, mask_of, popcount
from EdgeIdealSolvers.utilities.exceptions import DomainError, ParameterError


def edge_ideal(g: Graph) -> SqfIdeal:
    return SqfIdeal(g.n, tuple((1 << i) | (1 << j) for i, j in g.edges))


def sqf_power(g: Graph, s: int) -> SqfIdeal:
    """I(G)^[s]: generated by the products e_1...e_s over all s-matchings. Zero iff s > match(G)."""
    if s < 1:
        raise ParameterError(f"sqf_power needs s >= 1, got s={s}")
    products = []
    for m in all_matchings(g):
        if len(m) == s:
            products.append(mask_of(v for k in m for v in g.edges[k]))
    return SqfIdeal(g.n, tuple(products))


def _in_symbolic(u: int, primes, s: int) -> bool:
    return all(popcount(u & p) >= s for p in primes)


def sqf_symbolic(J: SqfIdeal, s: int) -> SqfIdeal:
    """
    J^{s}, the squarefree part of the s-th symbolic power.

    Walks the supports inside the union of the minimal primes by increasing cardinality and keeps the members of the
    family that stop being members as soon as any single variable is dropped. Variables outside every minimal prime
    never occur in a minimal generator.
    """
    if s < 1:
        raise ParameterError(f"sqf_symbolic needs s >= 1, got s={s}")
    J.require_proper_nonzero("sqf_symbolic")
    primes = J.minimal_prime_masks
    if s > min(popcount(p) for p in primes):
        return SqfIdeal.zero(J.n)

    universe = 0
    for p in primes:
        universe |= p
    variables = bits(universe)
    gens = []
    for size in range(s, len(variables) + 1):
        for support in combinations(variables, size):
            u = mask_of(support)
            if not _in_symbolic(u, primes, s):
                continue
            if all(not _in_symbolic(u & ~(1 << v), primes, s) for v in support):
                gens.append(u)
    return SqfIdeal(J.n, tuple(gens))


def symbolic_member(m: Monomial, J: SqfIdeal, s: int) -> bool:
    if s <= 0:
        return True
    if m.n != J.n:
        raise ParameterError(f"Ambient mismatch: monomial in {m.n} variables, ideal in {J.n}")
    if J.is_zero or J.is_unit:
        raise DomainError(f"symbolic_member needs a proper nonzero ideal, got {J}")
    return all(m.degree_in(p) >= s for p in J.minimal_prime_masks)
