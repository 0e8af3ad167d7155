"""
Catalog of executable checks. Each check evaluates one statement about edge ideals on one graph, over every
applicable instantiation (all valid s, all relevant vertices / edges), and returns one CheckResult per instantiation.

s ranges are always derived from the graph's invariants. A caller may pin a single s through params; it is evaluated
only if it lies in the valid range.
"""
import zlib
from functools import cached_property
from itertools import combinations
from typing import Callable, Dict, List, Optional

import numpy as np

from EdgeIdealSolvers.configuration import BETTI_MONO_EXHAUSTIVE_ORDER, BETTI_MONO_SAMPLES, DEFAULT_SEED
from EdgeIdealSolvers.graph_io.enumeration import MAX_CANONICAL_ORDER, canonical_form
from EdgeIdealSolvers.graph_io.graph6 import encode_graph6
from EdgeIdealSolvers.graphs.graph import Graph, delete_vertices, induced_subgraph
from EdgeIdealSolvers.graphs.invariants import InvariantReport, all_matchings, classify, is_unmixed, \
    maximum_independent_set_size, simplicial_vertices
from EdgeIdealSolvers.homology.field_rank import FieldSpec
from EdgeIdealSolvers.ideals.monomials import Monomial, SqfMonomial
from EdgeIdealSolvers.ideals.powers import edge_ideal, sqf_power, sqf_symbolic, symbolic_member
from EdgeIdealSolvers.ideals.sqf_ideal import SqfIdeal, colon, contains, ideal_sum, intersect, \
    variables_ideal
from EdgeIdealSolvers.regularity.betti_table import BettiTable, betti_table
from EdgeIdealSolvers.utilities.bitsets import bits, mask_of, popcount
from EdgeIdealSolvers.utilities.exceptions import ParameterError
from EdgeIdealSolvers.verification.check_result import FAIL, PASS, SKIPPED, CheckResult


def graph_symbolic(g: Graph, s: int) -> SqfIdeal:
    """I(G)^{s} with the conventions the identities need: S for s <= 0, the zero ideal for an edgeless graph."""
    if s <= 0:
        return SqfIdeal.unit(g.n)
    if g.num_edges == 0:
        return SqfIdeal.zero(g.n)
    return sqf_symbolic(edge_ideal(g), s)


def colon_or_zero(J: SqfIdeal, m: SqfMonomial) -> SqfIdeal:
    # (0 : m) = 0; colon() itself refuses the zero ideal
    return J if J.is_zero else colon(J, m)


def monomial(n: int, *variables: int) -> SqfMonomial:
    return SqfMonomial.from_support(n, variables)


class GraphContext:
    """
    Per-graph cache of invariants, ideals and Betti tables shared by all checks run on that graph.

    Graphs with at most MAX_CANONICAL_ORDER vertices are relabeled to their canonical form first, so isomorphic inputs
    get the same graph_id and the vertex indices in params and witnesses refer to that labeling. Larger graphs keep
    their own labeling.
    """

    def __init__(self, graph: Graph, field: Optional[FieldSpec] = None, seed: int = DEFAULT_SEED,
                 requested_s: Optional[int] = None):
        self.graph = canonical_form(graph) if graph.n <= MAX_CANONICAL_ORDER else graph
        self.field = FieldSpec(0) if field is None else field
        self.seed = seed
        self.requested_s = requested_s
        self._symbolic: Dict[int, SqfIdeal] = {}
        self._power: Dict[int, SqfIdeal] = {}
        self._tables: Dict[tuple, BettiTable] = {}

    @cached_property
    def graph_id(self) -> str:
        return encode_graph6(self.graph)

    @cached_property
    def invariants(self) -> InvariantReport:
        return classify(self.graph)

    @cached_property
    def ideal(self) -> SqfIdeal:
        return edge_ideal(self.graph)

    @property
    def n(self) -> int:
        return self.graph.n

    def symbolic(self, s: int) -> SqfIdeal:
        if s not in self._symbolic:
            self._symbolic[s] = graph_symbolic(self.graph, s)
        return self._symbolic[s]

    def power(self, s: int) -> SqfIdeal:
        if s not in self._power:
            self._power[s] = sqf_power(self.graph, s)
        return self._power[s]

    def table(self, J: SqfIdeal, field: Optional[FieldSpec] = None) -> BettiTable:
        field = self.field if field is None else field
        key = (J, field.characteristic)
        if key not in self._tables:
            self._tables[key] = betti_table(J, field)
        return self._tables[key]

    def reg(self, J: SqfIdeal) -> int:
        return self.table(J).reg_ideal

    def s_values(self, lo: int, hi: int) -> List[int]:
        if self.requested_s is not None:
            return [self.requested_s] if lo <= self.requested_s <= hi else []
        return list(range(lo, hi + 1))

    def rng(self) -> np.random.RandomState:
        # derived from the graph so results do not depend on corpus order or worker assignment
        return np.random.RandomState((self.seed + zlib.crc32(self.graph_id.encode())) % (2 ** 32))

    # result builders
    def passed(self, check_id: str, params: dict, lhs=None, rhs=None) -> CheckResult:
        return CheckResult(check_id, self.graph_id, params, PASS, _render(lhs), _render(rhs))

    def failed(self, check_id: str, params: dict, lhs, rhs, witness: dict) -> CheckResult:
        return CheckResult(check_id, self.graph_id, params, FAIL, _render(lhs), _render(rhs), witness)

    def skipped(self, check_id: str, reason: str, params: Optional[dict] = None) -> CheckResult:
        return CheckResult(check_id, self.graph_id, params or {}, SKIPPED, reason=reason)

    def compare(self, check_id: str, params: dict, lhs, rhs, holds: bool, **witness) -> CheckResult:
        if holds:
            return self.passed(check_id, params, lhs, rhs)
        witness = {'lhs': _render(lhs), 'rhs': _render(rhs), **witness}
        return self.failed(check_id, params, lhs, rhs, witness)

    def compare_ideals(self, check_id: str, params: dict, lhs: SqfIdeal, rhs: SqfIdeal) -> CheckResult:
        if lhs.is_zero and rhs.is_zero:
            return self.skipped(check_id, "both sides zero", params)
        only_lhs = [str(SqfMonomial(lhs.n, m)) for m in lhs.masks if m not in rhs.masks]
        only_rhs = [str(SqfMonomial(rhs.n, m)) for m in rhs.masks if m not in lhs.masks]
        return self.compare(check_id, params, lhs, rhs, lhs == rhs, only_in_lhs=only_lhs, only_in_rhs=only_rhs)

    def out_of_range(self, check_id: str, reason: str) -> List[CheckResult]:
        if self.requested_s is not None:
            reason = f"s={self.requested_s} outside valid range ({reason})"
        return [self.skipped(check_id, reason)]


def _render(value) -> Optional[str]:
    return None if value is None else str(value)


CheckFunction = Callable[[GraphContext], List[CheckResult]]
CHECKS: Dict[str, CheckFunction] = {}


def register(check_id: str):
    def decorator(fn: CheckFunction) -> CheckFunction:
        CHECKS[check_id] = fn
        return fn
    return decorator


def _no_edges(ctx: GraphContext, check_id: str) -> Optional[List[CheckResult]]:
    if ctx.graph.num_edges == 0:
        return [ctx.skipped(check_id, "graph has no edges")]
    return None


@register('chk-prop-zero')
def check_prop_zero(ctx: GraphContext) -> List[CheckResult]:
    """J^{s} != 0 iff s <= height; for unmixed J, J^{height} is principal."""
    cid = 'chk-prop-zero'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    h = ctx.invariants.height
    results = []
    for s in ctx.s_values(1, h + 1):
        J = ctx.symbolic(s)
        expected_nonzero = s <= h
        results.append(ctx.compare(cid, {'s': s, 'part': 'nonzero'}, 'nonzero' if not J.is_zero else 'zero',
                                   f"{'nonzero' if expected_nonzero else 'zero'} (height {h})",
                                   (not J.is_zero) == expected_nonzero, ideal=str(J)))
    if ctx.requested_s in (None, h):
        if is_unmixed(ctx.graph):
            J = ctx.symbolic(h)
            results.append(ctx.compare(cid, {'s': h, 'part': 'principal'}, len(J.masks), 1, len(J.masks) == 1,
                                       ideal=str(J)))
        else:
            results.append(ctx.skipped(cid, "not unmixed", {'s': h, 'part': 'principal'}))
    return results


@register('chk-del')
def check_del(ctx: GraphContext) -> List[CheckResult]:
    """I(G)^{s} + (x) = I(G \\ x)^{s} + (x) for every vertex x."""
    cid = 'chk-del'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    s_range = ctx.s_values(1, ctx.invariants.height)
    if not s_range:
        return ctx.out_of_range(cid, "s exceeds height")
    results = []
    for x in range(ctx.n):
        H, index_map = delete_vertices(ctx.graph, [x])
        x_ideal = variables_ideal(ctx.n, [x])
        for s in s_range:
            lhs = ideal_sum(ctx.symbolic(s), x_ideal)
            rhs = ideal_sum(graph_symbolic(H, s).lift(ctx.n, index_map), x_ideal)
            results.append(ctx.compare_ideals(cid, {'s': s, 'x': x}, lhs, rhs))
    return results


def _betti_mono_subsets(ctx: GraphContext) -> List[tuple]:
    candidates = []
    for k in range(2, ctx.n):
        for keep in combinations(range(ctx.n), k):
            keep_mask = mask_of(keep)
            if any(keep_mask >> i & 1 and keep_mask >> j & 1 for i, j in ctx.graph.edges):
                candidates.append(keep)
    if ctx.n <= BETTI_MONO_EXHAUSTIVE_ORDER or len(candidates) <= BETTI_MONO_SAMPLES:
        return candidates
    picked = ctx.rng().choice(len(candidates), BETTI_MONO_SAMPLES, replace=False)
    return [candidates[int(k)] for k in sorted(picked)]


@register('chk-betti-mono')
def check_betti_mono(ctx: GraphContext) -> List[CheckResult]:
    """beta_{i,j}(I(H)^{s}) <= beta_{i,j}(I(G)^{s}) for induced subgraphs H (all for small n, else sampled)."""
    cid = 'chk-betti-mono'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    results = []
    for keep in _betti_mono_subsets(ctx):
        H, _ = induced_subgraph(ctx.graph, keep)
        h_H = H.n - maximum_independent_set_size(H)
        for s in ctx.s_values(1, h_H):
            small = ctx.table(graph_symbolic(H, s)).ideal_entries
            large = ctx.table(ctx.symbolic(s)).ideal_entries
            violations = {f"{i},{j}": [b, large.get((i, j), 0)] for (i, j), b in small.items()
                          if b > large.get((i, j), 0)}
            results.append(ctx.compare(cid, {'s': s, 'subgraph': list(keep)}, sorted(small.items()),
                                       sorted(large.items()), not violations, violations=violations))
    if not results:
        return [ctx.skipped(cid, "no induced subgraph with a valid s")]
    return results


@register('chk-lower')
def check_lower(ctx: GraphContext) -> List[CheckResult]:
    """reg(I(G)^{s}) >= s + ind_match for 1 <= s <= ind_match."""
    cid = 'chk-lower'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    ind = ctx.invariants.ind_match
    s_range = ctx.s_values(1, ind)
    if not s_range:
        return ctx.out_of_range(cid, "s exceeds ind_match")
    results = []
    for s in s_range:
        r = ctx.reg(ctx.symbolic(s))
        results.append(ctx.compare(cid, {'s': s}, r, s + ind, r >= s + ind))
    return results


@register('chk-chordcolon')
def check_chordcolon(ctx: GraphContext) -> List[CheckResult]:
    """(I(G)^{s} : x_{N[x]}) = I(G \\ N[x])^{s-d+1} for simplicial x with |N[x]| = d."""
    cid = 'chk-chordcolon'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    s_range = ctx.s_values(1, ctx.invariants.height)
    if not s_range:
        return ctx.out_of_range(cid, "s exceeds height")
    results = []
    for x in simplicial_vertices(ctx.graph):
        if ctx.graph.degree(x) == 0:
            continue
        closed = bits(ctx.graph.closed_neighborhood_mask(x))
        d = len(closed)
        H, index_map = delete_vertices(ctx.graph, closed)
        for s in s_range:
            lhs = colon(ctx.symbolic(s), monomial(ctx.n, *closed))
            rhs = graph_symbolic(H, s - d + 1).lift(ctx.n, index_map)
            results.append(ctx.compare_ideals(cid, {'s': s, 'x': x, 'd': d}, lhs, rhs))
    return results


@register('chk-chordal-bound')
def check_chordal_bound(ctx: GraphContext) -> List[CheckResult]:
    """Chordal G: reg(I(G)^{s}) <= s + ord_match for 1 <= s <= height."""
    cid = 'chk-chordal-bound'
    if not ctx.invariants.is_chordal:
        return [ctx.skipped(cid, "graph not chordal")]
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    s_range = ctx.s_values(1, ctx.invariants.height)
    if not s_range:
        return ctx.out_of_range(cid, "s exceeds height")
    om = ctx.invariants.ord_match
    results = []
    for s in s_range:
        r = ctx.reg(ctx.symbolic(s))
        results.append(ctx.compare(cid, {'s': s}, r, s + om, r <= s + om))
    return results


def _has_degree(J: SqfIdeal, degree: int) -> bool:
    return any(popcount(m) == degree for m in J.masks)


@register('chk-gen-degree')
def check_gen_degree(ctx: GraphContext) -> List[CheckResult]:
    """
    I(G)^{ind_match} has a minimal generator of degree 2 ind_match; for Cameron-Walker G and
    ind_match <= s <= height, I(G)^{s} has one of degree s + ind_match.
    """
    cid = 'chk-gen-degree'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    ind, h = ctx.invariants.ind_match, ctx.invariants.height
    results = []
    if ctx.requested_s in (None, ind):
        J = ctx.symbolic(ind)
        degrees = sorted({popcount(m) for m in J.masks})
        results.append(ctx.compare(cid, {'s': ind, 'part': 'ind_match'}, degrees, 2 * ind,
                                   _has_degree(J, 2 * ind), ideal=str(J)))
    if not ctx.invariants.is_cameron_walker:
        results.append(ctx.skipped(cid, "graph not Cameron-Walker", {'part': 'cameron_walker'}))
        return results
    for s in ctx.s_values(ind, h):
        J = ctx.symbolic(s)
        degrees = sorted({popcount(m) for m in J.masks})
        results.append(ctx.compare(cid, {'s': s, 'part': 'cameron_walker'}, degrees, s + ind,
                                   _has_degree(J, s + ind), ideal=str(J)))
    if not results:
        return ctx.out_of_range(cid, "s outside ind_match..height")
    return results


@register('chk-cw-eq')
def check_cw_eq(ctx: GraphContext) -> List[CheckResult]:
    """Cameron-Walker G: reg(I(G)^{s}) = s + ind_match for 1 <= s <= height."""
    cid = 'chk-cw-eq'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    if not ctx.invariants.is_cameron_walker:
        return [ctx.skipped(cid, "graph not Cameron-Walker")]
    s_range = ctx.s_values(1, ctx.invariants.height)
    if not s_range:
        return ctx.out_of_range(cid, "s exceeds height")
    ind = ctx.invariants.ind_match
    results = []
    for s in s_range:
        r = ctx.reg(ctx.symbolic(s))
        results.append(ctx.compare(cid, {'s': s}, r, s + ind, r == s + ind))
    return results


@register('chk-cw-ordmatch')
def check_cw_ordmatch(ctx: GraphContext) -> List[CheckResult]:
    """Cameron-Walker G: ind_match = ord_match (so the chordal bound is an equality there)."""
    cid = 'chk-cw-ordmatch'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    if not ctx.invariants.is_cameron_walker:
        return [ctx.skipped(cid, "graph not Cameron-Walker")]
    inv = ctx.invariants
    return [ctx.compare(cid, {}, inv.ind_match, inv.ord_match, inv.ind_match == inv.ord_match)]


@register('chk-bipartite-eq')
def check_bipartite_eq(ctx: GraphContext) -> List[CheckResult]:
    """Bipartite G: I(G)^{s} = I(G)^[s] for 1 <= s <= match."""
    cid = 'chk-bipartite-eq'
    if not ctx.invariants.is_bipartite:
        return [ctx.skipped(cid, "graph not bipartite")]
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    s_range = ctx.s_values(1, ctx.invariants.match)
    if not s_range:
        return ctx.out_of_range(cid, "s exceeds match")
    return [ctx.compare_ideals(cid, {'s': s}, ctx.symbolic(s), ctx.power(s)) for s in s_range]


@register('chk-intsec')
def check_intsec(ctx: GraphContext) -> List[CheckResult]:
    """(I(G)^{s+1} : x_i x_j) = (I(G - x_j)^{s} : x_i) cap (I(G - x_i)^{s} : x_j) for 1 <= s <= height - 1."""
    cid = 'chk-intsec'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    s_range = ctx.s_values(1, ctx.invariants.height - 1)
    if not s_range:
        return ctx.out_of_range(cid, "height < 2")
    n = ctx.n
    results = []
    for i, j in ctx.graph.edges:
        without_j, map_j = delete_vertices(ctx.graph, [j])
        without_i, map_i = delete_vertices(ctx.graph, [i])
        for s in s_range:
            lhs = colon(ctx.symbolic(s + 1), monomial(n, i, j))
            left = colon_or_zero(graph_symbolic(without_j, s).lift(n, map_j), monomial(n, i))
            right = colon_or_zero(graph_symbolic(without_i, s).lift(n, map_i), monomial(n, j))
            results.append(ctx.compare_ideals(cid, {'s': s, 'edge': [i, j]}, lhs, intersect(left, right)))
    return results


def second_colon_description(g: Graph, i: int, j: int) -> SqfIdeal:
    """
    I(G - {x_i, x_j}) + (x_p x_q : p in N(i) - j, q in N(j) - i, p != q) + (x_t : t in N(i) cap N(j)).
    """
    rest, index_map = delete_vertices(g, [i, j])
    masks = list(edge_ideal(rest).lift(g.n, index_map).masks)
    n_i = [p for p in g.neighbors(i) if p != j]
    n_j = [q for q in g.neighbors(j) if q != i]
    masks += [(1 << p) | (1 << q) for p in n_i for q in n_j if p != q]
    masks += [1 << t for t in set(n_i) & set(n_j)]
    return SqfIdeal(g.n, tuple(masks))


@register('chk-seccoldesc')
def check_seccoldesc(ctx: GraphContext) -> List[CheckResult]:
    """(I(G)^{2} : x_i x_j) equals the explicit ideal of second_colon_description for every edge."""
    cid = 'chk-seccoldesc'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    if ctx.invariants.height < 2:
        return [ctx.skipped(cid, "height < 2")]
    results = []
    for i, j in ctx.graph.edges:
        lhs = colon(ctx.symbolic(2), monomial(ctx.n, i, j))
        results.append(ctx.compare_ideals(cid, {'edge': [i, j]}, lhs, second_colon_description(ctx.graph, i, j)))
    return results


def symbolic_colon_by_membership(J: SqfIdeal, i: int, j: int) -> SqfIdeal:
    """
    (J^(2) : x_i x_j) from the membership oracle, restricted to squarefree u. For edge ideals this colon is known to
    be squarefree, so no non-squarefree generator is missed.
    """
    ij = Monomial.from_sqf(SqfMonomial.from_support(J.n, (i, j)))
    members = [u for u in range(1 << J.n) if symbolic_member(Monomial.from_sqf(SqfMonomial(J.n, u)) * ij, J, 2)]
    return SqfIdeal(J.n, tuple(members))


@register('chk-symor')
def check_symor(ctx: GraphContext) -> List[CheckResult]:
    """(I(G)^(2) : x_i x_j) + (x_i, x_j) = (I(G)^{2} : x_i x_j) + (x_i, x_j) for every edge."""
    cid = 'chk-symor'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    results = []
    for i, j in ctx.graph.edges:
        ij = variables_ideal(ctx.n, [i, j])
        lhs = ideal_sum(symbolic_colon_by_membership(ctx.ideal, i, j), ij)
        rhs = ideal_sum(colon_or_zero(ctx.symbolic(2), monomial(ctx.n, i, j)), ij)
        results.append(ctx.compare_ideals(cid, {'edge': [i, j]}, lhs, rhs))
    return results


def _two_matchings(ctx: GraphContext) -> List[tuple]:
    """Ordered pairs (e1, e2) of disjoint edges; both orders are instantiated."""
    out = []
    for m in all_matchings(ctx.graph):
        if len(m) == 2:
            e, f = ctx.graph.edges[m[0]], ctx.graph.edges[m[1]]
            out += [(e, f), (f, e)]
    return out


@register('chk-colsy')
def check_colsy(ctx: GraphContext) -> List[CheckResult]:
    """(I(G)^{3} : e1 e2) = ((I(G)^{2} : e1)^{2} : e2) for every 2-matching {e1, e2}."""
    cid = 'chk-colsy'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    pairs = _two_matchings(ctx)
    if not pairs:
        return [ctx.skipped(cid, "match < 2")]
    n = ctx.n
    results = []
    for e1, e2 in pairs:
        lhs = colon_or_zero(ctx.symbolic(3), monomial(n, *e1, *e2))
        K = colon(ctx.symbolic(2), monomial(n, *e1))
        K2 = sqf_symbolic(K, 2) if not K.is_unit else SqfIdeal.unit(n)
        rhs = colon_or_zero(K2, monomial(n, *e2))
        results.append(ctx.compare_ideals(cid, {'e1': list(e1), 'e2': list(e2)}, lhs, rhs))
    return results


@register('chk-ttsym')
def check_ttsym(ctx: GraphContext) -> List[CheckResult]:
    """I(G)^{3} is contained in I(G)^[2]."""
    cid = 'chk-ttsym'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    if ctx.invariants.height < 3:
        return [ctx.skipped(cid, f"height {ctx.invariants.height} < 3, I^{{3}} is zero")]
    J3, P2 = ctx.symbolic(3), ctx.power(2)
    outside = [str(SqfMonomial(ctx.n, m)) for m in J3.masks if not contains(P2, SqfIdeal(ctx.n, (m,)))]
    return [ctx.compare(cid, {'s': 3}, J3, P2, not outside, not_contained=outside)]


@register('chk-sym2')
def check_sym2(ctx: GraphContext) -> List[CheckResult]:
    """height >= 2: reg(I(G)^{2}) <= min(reg(I(G)) + 2, match + 2)."""
    cid = 'chk-sym2'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    if ctx.invariants.height < 2:
        return [ctx.skipped(cid, "height < 2")]
    r2 = ctx.reg(ctx.symbolic(2))
    bound = min(ctx.reg(ctx.ideal) + 2, ctx.invariants.match + 2)
    return [ctx.compare(cid, {'s': 2}, r2, bound, r2 <= bound)]


@register('chk-colonsym2')
def check_colonsym2(ctx: GraphContext) -> List[CheckResult]:
    """height >= 2: reg(I(G)^{2} : x_i x_j) <= match for every edge."""
    cid = 'chk-colonsym2'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    if ctx.invariants.height < 2:
        return [ctx.skipped(cid, "height < 2")]
    match = ctx.invariants.match
    results = []
    for i, j in ctx.graph.edges:
        r = ctx.reg(colon(ctx.symbolic(2), monomial(ctx.n, i, j)))
        results.append(ctx.compare(cid, {'edge': [i, j]}, r, match, r <= match))
    return results


@register('chk-lemreg')
def check_lemreg(ctx: GraphContext) -> List[CheckResult]:
    """match >= 2 and I(G)^{3} != 0: reg(I(G)^{3} : u) <= n/2 - 1 for every minimal generator u of I(G)^[2]."""
    cid = 'chk-lemreg'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    if ctx.invariants.match < 2:
        return [ctx.skipped(cid, "match < 2")]
    if ctx.invariants.height < 3:
        return [ctx.skipped(cid, "height < 3, I^{3} is zero")]
    results = []
    for u in ctx.power(2).masks:
        params = {'u': list(bits(u))}
        K = colon(ctx.symbolic(3), SqfMonomial(ctx.n, u))
        if K.is_unit:
            results.append(ctx.skipped(cid, "colon is the unit ideal", params))
            continue
        r = ctx.reg(K)
        results.append(ctx.compare(cid, params, r, f"{ctx.n}/2 - 1", 2 * r <= ctx.n - 2))
    return results


@register('chk-po3')
def check_po3(ctx: GraphContext) -> List[CheckResult]:
    """height >= 3: reg(I(G)^{3}) <= min(floor(n/2) + 3, reg(I(G)) + 4)."""
    cid = 'chk-po3'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    if ctx.invariants.height < 3:
        return [ctx.skipped(cid, "height < 3")]
    r3 = ctx.reg(ctx.symbolic(3))
    bound = min(ctx.n // 2 + 3, ctx.reg(ctx.ideal) + 4)
    return [ctx.compare(cid, {'s': 3}, r3, bound, r3 <= bound)]


@register('chk-conj')
def check_conj(ctx: GraphContext) -> List[CheckResult]:
    """reg(I(G)^{s}) <= match + s for 1 <= s <= height. params['tight'] marks equality."""
    cid = 'chk-conj'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    s_range = ctx.s_values(1, ctx.invariants.height)
    if not s_range:
        return ctx.out_of_range(cid, "s exceeds height")
    match = ctx.invariants.match
    results = []
    for s in s_range:
        r = ctx.reg(ctx.symbolic(s))
        results.append(ctx.compare(cid, {'s': s, 'tight': r == match + s}, r, match + s, r <= match + s))
    return results


@register('chk-char-indep')
def check_char_indep(ctx: GraphContext) -> List[CheckResult]:
    """Betti tables of I(G)^{s} over Q and over GF(2) agree, 1 <= s <= height."""
    cid = 'chk-char-indep'
    if (skip := _no_edges(ctx, cid)) is not None:
        return skip
    s_range = ctx.s_values(1, ctx.invariants.height)
    if not s_range:
        return ctx.out_of_range(cid, "s exceeds height")
    results = []
    for s in s_range:
        J = ctx.symbolic(s)
        rational = ctx.table(J, FieldSpec(0)).entries
        binary = ctx.table(J, FieldSpec(2)).entries
        results.append(ctx.compare(cid, {'s': s}, sorted(rational.items()), sorted(binary.items()),
                                   rational == binary, ideal=str(J)))
    return results


def run_check(check_id: str, g: Graph, params: Optional[dict] = None) -> List[CheckResult]:
    """
    Evaluate one catalog check on g.

    :param check_id: key of CHECKS
    :param g: the graph
    :param params: optional 's' (pin one s), 'seed' (sampling seed), 'field' (FieldSpec or text)
    """
    if check_id not in CHECKS:
        raise ParameterError(f"Unknown check id '{check_id}'. Known checks: {', '.join(CHECKS)}")
    params = dict(params or {})
    field = params.get('field')
    if field is not None and not isinstance(field, FieldSpec):
        field = FieldSpec.parse(field)
    ctx = GraphContext(g, field, params.get('seed', DEFAULT_SEED), params.get('s'))
    return CHECKS[check_id](ctx)


def run_checks_on_graph(g: Graph, check_ids: List[str], seed: int = DEFAULT_SEED,
                        field: Optional[FieldSpec] = None) -> List[CheckResult]:
    """All requested checks on one graph sharing one GraphContext (this is the unit of work of a corpus run)."""
    for cid in check_ids:
        if cid not in CHECKS:
            raise ParameterError(f"Unknown check id '{cid}'. Known checks: {', '.join(CHECKS)}")
    ctx = GraphContext(g, field, seed)
    results = []
    for cid in check_ids:
        results += CHECKS[cid](ctx)
    return results
