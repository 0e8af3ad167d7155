"""
Graph invariants the regularity bounds are phrased in: matching, induced matching and ordered matching numbers,
minimal vertex covers, height, and the chordal / bipartite / Cameron-Walker / connectivity predicates.

Everything here is exact exponential search. The corpora we verify on have at most 10 vertices so this is fine.
"""
from dataclasses import asdict, dataclass
from itertools import product
from typing import Dict, FrozenSet, List, Tuple

import networkx as nx

from EdgeIdealSolvers.graphs.graph import Graph
from EdgeIdealSolvers.utilities.bitsets import bits


@dataclass(frozen=True)
class InvariantReport:
    n: int
    num_edges: int
    match: int
    ind_match: int
    ord_match: int
    height: int
    is_bipartite: bool
    is_chordal: bool
    is_cameron_walker: bool
    is_connected: bool

    def to_dict(self) -> dict:
        return asdict(self)


def minimal_vertex_covers(g: Graph) -> List[FrozenSet[int]]:
    """
    All inclusion-minimal vertex covers, sorted by size and then lexicographically.

    Minimal covers are the complements of the maximal independent sets, i.e. of the maximal cliques of the complement
    graph.
    """
    if g.n == 0:
        return [frozenset()]
    everything = frozenset(range(g.n))
    covers = {everything - frozenset(c) for c in nx.find_cliques(nx.complement(g.to_networkx()))}
    return sorted(covers, key=lambda c: (len(c), sorted(c)))


def maximum_independent_set_size(g: Graph) -> int:
    adj = g.adjacency
    memo: Dict[int, int] = {}

    def best(mask: int) -> int:
        if mask == 0:
            return 0
        if mask in memo:
            return memo[mask]
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        if adj[v] & rest == 0:
            res = 1 + best(rest)
        else:
            res = max(best(rest), 1 + best(rest & ~adj[v]))
        memo[mask] = res
        return res

    return best(g.vertex_mask)


def matching_number(g: Graph) -> int:
    adj = g.adjacency
    memo: Dict[int, int] = {}

    def best(mask: int) -> int:
        # only vertices that still have a neighbor inside mask matter
        live = 0
        for v in bits(mask):
            if adj[v] & mask:
                live |= 1 << v
        if live == 0:
            return 0
        if live in memo:
            return memo[live]
        v = (live & -live).bit_length() - 1
        rest = live & ~(1 << v)
        res = best(rest)
        for u in bits(adj[v] & rest):
            res = max(res, 1 + best(rest & ~(1 << u)))
        memo[live] = res
        return res

    return best(g.vertex_mask)


def all_matchings(g: Graph) -> List[Tuple[int, ...]]:
    """Every matching (including the empty one) as a tuple of indices into g.edges."""
    out = []

    def extend(start: int, used: int, current: Tuple[int, ...]):
        out.append(current)
        for k in range(start, g.num_edges):
            i, j = g.edges[k]
            if used >> i & 1 or used >> j & 1:
                continue
            extend(k + 1, used | (1 << i) | (1 << j), current + (k,))

    extend(0, 0, ())
    return out


def is_induced_matching(g: Graph, matching: Tuple[int, ...]) -> bool:
    covered = 0
    for k in matching:
        i, j = g.edges[k]
        covered |= (1 << i) | (1 << j)
    inside = sum(1 for i, j in g.edges if covered >> i & 1 and covered >> j & 1)
    return inside == len(matching)


def induced_matching_number(g: Graph) -> int:
    return max((len(m) for m in all_matchings(g) if is_induced_matching(g, m)), default=0)


def _orders_exist(arcs: List[int], k: int) -> bool:
    # Kahn's algorithm on k nodes; arcs[e] is the bitmask of successors of e
    indegree = [0] * k
    for e in range(k):
        for f in bits(arcs[e]):
            indegree[f] += 1
    ready = [e for e in range(k) if indegree[e] == 0]
    seen = 0
    while ready:
        e = ready.pop()
        seen += 1
        for f in bits(arcs[e]):
            indegree[f] -= 1
            if indegree[f] == 0:
                ready.append(f)
    return seen == k


def is_ordered_matching(g: Graph, matching: Tuple[int, ...]) -> bool:
    """
    True if some choice of sides and some ordering of the edges makes the matching ordered: the a-sides form an
    independent set and a_e b_f in E forces e before f (strictly, for e != f).
    """
    adj = g.adjacency
    k = len(matching)
    if k == 0:
        return False
    pairs = [g.edges[e] for e in matching]
    for orientation in product((0, 1), repeat=k):
        a = [pairs[e][orientation[e]] for e in range(k)]
        b = [pairs[e][1 - orientation[e]] for e in range(k)]
        a_mask = 0
        for v in a:
            a_mask |= 1 << v
        if any(adj[v] & a_mask for v in a):
            continue
        arcs = [0] * k
        for e in range(k):
            for f in range(k):
                if e != f and adj[a[e]] >> b[f] & 1:
                    arcs[e] |= 1 << f
        if _orders_exist(arcs, k):
            return True
    return False


def ordered_matching_number(g: Graph) -> int:
    best = 0
    for m in sorted(all_matchings(g), key=len, reverse=True):
        if len(m) <= best:
            break
        if is_ordered_matching(g, m):
            best = len(m)
    return best


def _is_clique(adj: Tuple[int, ...], mask: int) -> bool:
    return all((adj[v] | (1 << v)) & mask == mask for v in bits(mask))


def simplicial_vertices(g: Graph) -> List[int]:
    """Vertices whose open neighborhood is a clique (isolated vertices included)."""
    adj = g.adjacency
    return [v for v in range(g.n) if _is_clique(adj, adj[v])]


def is_chordal(g: Graph) -> bool:
    """Peel off simplicial vertices of the remaining induced subgraph; chordal iff this empties the graph."""
    adj = g.adjacency
    remaining = g.vertex_mask
    while remaining:
        for v in bits(remaining):
            if _is_clique(adj, adj[v] & remaining):
                remaining &= ~(1 << v)
                break
        else:
            return False
    return True


def _is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return nx.is_connected(g.to_networkx())


def classify(g: Graph) -> InvariantReport:
    match = matching_number(g)
    ind_match = induced_matching_number(g)
    ord_match = ordered_matching_number(g)
    assert ind_match <= ord_match <= match, \
        f"ind_match <= ord_match <= match violated: {ind_match}, {ord_match}, {match} for edges {g.edges}"
    height = g.n - maximum_independent_set_size(g)
    return InvariantReport(
        n=g.n,
        num_edges=g.num_edges,
        match=match,
        ind_match=ind_match,
        ord_match=ord_match,
        height=height,
        is_bipartite=bool(nx.is_bipartite(g.to_networkx())),
        is_chordal=is_chordal(g),
        is_cameron_walker=match == ind_match,
        is_connected=_is_connected(g),
    )


def is_unmixed(g: Graph) -> bool:
    return len({len(c) for c in minimal_vertex_covers(g)}) <= 1
