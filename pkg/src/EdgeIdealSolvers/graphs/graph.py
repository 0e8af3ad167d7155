from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Tuple

import networkx as nx

from EdgeIdealSolvers.configuration import MAX_AMBIENT_VARIABLES
from EdgeIdealSolvers.utilities.bitsets import bits, mask_of
from EdgeIdealSolvers.utilities.exceptions import CapabilityError, ParameterError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on the vertices 0..n-1.

    Edges are stored canonically (i < j, pairs sorted) so that equal graphs compare equal. Adjacency is kept as one
    int bitmask per vertex, which is what all invariant computations work on.
    """
    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError(f"A graph needs a nonnegative vertex count, got n={self.n}")
        if self.n > MAX_AMBIENT_VARIABLES:
            raise CapabilityError(f"Graphs are limited to {MAX_AMBIENT_VARIABLES} vertices (one variable per vertex "
                                  f"in a bitmask), got n={self.n}")
        canonical = set()
        for e in self.edges:
            i, j = (int(v) for v in e)
            if i == j:
                raise ParameterError(f"Self-loop at vertex {i} is not allowed in a simple graph")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ParameterError(f"Edge {(i, j)} has an endpoint outside 0..{self.n - 1}")
            pair = (min(i, j), max(i, j))
            if pair in canonical:
                raise ParameterError(f"Duplicate edge {pair}")
            canonical.add(pair)
        object.__setattr__(self, 'edges', tuple(sorted(canonical)))

    @cached_property
    def adjacency(self) -> Tuple[int, ...]:
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return tuple(adj)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return bits(self.adjacency[v])

    def closed_neighborhood_mask(self, v: int) -> int:
        return self.adjacency[v] | (1 << v)

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges)
        return G

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> "Graph":
        nodes = sorted(G.nodes())
        index = {v: k for k, v in enumerate(nodes)}
        return cls(len(nodes), tuple((index[u], index[v]) for u, v in G.edges()))


def _check_params(family: str, params: Sequence[int], count: int, minimum: int):
    if len(params) != count or any(int(p) < minimum for p in params):
        raise ParameterError(f"Family '{family}' needs {count} integer parameter(s) >= {minimum}, got {list(params)}")


def build_named(family: str, params: Sequence = ()) -> Graph:
    """
    Constructs one of the named graph families.

    :param family: one of path, cycle, complete, complete_bipartite, star, star_triangle, from_edges
    :param params: integer parameters of the family; for from_edges the vertex count followed by the edges as pairs
    :return: the graph
    """
    params = list(params)
    if family == 'path':
        _check_params(family, params, 1, 1)
        k = int(params[0])
        return Graph(k, tuple((i, i + 1) for i in range(k - 1)))
    elif family == 'cycle':
        _check_params(family, params, 1, 3)
        k = int(params[0])
        return Graph(k, tuple((i, (i + 1) % k) for i in range(k)))
    elif family == 'complete':
        _check_params(family, params, 1, 1)
        k = int(params[0])
        return Graph(k, tuple((i, j) for i in range(k) for j in range(i + 1, k)))
    elif family == 'complete_bipartite':
        _check_params(family, params, 2, 1)
        a, b = int(params[0]), int(params[1])
        return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))
    elif family == 'star':
        _check_params(family, params, 1, 1)
        k = int(params[0])
        return Graph(k + 1, tuple((0, i) for i in range(1, k + 1)))
    elif family == 'star_triangle':
        # t triangles glued at the apex 0; triangle k uses vertices 2k+1, 2k+2
        _check_params(family, params, 1, 1)
        t = int(params[0])
        edges = []
        for k in range(t):
            a, b = 2 * k + 1, 2 * k + 2
            edges += [(0, a), (0, b), (a, b)]
        return Graph(2 * t + 1, tuple(edges))
    elif family == 'from_edges':
        if len(params) < 1:
            raise ParameterError("Family 'from_edges' needs the vertex count as first parameter")
        n = int(params[0])
        return Graph(n, tuple(tuple(e) for e in params[1:]))
    else:
        raise ParameterError(f"Unknown graph family '{family}'")


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
    """
    Subgraph induced on keep, relabeled 0..k-1 in increasing order of the old labels.

    Returns the graph and the index map (index_map[new] = old).
    """
    keep_mask = mask_of(keep)
    if keep_mask >> g.n:
        raise ParameterError(f"Vertices {list(bits(keep_mask >> g.n << g.n))} are not vertices of a graph with "
                             f"n={g.n}")
    index_map = bits(keep_mask)
    new_index = {old: new for new, old in enumerate(index_map)}
    edges = [(new_index[i], new_index[j]) for i, j in g.edges if i in new_index and j in new_index]
    return Graph(len(index_map), tuple(edges)), index_map


def delete_vertices(g: Graph, U: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
    """G with the vertices in U removed, relabeled order-preservingly. Returns (graph, index_map)."""
    U = list(U)
    for u in U:
        if not 0 <= u < g.n:
            raise ParameterError(f"Cannot delete vertex {u} from a graph on {g.n} vertices")
    removed = mask_of(U)
    return induced_subgraph(g, bits(g.vertex_mask & ~removed))
