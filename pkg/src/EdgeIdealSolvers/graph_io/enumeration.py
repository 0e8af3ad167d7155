"""
Exhaustive enumeration of small graphs up to isomorphism.

A graph is encoded as the integer whose bits, most significant first, are the graph6 adjacency bits
x(0,1), x(0,2), x(1,2), x(0,3), ...; comparing codes is comparing bit strings. The canonical form of a graph is the
relabeling with the smallest code over all n! vertex permutations.
"""
from functools import lru_cache
from itertools import permutations
from typing import Iterator, List

from EdgeIdealSolvers.configuration import MAX_ENUMERATION_ORDER
from EdgeIdealSolvers.graph_io.graph6 import upper_triangle_pairs
from EdgeIdealSolvers.graphs.graph import Graph
from EdgeIdealSolvers.utilities.bitsets import bits
from EdgeIdealSolvers.utilities.exceptions import CapabilityError, ParameterError

MAX_CANONICAL_ORDER = 8


class _Codec(object):
    def __init__(self, n: int):
        self.n = n
        self.pairs = list(upper_triangle_pairs(n))
        self.num_bits = len(self.pairs)
        index = {pair: k for k, pair in enumerate(self.pairs)}
        # weight of pair k is 2^(num_bits - 1 - k)
        self.position = {pair: self.num_bits - 1 - k for pair, k in index.items()}
        self.pair_at = {p: pair for pair, p in self.position.items()}
        self.permuted = []
        for perm in permutations(range(n)):
            self.permuted.append([self.position[tuple(sorted((perm[i], perm[j])))] for i, j in self.pairs])

    def encode(self, g: Graph) -> int:
        return sum(1 << self.position[e] for e in g.edges)

    def decode(self, code: int) -> Graph:
        return Graph(self.n, tuple(self.pair_at[p] for p in bits(code)))

    def orbit(self, code: int) -> set:
        set_pairs = [self.num_bits - 1 - p for p in bits(code)]
        return {sum(1 << table[k] for k in set_pairs) for table in self.permuted}


@lru_cache(maxsize=None)
def _codec(n: int) -> _Codec:
    return _Codec(n)


def canonical_form(g: Graph) -> Graph:
    if g.n > MAX_CANONICAL_ORDER:
        raise CapabilityError(f"Canonical forms are computed by trying all n! relabelings, which is limited to "
                              f"n <= {MAX_CANONICAL_ORDER}; got n={g.n}")
    codec = _codec(g.n)
    return codec.decode(min(codec.orbit(codec.encode(g))))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of graphs on n vertices, in increasing canonical order."""
    if n > MAX_ENUMERATION_ORDER:
        raise CapabilityError(f"Exhaustive enumeration is limited to n <= {MAX_ENUMERATION_ORDER} (got n={n}). For "
                              f"larger graphs supply a graph6 file, e.g. produced by nauty's geng, via g6file:<path>")
    if n < 1:
        raise ParameterError(f"enumerate_graphs needs n >= 1, got n={n}")
    codec = _codec(n)
    seen = set()
    representatives: List[int] = []
    for code in range(1 << codec.num_bits):
        if code in seen:
            continue
        orbit = codec.orbit(code)
        seen |= orbit
        representatives.append(min(orbit))
    for code in sorted(representatives):
        yield codec.decode(code)
