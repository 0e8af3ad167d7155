"""
graph6 codec for graphs with at most 62 vertices.

A record is the byte n+63 followed by the upper triangle of the adjacency matrix in column-major order
x(0,1), x(0,2), x(1,2), x(0,3), ... packed into 6-bit groups (most significant bit first, zero padded), each group
offset by 63.
"""
from typing import Iterator, List, Tuple

from EdgeIdealSolvers.configuration import MAX_GRAPH6_ORDER
from EdgeIdealSolvers.graphs.graph import Graph
from EdgeIdealSolvers.utilities.exceptions import CapabilityError, GraphParseError

HEADER = ">>graph6<<"


def upper_triangle_pairs(n: int) -> Iterator[Tuple[int, int]]:
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_GRAPH6_ORDER:
        raise CapabilityError(f"graph6 output is limited to {MAX_GRAPH6_ORDER} vertices, got n={g.n}")
    bit_list = [1 if g.has_edge(i, j) else 0 for i, j in upper_triangle_pairs(g.n)]
    bit_list += [0] * (-len(bit_list) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bit_list), 6):
        value = 0
        for b in bit_list[k:k + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    line = line.rstrip("\r\n")
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if len(line) == 0:
        raise GraphParseError("Empty graph6 record", offset=0)
    for offset, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"Byte {ord(ch)} outside the graph6 range 63..126", offset=offset)
    if ord(line[0]) == 126:
        raise CapabilityError(f"graph6 records with more than {MAX_GRAPH6_ORDER} vertices (multi-byte size field) "
                              f"are not supported")
    n = ord(line[0]) - 63
    num_bits = n * (n - 1) // 2
    expected = 1 + (num_bits + 5) // 6
    if len(line) < expected:
        raise GraphParseError(f"Truncated bit stream: n={n} needs {expected} bytes, got {len(line)}",
                              offset=len(line))
    if len(line) > expected:
        raise GraphParseError(f"Trailing garbage after a complete record for n={n}", offset=expected)

    bit_list: List[int] = []
    for ch in line[1:]:
        value = ord(ch) - 63
        bit_list += [(value >> (5 - k)) & 1 for k in range(6)]
    if any(bit_list[num_bits:]):
        raise GraphParseError("Nonzero padding bits", offset=expected - 1)
    edges = [pair for pair, b in zip(upper_triangle_pairs(n), bit_list) if b]
    return Graph(n, tuple(edges))
