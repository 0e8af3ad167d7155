from typing import List, Tuple

from EdgeIdealSolvers.graphs.graph import Graph
from EdgeIdealSolvers.utilities.exceptions import GraphParseError, ParameterError, CapabilityError


def _content_lines(text: str) -> List[Tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            out.append((number, line))
    return out


def _parse_record(lines: List[Tuple[int, str]]) -> Graph:
    number, header = lines[0]
    fields = header.split()
    if len(fields) != 2 or fields[0] != 'n' or not fields[1].isdigit():
        raise GraphParseError(f"Expected 'n <count>', got '{header}'", line=number)
    n = int(fields[1])
    seen = set()
    for number, line in lines[1:]:
        fields = line.split()
        if len(fields) != 2 or not all(f.lstrip('-').isdigit() for f in fields):
            raise GraphParseError(f"Expected an edge 'i j', got '{line}'", line=number)
        i, j = int(fields[0]), int(fields[1])
        if i == j:
            raise GraphParseError(f"Self-loop at vertex {i}", line=number)
        if not (0 <= i < n and 0 <= j < n):
            raise GraphParseError(f"Edge {i} {j} outside the vertex range 0..{n - 1}", line=number)
        if i > j:
            raise GraphParseError(f"Edge {i} {j} must be written with the smaller endpoint first", line=number)
        pair = (i, j)
        if pair in seen:
            raise GraphParseError(f"Duplicate edge {pair[0]} {pair[1]}", line=number)
        seen.add(pair)
    try:
        return Graph(n, tuple(sorted(seen)))
    except (ParameterError, CapabilityError) as e:
        raise GraphParseError(str(e), line=lines[0][0]) from e


def parse_edge_list(text: str) -> Graph:
    """
    One graph: a line 'n <count>' followed by one line 'i j' per edge. Everything after '#' is a comment.
    """
    lines = _content_lines(text)
    if not lines:
        raise GraphParseError("Empty edge list, expected 'n <count>'", line=1)
    for number, line in lines[1:]:
        if line.split()[0] == 'n':
            raise GraphParseError("A second 'n <count>' header in a single edge list", line=number)
    return _parse_record(lines)


def parse_edge_list_records(text: str) -> List[Graph]:
    """Several edge lists in one file, each starting at its own 'n <count>' line."""
    lines = _content_lines(text)
    if lines and lines[0][1].split()[0] != 'n':
        raise GraphParseError(f"Expected 'n <count>', got '{lines[0][1]}'", line=lines[0][0])
    starts = [k for k, (_, line) in enumerate(lines) if line.split()[0] == 'n']
    bounds = starts + [len(lines)]
    return [_parse_record(lines[a:b]) for a, b in zip(bounds[:-1], bounds[1:])]


def format_edge_list(g: Graph) -> str:
    return "\n".join([f"n {g.n}"] + [f"{i} {j}" for i, j in g.edges]) + "\n"
