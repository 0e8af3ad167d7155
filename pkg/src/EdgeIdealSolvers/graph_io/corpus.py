from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Tuple

from batchgenerators.utilities.file_and_folder_operations import isfile

from EdgeIdealSolvers.graph_io.edge_list import parse_edge_list_records
from EdgeIdealSolvers.graph_io.enumeration import enumerate_graphs
from EdgeIdealSolvers.graph_io.graph6 import HEADER, parse_graph6
from EdgeIdealSolvers.graphs.graph import Graph, build_named
from EdgeIdealSolvers.graphs.invariants import InvariantReport, classify
from EdgeIdealSolvers.utilities.exceptions import GraphParseError, ParameterError

SOURCES = ('enumerate', 'g6file', 'edges', 'named')

# short names accepted on the command line
NAMED_FAMILIES = {
    'path': 'path',
    'cycle': 'cycle',
    'complete': 'complete',
    'kbip': 'complete_bipartite',
    'star': 'star',
    'startri': 'star_triangle',
}


@dataclass(frozen=True)
class CorpusSpec:
    """
    Where the graphs of a run come from, plus conjunctive filters.

    source is one of enumerate (argument N: all graphs with 1..N vertices), g6file (one graph6 record per line),
    edges (edge list file, one or more 'n <count>' records) and named (argument like path:4).
    """
    source: str
    argument: str
    filters: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ParameterError(f"Unknown corpus source '{self.source}', expected one of {SOURCES}")
        for f in self.filters:
            _filter_predicate(f)

    def __str__(self):
        text = f"{self.source}:{self.argument}"
        if self.filters:
            text += " [" + ",".join(self.filters) + "]"
        return text


def parse_named(text: str) -> Graph:
    """path:4, cycle:5, complete:3, kbip:3,5, star:3, startri:2"""
    family, _, args = text.partition(':')
    if family not in NAMED_FAMILIES:
        raise ParameterError(f"Unknown graph family '{family}', expected one of {sorted(NAMED_FAMILIES)}")
    try:
        params = [int(a) for a in args.split(',') if a.strip()]
    except ValueError:
        raise ParameterError(f"Family parameters must be integers, got '{args}'") from None
    return build_named(NAMED_FAMILIES[family], params)


def _filter_predicate(name: str) -> Callable[[InvariantReport], bool]:
    name = name.strip()
    if name == 'connected':
        return lambda inv: inv.is_connected
    if name == 'chordal':
        return lambda inv: inv.is_chordal
    if name == 'bipartite':
        return lambda inv: inv.is_bipartite
    if name == 'cameron_walker':
        return lambda inv: inv.is_cameron_walker
    if name.startswith('height>='):
        try:
            k = int(name[len('height>='):])
        except ValueError:
            raise ParameterError(f"Bad filter '{name}', expected height>=<int>") from None
        return lambda inv: inv.height >= k
    raise ParameterError(f"Unknown filter '{name}', expected connected, chordal, bipartite, cameron_walker or "
                         f"height>=k")


def parse_corpus_spec(text: str, filters: Optional[str] = None) -> CorpusSpec:
    source, sep, argument = text.partition(':')
    if not sep or not argument:
        raise ParameterError(f"Corpus must look like <source>:<argument> with source in {SOURCES}, got '{text}'")
    filter_names = tuple(f.strip() for f in filters.split(',') if f.strip()) if filters else ()
    return CorpusSpec(source, argument, filter_names)


def read_graph6_file(path: str) -> List[Graph]:
    graphs = []
    with open(path, 'r') as f:
        for number, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line == HEADER:
                continue
            try:
                graphs.append(parse_graph6(line))
            except GraphParseError as e:
                raise GraphParseError(f"{path}, line {number}: {e}", offset=e.offset) from e
    return graphs


def read_edge_list_file(path: str) -> List[Graph]:
    with open(path, 'r') as f:
        return parse_edge_list_records(f.read())


def _unfiltered(spec: CorpusSpec) -> Iterator[Graph]:
    if spec.source == 'enumerate':
        try:
            max_n = int(spec.argument)
        except ValueError:
            raise ParameterError(f"enumerate needs an integer argument, got '{spec.argument}'") from None
        for n in range(1, max_n + 1):
            yield from enumerate_graphs(n)
    elif spec.source == 'named':
        yield parse_named(spec.argument)
    else:
        if not isfile(spec.argument):
            raise ParameterError(f"Corpus file {spec.argument} does not exist")
        if spec.source == 'g6file':
            yield from read_graph6_file(spec.argument)
        else:
            yield from read_edge_list_file(spec.argument)


def iter_corpus(spec: CorpusSpec) -> Iterator[Graph]:
    predicates = [_filter_predicate(f) for f in spec.filters]
    for g in _unfiltered(spec):
        if not predicates:
            yield g
            continue
        inv = classify(g)
        if all(p(inv) for p in predicates):
            yield g


def parse_graph_argument(text: str) -> Graph:
    """A graph given on the command line: g6:<record>, a named family, or a graph6 / edge list file."""
    if text.startswith('g6:'):
        return parse_graph6(text[3:])
    if text.partition(':')[0] in NAMED_FAMILIES:
        return parse_named(text)
    if isfile(text):
        with open(text, 'r') as f:
            content = f.read()
        if content.lstrip().startswith('n ') or content.lstrip().startswith('#'):
            return parse_edge_list_records(content)[0]
        first = next((line.strip() for line in content.splitlines() if line.strip() and line.strip() != HEADER), '')
        return parse_graph6(first)
    raise ParameterError(f"Cannot interpret '{text}' as a graph: use g6:<record>, one of "
                         f"{sorted(NAMED_FAMILIES)} (e.g. path:4) or an existing file")
