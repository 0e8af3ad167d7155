from itertools import product

import networkx as nx
import numpy as np
import pytest

from EdgeIdealSolvers.graph_io.corpus import CorpusSpec, iter_corpus, parse_corpus_spec, parse_graph_argument, \
    read_graph6_file
from EdgeIdealSolvers.graph_io.edge_list import format_edge_list, parse_edge_list, parse_edge_list_records
from EdgeIdealSolvers.graph_io.enumeration import canonical_form, enumerate_graphs
from EdgeIdealSolvers.graph_io.graph6 import encode_graph6, parse_graph6, upper_triangle_pairs
from EdgeIdealSolvers.graphs.graph import Graph, build_named
from EdgeIdealSolvers.graphs.invariants import classify
from EdgeIdealSolvers.utilities.exceptions import CapabilityError, GraphParseError, ParameterError


def test_graph6_examples():
    assert parse_graph6("A_") == Graph(2, ((0, 1),))
    assert parse_graph6("@") == Graph(1)
    assert parse_graph6("Bw") == build_named('complete', [3])
    assert parse_graph6(">>graph6<<A_\n") == Graph(2, ((0, 1),))
    assert encode_graph6(build_named('path', [4])) == "Ch"


@pytest.mark.parametrize('record, offset', [
    ("", 0),
    ("A", 1),
    ("A__", 2),
    ("A ", 1),
    ("A`", 1),
])
def test_graph6_errors(record, offset):
    with pytest.raises(GraphParseError) as e:
        parse_graph6(record)
    assert e.value.offset == offset
    assert f"byte offset {offset}" in str(e.value)


def test_graph6_multibyte_size_unsupported():
    with pytest.raises(CapabilityError):
        parse_graph6("~??~")


def test_graph6_agrees_with_networkx():
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            reference = nx.to_graph6_bytes(g.to_networkx(), header=False).decode().strip()
            assert encode_graph6(g) == reference
            assert parse_graph6(reference) == g


def test_graph6_roundtrip_on_all_graphs_up_to_6():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            assert parse_graph6(encode_graph6(g)) == g


def test_edge_list_examples():
    assert parse_edge_list("n 4\n0 1\n1 2\n2 3\n") == build_named('path', [4])
    assert parse_edge_list("n 2") == Graph(2)
    assert parse_edge_list("# a comment\nn 3  # three vertices\n\n1 2\n") == Graph(3, ((1, 2),))


@pytest.mark.parametrize('text, line', [
    ("n 3\n0 0\n", 2),
    ("n 3\n0 1\n1 0\n", 3),
    ("n 3\n2 1\n", 2),
    ("n 2\n0 2\n", 2),
    ("n 3\n0 1 2\n", 2),
    ("m 3\n", 1),
    ("n 3\n0 1\nn 2\n", 3),
])
def test_edge_list_errors(text, line):
    with pytest.raises(GraphParseError) as e:
        parse_edge_list(text)
    assert e.value.line == line


def test_edge_list_records():
    graphs = parse_edge_list_records("n 2\n0 1\nn 3\n# nothing\nn 1\n")
    assert graphs == [Graph(2, ((0, 1),)), Graph(3), Graph(1)]
    g = build_named('star_triangle', [2])
    assert parse_edge_list(format_edge_list(g)) == g


@pytest.mark.parametrize('n, count', [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), pytest.param(6, 156, marks=pytest.mark.slow)])
def test_enumeration_counts(n, count):
    graphs = list(enumerate_graphs(n))
    assert len(graphs) == count
    assert len({encode_graph6(g) for g in graphs}) == count


def test_enumeration_matches_isomorphism_dedup():
    for n in range(1, 5):
        pairs = list(upper_triangle_pairs(n))
        classes = []
        for bits in product((0, 1), repeat=len(pairs)):
            G = nx.Graph()
            G.add_nodes_from(range(n))
            G.add_edges_from(p for p, b in zip(pairs, bits) if b)
            if not any(nx.is_isomorphic(G, H) for H in classes):
                classes.append(G)
        assert len(classes) == len(list(enumerate_graphs(n)))


def test_enumeration_order_and_canonical_forms():
    graphs = list(enumerate_graphs(4))
    for g in graphs:
        assert canonical_form(g) == g
    for a, b in zip(graphs, graphs[1:]):
        assert not nx.is_isomorphic(a.to_networkx(), b.to_networkx())


def test_canonical_form_is_relabeling_invariant():
    rs = np.random.RandomState(7)
    g = build_named('star_triangle', [2])
    for _ in range(10):
        perm = rs.permutation(g.n)
        relabeled = Graph(g.n, tuple((int(perm[i]), int(perm[j])) for i, j in g.edges))
        assert canonical_form(relabeled) == canonical_form(g)


def test_enumeration_limits():
    with pytest.raises(CapabilityError):
        next(enumerate_graphs(7))
    with pytest.raises(ParameterError):
        next(enumerate_graphs(0))
    with pytest.raises(CapabilityError):
        canonical_form(Graph(9))


def test_corpus_spec_parsing():
    spec = parse_corpus_spec("enumerate:4", "connected, chordal")
    assert spec == CorpusSpec('enumerate', '4', ('connected', 'chordal'))
    assert str(spec) == "enumerate:4 [connected,chordal]"
    for text in ("enumerate", "enumerate:", "nauty:5"):
        with pytest.raises(ParameterError):
            parse_corpus_spec(text)
    with pytest.raises(ParameterError):
        parse_corpus_spec("enumerate:4", "planar")


def test_enumerate_corpus_with_filters():
    assert len(list(iter_corpus(parse_corpus_spec("enumerate:3")))) == 7
    assert len(list(iter_corpus(parse_corpus_spec("enumerate:4", "connected")))) == 10
    tall = list(iter_corpus(parse_corpus_spec("enumerate:5", "height>=3,chordal")))
    assert tall
    assert all(classify(g).height >= 3 and classify(g).is_chordal for g in tall)


def test_enumerate_corpus_limit_is_lazy():
    corpus = iter_corpus(parse_corpus_spec("enumerate:7"))
    with pytest.raises(CapabilityError):
        list(corpus)


def test_file_corpora(tmp_path):
    g6 = tmp_path / "graphs.g6"
    g6.write_text(">>graph6<<\nA_\nBw\n\n")
    assert list(iter_corpus(parse_corpus_spec(f"g6file:{g6}"))) == [Graph(2, ((0, 1),)), build_named('complete', [3])]

    edges = tmp_path / "graphs.txt"
    edges.write_text("n 2\n0 1\nn 3\n0 1\n1 2\n")
    assert len(list(iter_corpus(parse_corpus_spec(f"edges:{edges}")))) == 2

    with pytest.raises(ParameterError):
        list(iter_corpus(parse_corpus_spec(f"g6file:{tmp_path / 'missing.g6'}")))

    bad = tmp_path / "bad.g6"
    bad.write_text("A_\nA\n")
    with pytest.raises(GraphParseError) as e:
        read_graph6_file(str(bad))
    assert "line 2" in str(e.value)


def test_parse_graph_argument(tmp_path):
    assert parse_graph_argument("g6:Bw") == build_named('complete', [3])
    assert parse_graph_argument("startri:2") == build_named('star_triangle', [2])
    assert parse_graph_argument("kbip:3,5") == build_named('complete_bipartite', [3, 5])
    assert parse_graph_argument("cycle:5") == build_named('cycle', [5])
    f = tmp_path / "p4.txt"
    f.write_text("n 4\n0 1\n1 2\n2 3\n")
    assert parse_graph_argument(str(f)) == build_named('path', [4])
    with pytest.raises(ParameterError):
        parse_graph_argument("wheel:5")
    with pytest.raises(ParameterError):
        parse_graph_argument("path:x")
