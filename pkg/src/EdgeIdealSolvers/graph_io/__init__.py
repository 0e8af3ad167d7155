from EdgeIdealSolvers.graph_io.corpus import CorpusSpec, iter_corpus, parse_corpus_spec, parse_graph_argument
from EdgeIdealSolvers.graph_io.edge_list import parse_edge_list
from EdgeIdealSolvers.graph_io.enumeration import canonical_form, enumerate_graphs
from EdgeIdealSolvers.graph_io.graph6 import encode_graph6, parse_graph6
