from EdgeIdealSolvers.graphs.graph import Graph, build_named, delete_vertices, induced_subgraph
from EdgeIdealSolvers.graphs.invariants import InvariantReport, classify, induced_matching_number, is_chordal, \
    matching_number, maximum_independent_set_size, minimal_vertex_covers, ordered_matching_number, simplicial_vertices
