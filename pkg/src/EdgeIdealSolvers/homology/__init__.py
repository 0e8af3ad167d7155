from EdgeIdealSolvers.homology.field_rank import FieldSpec, matrix_rank
from EdgeIdealSolvers.homology.reduced_homology import boundary_matrix, reduced_betti, reduced_euler_characteristic
from EdgeIdealSolvers.homology.simplicial_complex import SimplicialComplex, stanley_reisner
