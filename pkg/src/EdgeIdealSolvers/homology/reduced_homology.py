from typing import Dict, Iterable, List, Optional, Union

import numpy as np

from EdgeIdealSolvers.homology.field_rank import FieldSpec, matrix_rank
from EdgeIdealSolvers.homology.simplicial_complex import SimplicialComplex, as_vertex_mask
from EdgeIdealSolvers.utilities.bitsets import bits, popcount
from EdgeIdealSolvers.utilities.exceptions import ParameterError


def boundary_matrix(faces: List[int], lower_faces: List[int]) -> np.ndarray:
    """
    Matrix of the simplicial boundary from the faces of one dimension to the faces of the dimension below. Removing
    the k-th vertex (in increasing order) carries the sign (-1)^k.
    """
    row_of = {f: r for r, f in enumerate(lower_faces)}
    M = np.zeros((len(lower_faces), len(faces)), dtype=object)
    for col, face in enumerate(faces):
        for k, v in enumerate(bits(face)):
            M[row_of[face & ~(1 << v)], col] = -1 if k % 2 else 1
    return M


def reduced_euler_characteristic(c: SimplicialComplex, W: Union[int, Iterable[int]]) -> int:
    by_dim = c.restriction(as_vertex_mask(W)).faces_by_dimension()
    return sum((-1) ** d * len(faces) for d, faces in by_dim.items())


def reduced_betti(c: SimplicialComplex, W: Union[int, Iterable[int]], field: Optional[FieldSpec] = None) -> List[int]:
    """
    Dimensions of the reduced homology of c|_W over field, for d = -1 .. |W|-1 (entry k is H~_{k-1}).

    The void complex has no homology at all, the irrelevant complex {emptyset} has H~_{-1} of dimension 1.
    """
    field = FieldSpec(0) if field is None else field
    W = as_vertex_mask(W)
    if W >> c.n:
        raise ParameterError(f"W = {bits(W)} is not a subset of the {c.n} vertices of the complex")
    size = popcount(W)
    dims = [0] * (size + 1)
    restricted = c.restriction(W)
    if restricted.is_void:
        return dims

    by_dim: Dict[int, List[int]] = restricted.faces_by_dimension()
    top = max(by_dim)
    # ranks[d] = rank of the boundary from dimension d to d - 1
    ranks = {d: matrix_rank(boundary_matrix(by_dim[d], by_dim[d - 1]), field) for d in range(0, top + 1)}
    for d in range(-1, top + 1):
        dims[d + 1] = len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        assert dims[d + 1] >= 0, f"negative homology dimension in degree {d}, rank computation is broken"

    euler = sum((-1) ** d * dims[d + 1] for d in range(-1, size))
    assert euler == sum((-1) ** d * len(f) for d, f in by_dim.items()), \
        f"Euler characteristic mismatch for facets {restricted.facets}"
    return dims
