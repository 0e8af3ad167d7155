from dataclasses import dataclass
from typing import Dict, Iterable, List, Union

from EdgeIdealSolvers.ideals.monomials import check_ambient
from EdgeIdealSolvers.ideals.sqf_ideal import SqfIdeal
from EdgeIdealSolvers.utilities.bitsets import bits, mask_of, popcount, submasks, support_key
from EdgeIdealSolvers.utilities.exceptions import DomainError, ParameterError


def _maximal_masks(masks: Iterable[int]) -> tuple:
    kept: List[int] = []
    for m in sorted(set(masks), key=support_key, reverse=True):
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=support_key))


@dataclass(frozen=True)
class SimplicialComplex:
    """
    Simplicial complex on the vertices 0..n-1 given by its facets (bitmasks).

    facets == () is the void complex (no faces at all), facets == (0,) the irrelevant complex {emptyset}.
    """
    n: int
    facets: tuple = ()

    def __post_init__(self):
        check_ambient(self.n)
        object.__setattr__(self, 'facets', _maximal_masks(self.facets))
        for f in self.facets:
            if f >> self.n:
                raise ParameterError(f"Facet {bits(f)} does not fit in {self.n} vertices")

    @property
    def is_void(self) -> bool:
        return len(self.facets) == 0

    def is_face(self, face: int) -> bool:
        return any(face & ~f == 0 for f in self.facets)

    def restriction(self, W: int) -> "SimplicialComplex":
        """c|_W = {F in c : F subset W}; its facets are the maximal traces of the facets of c on W."""
        if self.is_void:
            return self
        return SimplicialComplex(self.n, tuple(f & W for f in self.facets))

    def faces_by_dimension(self) -> Dict[int, List[int]]:
        """All faces grouped by dimension (the empty face has dimension -1), each list in canonical order."""
        faces = set()
        for f in self.facets:
            faces.update(submasks(f))
        out: Dict[int, List[int]] = {}
        for face in sorted(faces, key=support_key):
            out.setdefault(popcount(face) - 1, []).append(face)
        return out

    def f_vector(self) -> List[int]:
        """f_{-1}, f_0, ..., f_dim."""
        by_dim = self.faces_by_dimension()
        if not by_dim:
            return []
        return [len(by_dim.get(d, [])) for d in range(-1, max(by_dim) + 1)]


def stanley_reisner(J: SqfIdeal) -> SimplicialComplex:
    """
    Faces are the F with x_F outside J. The facets are the complements of the minimal primes, and the zero ideal gives
    the full simplex.
    """
    if J.is_unit:
        raise DomainError("The unit ideal has no Stanley-Reisner complex (it would be void)")
    everything = (1 << J.n) - 1
    if J.is_zero:
        return SimplicialComplex(J.n, (everything,))
    return SimplicialComplex(J.n, tuple(everything & ~p for p in J.minimal_prime_masks))


def as_vertex_mask(W: Union[int, Iterable[int]]) -> int:
    if isinstance(W, int):
        return W
    return mask_of(W)