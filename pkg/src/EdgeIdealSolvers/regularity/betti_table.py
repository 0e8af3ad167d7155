from collections import Counter
from dataclasses import dataclass, field as dataclass_field
from multiprocessing import get_context
from typing import Dict, List, Optional, Tuple

import pandas as pd

from EdgeIdealSolvers.homology.field_rank import FieldSpec
from EdgeIdealSolvers.homology.reduced_homology import reduced_betti
from EdgeIdealSolvers.homology.simplicial_complex import SimplicialComplex, stanley_reisner
from EdgeIdealSolvers.ideals.sqf_ideal import SqfIdeal
from EdgeIdealSolvers.utilities.bitsets import popcount, submasks


@dataclass
class BettiTable:
    """
    Graded Betti numbers beta_{i,j}(S/J), only nonzero entries stored.

    The ideal's own numbers are shifted: beta_{i,j}(J) = beta_{i+1,j}(S/J). Use ideal_betti() for those instead of
    shifting by hand.
    """
    n: int
    field: FieldSpec
    entries: Dict[Tuple[int, int], int] = dataclass_field(default_factory=dict)

    def betti(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def ideal_betti(self, i: int, j: int) -> int:
        return self.betti(i + 1, j)

    @property
    def ideal_entries(self) -> Dict[Tuple[int, int], int]:
        return {(i - 1, j): b for (i, j), b in self.entries.items() if i >= 1}

    @property
    def reg_quotient(self) -> int:
        return max(j - i for (i, j) in self.entries)

    @property
    def reg_ideal(self) -> int:
        return self.reg_quotient + 1

    @property
    def projective_dimension(self) -> int:
        return max(i for (i, j) in self.entries)

    def to_frame(self) -> pd.DataFrame:
        """The usual Betti diagram: row r holds beta_{i,i+r}(S/J) in column i, plus a total row."""
        columns = list(range(self.projective_dimension + 1))
        rows = list(range(self.reg_quotient + 1))
        frame = pd.DataFrame([[self.betti(i, i + r) for i in columns] for r in rows], index=rows, columns=columns)
        frame.loc['total'] = frame.sum(axis=0)
        return frame

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'field': str(self.field),
            'entries': [[i, j, b] for (i, j), b in sorted(self.entries.items())],
            'reg_quotient': self.reg_quotient,
            'reg_ideal': self.reg_ideal,
        }


def _scan(complex_: SimplicialComplex, subsets: List[int], field: FieldSpec) -> Counter:
    # Hochster: beta_{i,j}(S/J) gets dim H~_{j-i-1}(Delta|_W) from every W with |W| = j
    partial = Counter()
    for W in subsets:
        j = popcount(W)
        for k, dim in enumerate(reduced_betti(complex_, W, field)):
            if dim:
                partial[(j - k, j)] += dim
    return partial


def betti_table(J: SqfIdeal, field: Optional[FieldSpec] = None, prune_free_vertices: bool = True,
                num_processes: int = 1) -> BettiTable:
    """
    Graded Betti numbers of S/J by Hochster's formula.

    :param J: proper nonzero squarefree ideal
    :param field: coefficient field, characteristic 0 if None
    :param prune_free_vertices: variables outside every generator are cone points of the Stanley-Reisner complex and
    contribute nothing, so by default W only ranges over the support of J
    :param num_processes: >1 splits the W-scan over a process pool and merges the partial tables
    """
    field = FieldSpec(0) if field is None else field
    J.require_proper_nonzero("betti_table")
    complex_ = stanley_reisner(J)
    vertices = J.support_mask if prune_free_vertices else (1 << J.n) - 1
    subsets = sorted(submasks(vertices), key=lambda w: (popcount(w), w))

    if num_processes <= 1:
        total = _scan(complex_, subsets, field)
    else:
        chunks = [subsets[k::num_processes] for k in range(num_processes)]
        with get_context("spawn").Pool(num_processes) as pool:
            partials = pool.starmap(_scan, [(complex_, chunk, field) for chunk in chunks])
        total = sum(partials, Counter())

    table = BettiTable(J.n, field, dict(sorted(total.items())))
    assert table.betti(0, 0) == 1, f"beta_00 must be 1 for a proper nonzero ideal, got {table.betti(0, 0)}"
    return table


def regularity(J: SqfIdeal, field: Optional[FieldSpec] = None) -> int:
    """reg(J) = reg(S/J) + 1."""
    return betti_table(J, field).reg_ideal
