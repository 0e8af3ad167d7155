from dataclasses import dataclass

import numpy as np

from EdgeIdealSolvers.utilities.exceptions import ParameterError

MAX_PRIME = 2 ** 31  # keeps products of residues inside int64


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 means the rationals, otherwise the prime field GF(p)."""
    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not _is_prime(p):
            raise ParameterError(f"Field characteristic must be 0 or a prime, got {p}")
        if p >= MAX_PRIME:
            raise ParameterError(f"Prime fields are supported for p < {MAX_PRIME}, got {p}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        text = str(text).strip()
        if text.upper() in ('Q', 'QQ', '0'):
            return cls(0)
        if text.upper().startswith('GF(') and text.endswith(')'):
            text = text[3:-1]
        try:
            return cls(int(text))
        except ValueError:
            raise ParameterError(f"Cannot parse field '{text}', use Q or a prime such as 2") from None

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"


def _rank_rational(matrix: np.ndarray) -> int:
    # fraction-free (Bareiss) elimination on python ints; every division is exact
    M = matrix.astype(object).copy()
    rows, cols = M.shape
    rank = 0
    previous_pivot = 1
    for c in range(cols):
        if rank == rows:
            break
        nonzero = [r for r in range(rank, rows) if M[r, c] != 0]
        if not nonzero:
            continue
        p = nonzero[0]
        if p != rank:
            M[[rank, p]] = M[[p, rank]]
        pivot = M[rank, c]
        for r in range(rank + 1, rows):
            M[r, c + 1:] = (pivot * M[r, c + 1:] - M[r, c] * M[rank, c + 1:]) // previous_pivot
            M[r, c] = 0
        previous_pivot = pivot
        rank += 1
    return rank


def _rank_mod_p(matrix: np.ndarray, p: int) -> int:
    M = np.mod(matrix.astype(np.int64), p)
    rows, cols = M.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nonzero = np.nonzero(M[rank:, c])[0]
        if len(nonzero) == 0:
            continue
        r = rank + int(nonzero[0])
        if r != rank:
            M[[rank, r]] = M[[r, rank]]
        inverse = pow(int(M[rank, c]), p - 2, p)
        M[rank] = (M[rank] * inverse) % p
        factors = M[rank + 1:, c].copy()
        M[rank + 1:] = (M[rank + 1:] - np.outer(factors, M[rank])) % p
        rank += 1
    return rank


def matrix_rank(matrix: np.ndarray, field: FieldSpec) -> int:
    """Exact rank of an integer matrix over the given field. No floating point anywhere."""
    if matrix.size == 0:
        return 0
    if field.characteristic == 0:
        return _rank_rational(matrix)
    return _rank_mod_p(matrix, field.characteristic)
