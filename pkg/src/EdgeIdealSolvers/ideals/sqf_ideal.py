from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, NamedTuple, Sequence, Tuple, Union

from EdgeIdealSolvers.ideals.monomials import SqfMonomial, check_ambient, render_support
from EdgeIdealSolvers.utilities.bitsets import bits, mask_of, popcount, support_key
from EdgeIdealSolvers.utilities.exceptions import DomainError, ParameterError


def minimal_masks(masks: Iterable[int]) -> Tuple[int, ...]:
    """Drop every mask that contains another one; result sorted by degree, then lexicographic support."""
    kept: List[int] = []
    for m in sorted(set(masks), key=support_key):
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class SqfIdeal:
    """
    Squarefree monomial ideal in n variables, given by its minimal generators as bitmasks.

    masks is reduced to a canonically sorted antichain on construction, so == is ideal equality. The zero ideal has no
    generators, the unit ideal has the single generator 1 (mask 0).
    """
    n: int
    masks: Tuple[int, ...] = ()

    def __post_init__(self):
        check_ambient(self.n)
        masks = tuple(int(m) for m in self.masks)
        for m in masks:
            if m < 0 or m >> self.n:
                raise ParameterError(f"Generator {bits(m)} does not fit in {self.n} variables")
        object.__setattr__(self, 'masks', minimal_masks(masks))

    @classmethod
    def zero(cls, n: int) -> "SqfIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "SqfIdeal":
        return cls(n, (0,))

    @classmethod
    def from_supports(cls, n: int, supports: Iterable[Iterable[int]]) -> "SqfIdeal":
        return minimalize([SqfMonomial.from_support(n, s) for s in supports], n)

    @property
    def is_zero(self) -> bool:
        return len(self.masks) == 0

    @property
    def is_unit(self) -> bool:
        return self.masks == (0,)

    @property
    def gens(self) -> List[SqfMonomial]:
        return [SqfMonomial(self.n, m) for m in self.masks]

    @property
    def support_mask(self) -> int:
        out = 0
        for m in self.masks:
            out |= m
        return out

    def require_proper_nonzero(self, what: str):
        if self.is_zero:
            raise DomainError(f"{what} is undefined for the zero ideal")
        if self.is_unit:
            raise DomainError(f"{what} is undefined for the unit ideal")

    @cached_property
    def minimal_prime_masks(self) -> Tuple[int, ...]:
        """
        Minimal transversals of the generator supports (Berge's incremental construction). Each one is the variable
        set of a minimal prime.
        """
        self.require_proper_nonzero("minimal_primes")
        transversals = [0]
        for e in self.masks:
            extended = set()
            for t in transversals:
                if t & e:
                    extended.add(t)
                else:
                    extended.update(t | (1 << v) for v in bits(e))
            transversals = list(minimal_masks(extended))
        return tuple(transversals)

    def lift(self, n: int, index_map: Sequence[int]) -> "SqfIdeal":
        """Re-embed into n variables, variable k going to index_map[k]."""
        if len(index_map) != self.n:
            raise ParameterError(f"Index map of length {len(index_map)} does not match {self.n} variables")
        masks = [mask_of(index_map[i] for i in bits(m)) for m in self.masks]
        return SqfIdeal(n, tuple(masks))

    def __str__(self):
        if self.is_zero:
            return "0"
        return "(" + ", ".join(render_support(m) for m in self.masks) + ")"


def minimalize(gens: Iterable[Union[SqfMonomial, int]], n: int) -> SqfIdeal:
    masks = []
    for g in gens:
        if isinstance(g, SqfMonomial):
            if g.n != n:
                raise ParameterError(f"Monomial in {g.n} variables passed to an ideal in {n} variables")
            masks.append(g.mask)
        else:
            masks.append(int(g))
    return SqfIdeal(n, tuple(masks))


def _same_ambient(J: SqfIdeal, K: SqfIdeal):
    if J.n != K.n:
        raise ParameterError(f"Ambient mismatch: ideals in {J.n} and {K.n} variables")


def ideal_sum(J: SqfIdeal, K: SqfIdeal) -> SqfIdeal:
    _same_ambient(J, K)
    return SqfIdeal(J.n, tuple(J.masks + K.masks))


def intersect(J: SqfIdeal, K: SqfIdeal) -> SqfIdeal:
    _same_ambient(J, K)
    return SqfIdeal(J.n, tuple(a | b for a in J.masks for b in K.masks))


def colon(J: SqfIdeal, m: SqfMonomial) -> SqfIdeal:
    if m.n != J.n:
        raise ParameterError(f"Ambient mismatch: monomial in {m.n} variables, ideal in {J.n}")
    if J.is_zero:
        raise DomainError(f"Colon of the zero ideal by {m} requested; callers must handle the zero ideal themselves")
    return SqfIdeal(J.n, tuple(u & ~m.mask for u in J.masks))


def restrict(J: SqfIdeal, U: Iterable[int]) -> SqfIdeal:
    """Keep the generators whose support avoids U."""
    U_mask = mask_of(U)
    if U_mask >> J.n:
        raise ParameterError(f"Variables {bits(U_mask >> J.n << J.n)} outside the {J.n} variables of the ideal")
    return SqfIdeal(J.n, tuple(u for u in J.masks if u & U_mask == 0))


def contains(J: SqfIdeal, K: SqfIdeal) -> bool:
    """True if K is a subideal of J."""
    _same_ambient(J, K)
    return all(any(a & ~b == 0 for a in J.masks) for b in K.masks)


def variables_ideal(n: int, variables: Iterable[int]) -> SqfIdeal:
    return SqfIdeal.from_supports(n, [(v,) for v in variables])


def minimal_primes(J: SqfIdeal) -> List[frozenset]:
    return [frozenset(bits(p)) for p in J.minimal_prime_masks]


def height(J: SqfIdeal) -> int:
    return min(popcount(p) for p in J.minimal_prime_masks)


class GeneratorDegrees(NamedTuple):
    min_degree: int
    max_degree: int
    degrees: Counter


def generator_degrees(J: SqfIdeal) -> GeneratorDegrees:
    J.require_proper_nonzero("generator_degrees")
    degrees = Counter(popcount(m) for m in J.masks)
    return GeneratorDegrees(min(degrees), max(degrees), degrees)
