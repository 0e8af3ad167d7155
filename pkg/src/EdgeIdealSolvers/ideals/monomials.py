from dataclasses import dataclass
from typing import Iterable, Tuple

from EdgeIdealSolvers.configuration import MAX_AMBIENT_VARIABLES
from EdgeIdealSolvers.utilities.bitsets import bits, mask_of, popcount
from EdgeIdealSolvers.utilities.exceptions import CapabilityError, ParameterError


def check_ambient(n: int):
    if n < 0:
        raise ParameterError(f"Ambient variable count must be nonnegative, got {n}")
    if n > MAX_AMBIENT_VARIABLES:
        raise CapabilityError(f"At most {MAX_AMBIENT_VARIABLES} variables are supported, got n={n}")


def render_support(mask: int) -> str:
    if mask == 0:
        return "1"
    return "".join(f"x{i}" for i in bits(mask))


@dataclass(frozen=True)
class SqfMonomial:
    """x_F for a set F of variable indices, kept as a bitmask. The monomial 1 has mask 0."""
    n: int
    mask: int = 0

    def __post_init__(self):
        check_ambient(self.n)
        if self.mask < 0 or self.mask >> self.n:
            raise ParameterError(f"Support {bits(self.mask)} does not fit in {self.n} variables")

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "SqfMonomial":
        support = list(support)
        for i in support:
            if not 0 <= i < n:
                raise ParameterError(f"Variable index {i} outside 0..{n - 1}")
        return cls(n, mask_of(support))

    @property
    def support(self) -> Tuple[int, ...]:
        return bits(self.mask)

    @property
    def degree(self) -> int:
        return popcount(self.mask)

    def divides(self, other: "SqfMonomial") -> bool:
        return self.mask & ~other.mask == 0

    def lcm(self, other: "SqfMonomial") -> "SqfMonomial":
        return SqfMonomial(self.n, self.mask | other.mask)

    def __str__(self):
        return render_support(self.mask)


@dataclass(frozen=True)
class Monomial:
    """General monomial by exponent vector; only used for symbolic power membership."""
    exponents: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'exponents', tuple(int(e) for e in self.exponents))
        if any(e < 0 for e in self.exponents):
            raise ParameterError(f"Exponents must be nonnegative, got {self.exponents}")
        check_ambient(len(self.exponents))

    @classmethod
    def from_sqf(cls, m: SqfMonomial) -> "Monomial":
        return cls(tuple(m.mask >> i & 1 for i in range(m.n)))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def degree_in(self, variables_mask: int) -> int:
        return sum(self.exponents[i] for i in bits(variables_mask) if i < self.n)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.n != other.n:
            raise ParameterError(f"Cannot multiply monomials in {self.n} and {other.n} variables")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self):
        parts = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(self.exponents) if e]
        return "".join(parts) or "1"
