from EdgeIdealSolvers.ideals.monomials import Monomial, SqfMonomial
from EdgeIdealSolvers.ideals.powers import edge_ideal, sqf_power, sqf_symbolic, symbolic_member
from EdgeIdealSolvers.ideals.sqf_ideal import SqfIdeal, colon, contains, generator_degrees, height, ideal_sum, \
    intersect, minimal_primes, minimalize, restrict, variables_ideal
