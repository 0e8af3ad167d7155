from EdgeIdealSolvers.regularity.betti_table import BettiTable, betti_table, regularity
