"""Exact Hochschild (co)homology of ungraded exterior algebras.

Everything is computed over exact scalars (rationals or prime fields):
the minimal resolution, the (co)chain complexes and their ranks, the
closed dimension formulas, the cup product ring, and an independent
reduced bar-complex oracle used to cross-check the small complexes.
"""

__version__ = "0.1.0"
