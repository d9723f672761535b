"""Exact computer algebra for monoidal Hom-Hopf structures.

Structure constants over Q or GF(p), exhaustive axiom checkers, a linear
feasibility solver for normalized integrals, separability retractions and
Maschke-style splittings, plus Yetter-Drinfeld instantiations and a CLI.
"""

from .linalg import Field, Matrix, Tensor3

__all__ = ["Field", "Matrix", "Tensor3"]
__version__ = "0.1.0"
