"""Exact reversible-logic synthesis toolkit.

Two synthesis regimes: bounded-ancilla circuits via exact ESOP (xor-cover)
minimization, and ancilla-free optimal circuits via shortest paths over the
permutation graph, plus a constructive sorting-based synthesizer and a 0-1
ILP encoding with a reference solver.
"""

__version__ = "0.1.0"

from revsynth.core import *  # noqa: F401,F403
from revsynth.errors import (  # noqa: F401
    CensusWidthError,
    CostModelError,
    FormatError,
    InfeasibleAtBudgetError,
    RevsynthError,
    SearchBudgetError,
)
