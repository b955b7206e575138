"""Exact hybrid solver for quantifier-free strict polynomial constraints over the reals.

Local search with line and plane cell-jumps, an MCSAT engine with sample-cell
explanations, and an open CAD fallback, all on exact rational arithmetic.
"""
from .formula import Atom, Clause, Literal, PolyFormula, eval_formula, normalize
from .hybrid import HybridParams, HybridResult, hybrid_solve
from .localsearch import LSParams, run_2d_ls
from .mcsat import mcsat_solve
from .opencad import opencad_solve
from .poly import Poly

__version__ = "0.1.0"

__all__ = [
    "Atom", "Clause", "Literal", "PolyFormula", "eval_formula", "normalize",
    "HybridParams", "HybridResult", "hybrid_solve",
    "LSParams", "run_2d_ls", "mcsat_solve", "opencad_solve", "Poly",
]
