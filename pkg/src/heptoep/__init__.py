"""Eigenvalues of symmetric heptadiagonal Toeplitz matrices with symbol (t - 2 + 1/t)^3.

The package solves the secular equations tan(((n+3)/2) phi) = f(phi) and
tan(((n+3)/2) phi) = 1/h(phi) by a contracting fixed-point iteration (all n
eigenvalues in O(n) per sweep), provides closed-form asymptotic
approximations per eigenvalue, and validates both against an independent
banded-factorization bisection oracle and a Chebyshev determinant identity.
"""

from .aux_functions import (AuxDerivatives, AuxValues, eval_aux,
                            eval_aux_derivatives, eval_beta, taylor_small_phi)
from .asymptotic_formulas import (ExpansionCoeffs, Regime, eigenvalue_expansion,
                                  eigenvalue_via_phi, eval_Z1, expansion_far,
                                  expansion_near, extreme_eigenvalue,
                                  phi_expansion, regime)
from .eigen_solver import (RootResult, SolverOptions, SpectrumResult,
                           full_spectrum, solve_even_root, solve_odd_root)
from .reference_oracle import (ChebDetValue, EigenCount, bisect_spectrum,
                               chebyshev_det, det_root_residual, ldlt_negcount,
                               reference_spectrum)
from .secular_equations import SecularValue, eval_F, eval_G, eval_f, eval_h
from .symbol_model import (BandedMatrix, GridIndex, PhasePoint,
                           SymbolCoefficients, build_matrix, eval_g,
                           eval_g_derivatives, fourier_coefficients, g_inverse,
                           grid_point)

__version__ = "0.1.0"

__all__ = [
    "AuxDerivatives", "AuxValues", "BandedMatrix", "ChebDetValue", "EigenCount",
    "ExpansionCoeffs", "GridIndex", "PhasePoint", "Regime", "RootResult",
    "SecularValue", "SolverOptions", "SpectrumResult", "SymbolCoefficients",
    "bisect_spectrum", "build_matrix", "chebyshev_det", "det_root_residual",
    "eigenvalue_expansion", "eigenvalue_via_phi", "eval_F", "eval_G", "eval_Z1",
    "eval_aux", "eval_aux_derivatives", "eval_beta", "eval_f", "eval_g",
    "eval_g_derivatives", "eval_h", "expansion_far", "expansion_near",
    "extreme_eigenvalue", "fourier_coefficients", "full_spectrum", "g_inverse",
    "grid_point", "ldlt_negcount", "phi_expansion", "reference_spectrum",
    "regime", "solve_even_root", "solve_odd_root", "taylor_small_phi",
]
