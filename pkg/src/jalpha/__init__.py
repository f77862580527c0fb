"""Exact computation of the rational functions J_alpha attached to positive
root-lattice elements, with independent cross-checks."""

from .betti import euler_characteristic, poincare_polynomial
from .engine import JTable, j_fermionic, j_toda_typeA, k_alpha_limit, k_alpha_recursive, numerator
from .errors import BudgetExceeded, MonopoleAnomaly, NonIntegerCoefficient, NotPolynomial, TheoremViolation, TodaError
from .lab import ScanReport, check_telescoping_identity, run_checks
from .monopole import monopole_series
from .poly import IntPoly, LaurentPoly, RatFunc
from .qseries import gaussian_binomial, invert_q, series_expand
from .rootsys import RootSystemSpec, norm_half, pairing, rho_pairing
from .typea import h_direct, h_recursive, narayana_polynomial

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "IntPoly",
    "JTable",
    "LaurentPoly",
    "MonopoleAnomaly",
    "NonIntegerCoefficient",
    "NotPolynomial",
    "RatFunc",
    "RootSystemSpec",
    "ScanReport",
    "TheoremViolation",
    "TodaError",
    "check_telescoping_identity",
    "euler_characteristic",
    "gaussian_binomial",
    "h_direct",
    "h_recursive",
    "invert_q",
    "j_fermionic",
    "j_toda_typeA",
    "k_alpha_limit",
    "k_alpha_recursive",
    "monopole_series",
    "narayana_polynomial",
    "norm_half",
    "numerator",
    "pairing",
    "poincare_polynomial",
    "rho_pairing",
    "run_checks",
    "series_expand",
]
