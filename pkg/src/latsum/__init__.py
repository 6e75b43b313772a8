"""High-precision classic and polyanalytic lattice sums.

Four mutually cross-checking computation paths: direct double-sum oracle in
Eisenstein order, exponentially convergent trigonometric series, algebraic
recurrences, and exact symbolic polynomials in complete elliptic integrals
evaluated in gamma closed form at singular moduli.
"""

from .precision import DEFAULT_CTX, PrecisionContext
from .special import (EllipticModulus, ellip_e, ellip_k, modulus_from_ratio,
                      modulus_ratio)
from .lattice import (Family, LatticeSpec, Method, SumIndex, SumValue,
                      hexagonal, make_lattice, rectangular, rhombic, square,
                      symmetry_vanishes)
from .oracle import sum_absolute, sum_eisenstein
from .trig import classic_sum, eps_l, s2_rayleigh, sum_fast
from .recurrence import classic_sums, s1_sum, s1_sums
from .symbolic import (FamilyAxis, GaussianRational, SymExpr,
                       apply_derivative_operator, assemble_sum,
                       differentiate_k, eval_sym, eval_sym_values, v_derived,
                       v_even)
from .singular import SingularModulusRecord, exact_sum, singular_modulus
from .closed_forms import closed_value
from .functions import FunctionKind, isotropy_e2, weierstrass_series

__all__ = [
    "DEFAULT_CTX", "PrecisionContext",
    "EllipticModulus", "ellip_e", "ellip_k", "modulus_from_ratio", "modulus_ratio",
    "Family", "LatticeSpec", "Method", "SumIndex", "SumValue",
    "hexagonal", "make_lattice", "rectangular", "rhombic", "square",
    "symmetry_vanishes",
    "sum_absolute", "sum_eisenstein",
    "classic_sum", "eps_l", "s2_rayleigh", "sum_fast",
    "classic_sums", "s1_sum", "s1_sums",
    "FamilyAxis", "GaussianRational", "SymExpr", "apply_derivative_operator",
    "assemble_sum", "differentiate_k", "eval_sym", "eval_sym_values",
    "v_derived", "v_even",
    "SingularModulusRecord", "exact_sum", "singular_modulus",
    "closed_value",
    "FunctionKind", "isotropy_e2", "weierstrass_series",
]

__version__ = "1.0.0"
