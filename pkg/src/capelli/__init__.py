"""Exact construction and verification of the central elements of the
classical enveloping algebras.

The package computes, with exact rational arithmetic throughout, the two
distinguished families of invariants of U(so_N) and U(sp_N) (and the
classical Capelli elements of U(gl_N)), their images as differential
operators, and verifies every defining identity at small rank: the
determinant/permanent identities, the Pfaffian and Hafnian formulas,
the R-matrix fusion constructions, the quantum-determinant formula, the
dual-pair transfer, and the generating-series inversion.
"""

from .core import DimensionError, ExactDivisionError, PoleError, RatFun, Scalar, SymPoly, det, per
from .symfun import (
    Partition,
    ShiftSequence,
    a_lambda,
    check_characterization,
    check_generating_series,
    e_factorial,
    factorial_power,
    h_factorial,
    schur_factorial,
)
from .weyl import (
    WeylContext,
    WeylOperator,
    cayley_omega,
    cayley_theta,
    omega_AI,
    singular_vector,
    theta_AI,
)
from .uea import (
    CentralElement,
    CentralSeries,
    LieContext,
    UEAElement,
    c_k_pfaffian,
    capelli_element_e,
    capelli_element_h,
    central_series,
    d_k_hafnian,
    dual_pair_coeffs,
    eigenvalue_on_hwv,
    gamma,
    gamma_prime,
    hafnian_psi,
    hc_polynomial,
    pbw_normal_form,
    pfaffian_phi,
)
from .tensor import (
    TMat,
    build_basic,
    fused_F,
    fusion_capelli,
    generating_functions,
    quantum_det_gl,
    sklyanin_det,
    theorem_62_check,
    verify_relations,
    verify_vanishing,
)
from .suites import SUITES, run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
