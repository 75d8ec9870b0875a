"""Exact Satake images of GL_n and Sp_n Hecke operators over Q(p)."""

from .coeffs import CoefficientError, IntPolyP, PoleError, RatFuncP, parse_poly, poly_str, rf_arith, rf_eval
from .gl_spherical import (
    GLDiagType,
    OracleBudgetError,
    enumerate_cosets,
    omega_gl,
    omega_pi,
    omega_t_closed,
    omega_t_oracle,
    tamagawa_check,
)
from .hecke_expr import (
    AnsatzSolution,
    HeckePoly,
    E_explicit,
    F_explicit,
    auto_template,
    functional_equation,
    omega_image,
    paper_template,
    solve_ansatz,
    verify_shimura,
)
from .linalg import LinearSolveResult, bareiss_solve
from .multipoly import (
    MPoly,
    SymmetryError,
    elem_sym,
    from_sym_basis,
    substitute,
    sym_genfun,
    sym_orbit,
    to_sym_basis,
)
from .series import XSeries, series_arith, series_inv
from .sp_spherical import (
    P_poly,
    Q_poly,
    R_series,
    VerificationError,
    nu_check,
    omega_generator,
    omega_Ti_p2,
    omega_Tp,
    phi,
    sm,
    sm_count_check,
)

__version__ = "0.1.0"
