"""Strong factorization checks through the Fourier and Cesaro operators."""

import json

from ._core import (
    Error,
    Exponent,
    certify_inequality_cesaro,
    certify_inequality_fourier,
    cesaro_matrix,
    conjugate,
    diagonal_sandwich,
    dual_norm,
    eval_basis,
    fourier_coeffs,
    kellogg_norm,
    lp_norm,
    multiplier_exponent,
    operator_norm_estimate,
    weighted_lp_norm,
)
from . import _core


def cesaro_factor_check(A, h, p, q, r, tol=1e-9):
    return json.loads(_core.cesaro_factor_check_json(A, h, p, q, r, tol))


def cesaro_factor_check_j0(A, h, p, q, r, tol=1e-9):
    return json.loads(_core.cesaro_factor_check_j0_json(A, h, p, q, r, tol))


def fourier_factor_check(Tphi, r, p, q, tol=1e-9):
    return json.loads(_core.fourier_factor_check_json(Tphi, r, p, q, tol))


def matrix_factor_check(A, B, h, tol=1e-9):
    return json.loads(_core.matrix_factor_check_json(A, B, h, tol))


def run_suite(name, seed=0):
    return json.loads(_core.run_suite_json(name, seed))
