"""Numba-compiled twins of the integrand kernels in ``_kernels_numpy``.

Same signatures, same arithmetic, scalar loops instead of vectorized numpy
calls.  IEEE semantics are kept (no fastmath) so results are deterministic.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit


@njit(cache=True)
def _axis_factor_scalar(w, lam_min, lam_max, exponent):
    dl = lam_max - lam_min
    alpha = (math.hypot(lam_min, w) + math.hypot(lam_max, w)) / dl
    beta_sq = (alpha - 1.0) * (alpha + 1.0)
    r = alpha + math.sqrt(beta_sq)
    return math.exp(-exponent * math.log(r)) / (4.0 * beta_sq)


@njit(cache=True)
def axis_decay_factor(omega, lam_min, lam_max, exponent):
    out = np.empty_like(omega)
    for k in range(omega.shape[0]):
        out[k] = _axis_factor_scalar(omega[k], lam_min, lam_max, exponent)
    return out


@njit(cache=True)
def resolvent_pair_integrand(omega, lam_min_r, lam_max_r, exp_r, lam_min_c, lam_max_c, exp_c):
    out = np.empty_like(omega)
    for k in range(omega.shape[0]):
        fr = _axis_factor_scalar(omega[k], lam_min_r, lam_max_r, exp_r)
        fc = _axis_factor_scalar(omega[k], lam_min_c, lam_max_c, exp_c)
        out[k] = fr * fc
    return out


@njit(cache=True)
def mixed_axis_integrand(omega, lam_min, lam_max, exponent):
    out = np.empty_like(omega)
    for k in range(omega.shape[0]):
        f = _axis_factor_scalar(omega[k], lam_min, lam_max, exponent)
        out[k] = f / math.hypot(lam_min, omega[k])
    return out
