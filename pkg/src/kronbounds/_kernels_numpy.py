"""Pure-numpy implementations of the hot quadrature integrand kernels.

Each function takes an array of nonnegative frequencies and returns the
integrand values.  The per-axis decay factor R^2/(R^2-1)^2 * R^(-e) is
evaluated as exp(-e log R) / (4 (alpha^2 - 1)), which is the same quantity
written without forming large powers of R.
"""

from __future__ import annotations

import numpy as np


def axis_decay_factor(omega, lam_min, lam_max, exponent):
    """Shifted-resolvent decay factor of one Kronecker axis at each frequency."""
    dl = lam_max - lam_min
    alpha = (np.hypot(lam_min, omega) + np.hypot(lam_max, omega)) / dl
    beta_sq = (alpha - 1.0) * (alpha + 1.0)
    r = alpha + np.sqrt(beta_sq)
    return np.exp(-exponent * np.log(r)) / (4.0 * beta_sq)


def resolvent_pair_integrand(omega, lam_min_r, lam_max_r, exp_r, lam_min_c, lam_max_c, exp_c):
    """Integrand for entries whose row and column grid coordinates both differ."""
    fr = axis_decay_factor(omega, lam_min_r, lam_max_r, exp_r)
    fc = axis_decay_factor(omega, lam_min_c, lam_max_c, exp_c)
    return fr * fc


def mixed_axis_integrand(omega, lam_min, lam_max, exponent):
    """Integrand for entries with exactly one matching grid coordinate."""
    f = axis_decay_factor(omega, lam_min, lam_max, exponent)
    return f / np.hypot(lam_min, omega)
