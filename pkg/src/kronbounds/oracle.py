"""Dense ground truth at desk scale.

Assembles Kronecker sums, factors them, and produces exact inverse columns
and inverse-transpose Cholesky factor entries against which every bound is
certified.  Dense algorithms only; trustworthiness over speed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .banded import BandedSymmetricMatrix, NotSPDError

_ORDER_CAP = 10_000


@dataclass(frozen=True, eq=False)
class CholeskyFactor:
    """Lower-triangular factor L with positive diagonal, A = L L^T."""

    lower: np.ndarray

    def __post_init__(self):
        arr = np.array(self.lower, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "lower", arr)

    @property
    def order(self) -> int:
        return self.lower.shape[0]


def assemble_kronecker_sum(m1: BandedSymmetricMatrix, m2: BandedSymmetricMatrix) -> np.ndarray:
    """Dense S = M1 (x) I + I (x) M2 of order n1 * n2."""
    order = m1.n * m2.n
    if order > _ORDER_CAP:
        raise ValueError(f"order {order} exceeds the desk-scale cap {_ORDER_CAP}")
    return np.kron(m1.to_dense(), np.eye(m2.n)) + np.kron(np.eye(m1.n), m2.to_dense())


def cholesky(a: np.ndarray) -> CholeskyFactor:
    """Cholesky factor of a symmetric positive definite dense matrix."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("a square matrix is required")
    scale = float(np.max(np.abs(a))) or 1.0
    if float(np.max(np.abs(a - a.T))) > 1e-14 * scale:
        raise ValueError("matrix is not symmetric")
    try:
        lower = np.linalg.cholesky(a)
    except np.linalg.LinAlgError as exc:
        raise NotSPDError(f"not positive definite: {exc}") from exc
    return CholeskyFactor(lower)


def inverse_column(a: np.ndarray, t: int, factor: CholeskyFactor | None = None) -> np.ndarray:
    """Column t (1-based) of A^{-1}, i.e. the solution of A x = e_t.

    Passing a precomputed factor lets independent columns share one
    factorization.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    if not (1 <= t <= n):
        raise IndexError(f"column {t} out of range 1..{n}")
    if factor is None:
        factor = cholesky(a)
    e = np.zeros(n)
    e[t - 1] = 1.0
    y = scipy.linalg.solve_triangular(factor.lower, e, lower=True)
    x = scipy.linalg.solve_triangular(factor.lower.T, y, lower=False)
    residual = float(np.max(np.abs(a @ x - e)))
    norm_a = float(np.max(np.sum(np.abs(a), axis=1)))
    if residual > 1e-10 * norm_a:
        raise ArithmeticError(f"solve residual {residual} exceeds 1e-10 * ||A||_inf")
    return x


def lyapunov_residual(
    m1: BandedSymmetricMatrix, m2: BandedSymmetricMatrix, xt: np.ndarray, t: int
) -> float:
    """Frobenius residual ||M2 X + X M1 - E_t||_F of the matrix equation.

    With vec stacking columns, column t of (M1 (x) I + I (x) M2)^{-1}
    reshaped to shape (order of M2, order of M1) in column-major order
    solves M2 X + X M1 = E_t, where E_t = e_i e_j^T places the unit entry
    at i = t - n2 floor((t-1)/n2), j = floor((t-1)/n2) + 1.
    """
    xt = np.asarray(xt, dtype=float)
    n1, n2 = m1.n, m2.n
    if xt.shape != (n2, n1):
        raise ValueError(f"solution matrix must have shape ({n2}, {n1}), got {xt.shape}")
    if not (1 <= t <= n1 * n2):
        raise IndexError(f"index {t} out of range 1..{n1 * n2}")
    j = (t - 1) // n2 + 1
    i = t - n2 * ((t - 1) // n2)
    e = np.zeros((n2, n1))
    e[i - 1, j - 1] = 1.0
    residual = m2.to_dense() @ xt + xt @ m1.to_dense() - e
    return float(np.linalg.norm(residual, "fro"))


def inverse_transpose_factor_entry(factor: CholeskyFactor, k: int, t: int) -> float:
    """Entry (k, t) of L^{-T}; zero for k > t since L^{-T} is upper triangular."""
    n = factor.order
    if not (1 <= k <= n and 1 <= t <= n):
        raise IndexError(f"entry ({k}, {t}) out of range for order {n}")
    if k > t:
        return 0.0
    e = np.zeros(n)
    e[t - 1] = 1.0
    col = scipy.linalg.solve_triangular(factor.lower.T, e, lower=False)
    return float(col[k - 1])
