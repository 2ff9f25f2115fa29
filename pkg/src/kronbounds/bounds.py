"""Decay bounds for entries of inverses of Kronecker sums of banded SPD matrices.

For S = M (x) I + I (x) M with M banded SPD, each column of S^{-1} is the
solution of a Lyapunov equation and admits the closed-form integral
representation over the shifted resolvents (i w I + M)^{-1}.  Bounding the
resolvent entries by their per-frequency geometric decay rate 1/R(w) yields
entry bounds that depend only on the spectrum of M and on the grid distance
between the two indices:

* an integral bound (sharp, evaluated by adaptive Gauss-Kronrod quadrature),
* a closed-form bound obtained by majorizing the integrand,
* an asymptotic bound proportional to 1/sqrt(n) in the mesh separation n,
* the classical monotone band bound gamma * q^(dist/b) for comparison,
* the same machinery for the inverse transposed Cholesky factor of S and
  for the two-matrix (Sylvester) generalization M1 (x) I + I (x) M2.

All operations are pure functions of their inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from .banded import (
    BOTH_DIFFER,
    DIAGONAL,
    ONE_EQUAL,
    BandedSymmetricMatrix,
    DegenerateSpectrumError,
    MeshSeparation,
    SpectralInterval,
    extreme_eigenvalues,
    grid_of_linear,
    mesh_separation,
)
from .quadrature import DEFAULT_SETTINGS, IntegralEstimate, QuadratureSettings, integrate_real_line

_CLAMP_TOL = 1e-14


@dataclass(frozen=True)
class ShiftedSpectrumGeometry:
    """Per-frequency geometry of the spectrum shifted by i*omega.

    lambda1 and lambda2 are the shifted extreme eigenvalues, ``a`` their
    normalized midpoint, ``r`` the geometric decay rate of the shifted
    resolvent entries, and ``b_of_a`` the constant of the resolvent entry
    bound.  ``a`` lies on the ellipse with semi-axes alpha_r, beta_r and
    foci +-1; psi is its elliptic angle.
    """

    omega: float
    lambda1: complex
    lambda2: complex
    a: complex
    alpha: float
    r: float
    alpha_r: float
    beta_r: float
    psi: float
    b_of_a: float


@dataclass(frozen=True)
class DemkoConstants:
    """Constants of the classical monotone band bound, on S rescaled by d."""

    kappa: float
    q: float
    gamma_hat: float
    gamma: float
    d: float


@dataclass(frozen=True)
class BoundConstants:
    """Leading constants of the asymptotic 1/sqrt(n) bounds."""

    gamma0_case_i: float
    gamma0_case_ii: float

    @property
    def gamma0(self) -> float:
        return max(self.gamma0_case_i, self.gamma0_case_ii)


@dataclass(frozen=True)
class SylvesterSpectraPair:
    """Spectra of the two matrices of a Kronecker sum M1 (x) I + I (x) M2."""

    spec1: SpectralInterval
    spec2: SpectralInterval

    @property
    def delta12(self) -> float:
        return self.spec1.width * self.spec2.width


@dataclass(frozen=True)
class EntryBoundReport:
    """All bounds for one entry (k, t), with the exact value when available.

    ``explicit`` and ``asymptotic`` are None when the closed-form bounds do
    not apply (diagonal pairs, zero separation, or bandwidth > 1).
    """

    k: int
    t: int
    separation: MeshSeparation
    integral: IntegralEstimate
    demko: float
    explicit: float | None = None
    asymptotic: float | None = None
    exact_abs: float | None = None


def _clamped_unit(v: float) -> float:
    if -1.0 <= v <= 1.0:
        return v
    if abs(v) - 1.0 <= _CLAMP_TOL:
        return math.copysign(1.0, v)
    raise ValueError(f"elliptic-angle cosine/sine {v} is out of range beyond rounding")


def geometry_at(spec: SpectralInterval, omega: float) -> ShiftedSpectrumGeometry:
    """Geometry of the spectrum of i*omega*I + M for M with spectrum ``spec``."""
    if spec.lambda_max <= spec.lambda_min:
        raise DegenerateSpectrumError("a point spectrum has no resolvent decay geometry")
    dl = spec.width
    lam1 = complex(spec.lambda_min, omega)
    lam2 = complex(spec.lambda_max, omega)
    a = (lam1 + lam2) / dl
    alpha = (abs(lam1) + abs(lam2)) / dl
    beta_sq = (alpha - 1.0) * (alpha + 1.0)
    r = alpha + math.sqrt(beta_sq)
    alpha_r = 0.5 * (r + 1.0 / r)
    beta_r = 0.5 * (r - 1.0 / r)
    cos_psi = _clamped_unit(a.real / alpha_r)
    sin_psi = _clamped_unit(a.imag / beta_r)
    psi = math.atan2(sin_psi, cos_psi)
    s = math.sqrt(alpha_r * alpha_r - cos_psi * cos_psi)
    b_of_a = r / (beta_r * s * (alpha_r + s))
    return ShiftedSpectrumGeometry(
        omega=omega,
        lambda1=lam1,
        lambda2=lam2,
        a=a,
        alpha=alpha,
        r=r,
        alpha_r=alpha_r,
        beta_r=beta_r,
        psi=psi,
        b_of_a=b_of_a,
    )


def freund_entry_bound(
    geom: ShiftedSpectrumGeometry, dist: int, b: int = 1, mode: str = "full"
) -> float:
    """Entry bound (2R/|l1-l2|) B(a) (1/R)^(dist/b) for the shifted resolvent.

    ``mode="simplified"`` replaces B(a) by its majorant 1/beta_r^2, so the
    simplified value always dominates the full one.  Coincident indices
    (dist = 0) are out of scope; use :func:`resolvent_diagonal_bound`.
    """
    if dist < 1:
        raise ValueError("dist must be >= 1; the diagonal uses resolvent_diagonal_bound")
    if b < 1:
        raise ValueError("bandwidth must be >= 1")
    if mode == "full":
        factor = geom.b_of_a
    elif mode == "simplified":
        factor = 1.0 / (geom.beta_r * geom.beta_r)
    else:
        raise ValueError(f"mode must be 'full' or 'simplified', got {mode!r}")
    dl = abs(geom.lambda2 - geom.lambda1)
    return (2.0 * geom.r / dl) * factor * math.exp(-(dist / b) * math.log(geom.r))


def resolvent_diagonal_bound(spec: SpectralInterval, omega: float) -> float:
    """Norm bound 1/|lambda_min + i*omega| for any entry of the shifted resolvent."""
    return 1.0 / math.hypot(spec.lambda_min, omega)


def _scaled_estimate(est: IntegralEstimate, prefactor: float) -> IntegralEstimate:
    return IntegralEstimate(prefactor * est.value, prefactor * est.error, est.panels, est.converged)


def _pair_bound(
    spec_row: SpectralInterval,
    spec_col: SpectralInterval,
    exp_row: float,
    exp_col: float,
    settings: QuadratureSettings,
) -> IntegralEstimate:
    """Integral bound with one decay factor per Kronecker axis."""
    kern = _backend.kernels.resolvent_pair_integrand
    lmin_r, lmax_r = spec_row.lambda_min, spec_row.lambda_max
    lmin_c, lmax_c = spec_col.lambda_min, spec_col.lambda_max

    def integrand(omega):
        return kern(omega, lmin_r, lmax_r, exp_row, lmin_c, lmax_c, exp_col)

    prefactor = 64.0 / (2.0 * math.pi * (spec_row.width * spec_col.width))
    return _scaled_estimate(integrate_real_line(integrand, settings), prefactor)


def integral_entry_bound(
    spec: SpectralInterval,
    k: int,
    t: int,
    n: int,
    b: int = 1,
    settings: QuadratureSettings = DEFAULT_SETTINGS,
) -> IntegralEstimate:
    """Integral upper bound on |(S^{-1})_{k,t}| for S = M (x) I + I (x) M.

    The case with both grid coordinates equal is the exact closed form
    1/(2 lambda_min) and uses no quadrature.  The other two cases integrate
    the product of the per-axis resolvent decay factors, with grid
    distances divided by the bandwidth b in the exponents.
    """
    if b < 1:
        raise ValueError("bandwidth must be >= 1")
    gk = grid_of_linear(k, n)
    gt = grid_of_linear(t, n)
    d_row = abs(gk.i - gt.i)
    d_col = abs(gk.j - gt.j)
    if d_row == 0 and d_col == 0:
        return IntegralEstimate(0.5 / spec.lambda_min, 0.0, 0, True)
    if spec.lambda_max <= spec.lambda_min:
        raise DegenerateSpectrumError("off-diagonal integral bounds need a nondegenerate spectrum")
    if d_row > 0 and d_col > 0:
        return _pair_bound(spec, spec, d_row / b - 1.0, d_col / b - 1.0, settings)

    exponent = (d_row + d_col) / b - 1.0
    kern = _backend.kernels.mixed_axis_integrand
    lmin, lmax = spec.lambda_min, spec.lambda_max

    def integrand(omega):
        return kern(omega, lmin, lmax, exponent)

    prefactor = 8.0 / (2.0 * math.pi * spec.width)
    return _scaled_estimate(integrate_real_line(integrand, settings), prefactor)


def explicit_entry_bound(spec: SpectralInterval, sep: MeshSeparation) -> float:
    """Closed-form bound in the mesh separation, for tridiagonal M.

    Requires a positive separation count; at separation zero the integrand
    majorization diverges and the caller must fall back to the integral
    bound.
    """
    lmin, lmax = spec.lambda_min, spec.lambda_max
    dl = spec.width
    ssq = lmax * lmax + lmin * lmin
    if sep.case == BOTH_DIFFER:
        n2 = sep.n2
        if n2 <= 0:
            raise ValueError("the closed-form bound needs separation n2 > 0")
        log_value = (
            (n2 + 2) * math.log(dl)
            - 0.5 * n2 * math.log(ssq)
            + 0.5 * math.log(ssq)
            - 2.0 * math.log(lmax * lmin)
        )
        tail = math.sqrt(2.0 * n2 / (n2 + 4.0))
        return (0.5 / math.sqrt(2.0)) * math.exp(log_value) * tail / math.sqrt(n2)
    if sep.case == ONE_EQUAL:
        n1 = sep.n1
        if n1 <= 0:
            raise ValueError("the closed-form bound needs separation n1 > 0")
        log_value = (
            (n1 + 1) * math.log(dl)
            - 0.5 * n1 * math.log(ssq)
            + 0.5 * math.log(ssq)
            - math.log(lmax * lmin * lmin)
        )
        tail = math.sqrt(2.0 * n1 / (n1 + 2.0))
        return (0.5 / math.sqrt(2.0)) * math.exp(log_value) * tail / math.sqrt(n1)
    raise ValueError("diagonal pairs have no closed-form separation bound")


def bound_constants(spec: SpectralInterval) -> BoundConstants:
    """Leading constants of the asymptotic bounds for both separation cases."""
    kappa = spec.kappa
    root = math.sqrt(kappa * kappa + 1.0)
    return BoundConstants(
        gamma0_case_i=root / (2.0 * spec.lambda_min),
        gamma0_case_ii=kappa * root / 2.0,
    )


def asymptotic_entry_bound(spec: SpectralInterval, sep: MeshSeparation) -> float:
    """Asymptotic bound gamma0 / sqrt(n) in the mesh separation, tridiagonal M."""
    consts = bound_constants(spec)
    if sep.case == BOTH_DIFFER:
        if sep.n2 <= 0:
            raise ValueError("the asymptotic bound needs separation n2 > 0")
        return consts.gamma0_case_i / math.sqrt(sep.n2)
    if sep.case == ONE_EQUAL:
        if sep.n1 <= 0:
            raise ValueError("the asymptotic bound needs separation n1 > 0")
        return consts.gamma0_case_ii / math.sqrt(sep.n1)
    raise ValueError("diagonal pairs have no asymptotic separation bound")


def demko_constants(spec_s: SpectralInterval, d: float) -> DemkoConstants:
    """Constants of the classical band bound for S/d (unit-bounded diagonal)."""
    if d <= 0.0:
        raise ValueError("the diagonal scaling factor must be positive")
    kappa = spec_s.kappa
    rk = math.sqrt(kappa)
    q = (rk - 1.0) / (rk + 1.0)
    gamma_hat = (1.0 + rk) ** 2 / (2.0 * spec_s.lambda_max / d)
    gamma = max(d / spec_s.lambda_min, gamma_hat)
    return DemkoConstants(kappa=kappa, q=q, gamma_hat=gamma_hat, gamma=gamma, d=d)


def demko_bound(spec_s: SpectralInterval, band_s: int, dist: int, d: float) -> float:
    """Classical monotone bound gamma q^(dist/band) mapped back to the unscaled S.

    The published constants assume diagonal entries of S not greater than
    one, so they are formed for S/d with d the largest diagonal entry of S
    and the resulting bound is divided by d.
    """
    if band_s < 1:
        raise ValueError("band_s must be >= 1")
    if dist < 0:
        raise ValueError("dist must be >= 0")
    consts = demko_constants(spec_s, d)
    return consts.gamma * consts.q ** (dist / band_s) / d


def sylvester_integral_bound(
    pair: SylvesterSpectraPair,
    d_row: int,
    d_col: int,
    settings: QuadratureSettings = DEFAULT_SETTINGS,
) -> float:
    """Integral bound for |(S_g^{-1})_{k,t}| with S_g = M1 (x) I + I (x) M2.

    ``d_row`` is the within-block grid distance (the axis acted on by M2;
    its extent is the order of M2) and ``d_col`` the block distance (the M1
    axis): with vec stacking columns, S_g vec(X) = vec(M2 X + X M1).  Both
    distances must be at least 1.  With M1 = M2 the value coincides with
    the one-matrix integral bound at the same distances.
    """
    if d_row < 1 or d_col < 1:
        raise ValueError("the two-geometry bound needs both grid distances >= 1")
    if pair.spec1.lambda_max <= pair.spec1.lambda_min:
        raise DegenerateSpectrumError("spectrum of M1 is degenerate")
    if pair.spec2.lambda_max <= pair.spec2.lambda_min:
        raise DegenerateSpectrumError("spectrum of M2 is degenerate")
    est = _pair_bound(pair.spec2, pair.spec1, d_row - 1.0, d_col - 1.0, settings)
    return est.value


def inverse_cholesky_factor_bound(
    spec: SpectralInterval, sep: MeshSeparation, band_s: int
) -> float:
    """Bound gamma0 * band_s / sqrt(n) on |(L^{-T})_{k,t}| for S = L L^T.

    Uses the larger of the two asymptotic constants because entries summed
    across the band of S may fall in either separation case.  Oriented for
    k <= t; requires a positive separation count.
    """
    if band_s < 1:
        raise ValueError("band_s must be >= 1")
    if sep.case == DIAGONAL:
        raise ValueError("diagonal pairs have no factor decay bound")
    nn = sep.n_value
    if nn <= 0:
        raise ValueError("the factor bound needs a positive separation count")
    return bound_constants(spec).gamma0 * band_s / math.sqrt(nn)


def column_reports(
    m: BandedSymmetricMatrix,
    t: int,
    settings: QuadratureSettings = DEFAULT_SETTINGS,
    exact_column=None,
) -> list[EntryBoundReport]:
    """All entry bounds for column t of the inverse of S = M (x) I + I (x) M.

    The closed-form and asymptotic bounds are populated only where they
    apply (tridiagonal M, positive separation).  ``exact_column``, when
    given, must be the exact column of S^{-1} in linear-index order.
    """
    spec = extreme_eigenvalues(m)
    n, b = m.n, m.b
    if not (1 <= t <= n * n):
        raise IndexError(f"column {t} out of range 1..{n * n}")
    spec_s = SpectralInterval(2.0 * spec.lambda_min, 2.0 * spec.lambda_max)
    d = 2.0 * float(np.max(m.main_diagonal()))
    band_s = n * b
    reports = []
    for k in range(1, n * n + 1):
        sep = mesh_separation(k, t, n)
        integral = integral_entry_bound(spec, k, t, n, b, settings)
        explicit = None
        asymptotic = None
        if b == 1 and sep.case != DIAGONAL and sep.n_value > 0:
            explicit = explicit_entry_bound(spec, sep)
            asymptotic = asymptotic_entry_bound(spec, sep)
        demko = demko_bound(spec_s, band_s, abs(k - t), d)
        exact_abs = None if exact_column is None else abs(float(exact_column[k - 1]))
        reports.append(
            EntryBoundReport(
                k=k,
                t=t,
                separation=sep,
                integral=integral,
                demko=demko,
                explicit=explicit,
                asymptotic=asymptotic,
                exact_abs=exact_abs,
            )
        )
    return reports
