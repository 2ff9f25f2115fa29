"""Adaptive Gauss-Kronrod integration over the whole real line.

Targets even, continuous integrands decaying at least like omega^(-2), the
shape produced by the shifted-resolvent bound integrands.  Only omega >= 0
is sampled: the half line is mapped onto (0, 1) by omega = tau / (1 - tau)
and the result is doubled, so the algebraic tail is integrated without
truncation.  Panels use the embedded 7-point Gauss / 15-point Kronrod pair;
the panel with the largest error estimate |G7 - K15| is bisected until the
accumulated estimate meets the tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# 15-point Kronrod abscissae on (-1, 1) with the embedded Gauss-7 weights
# (zero at Kronrod-only nodes), 21 significant digits.
_GK_TABLE = (
    # node, gauss weight, kronrod weight
    (-0.991455371120812639207, 0.0, 0.0229353220105292249637),
    (-0.949107912342758524526, 0.129484966168869693271, 0.0630920926299785532907),
    (-0.864864423359769072790, 0.0, 0.104790010322250183840),
    (-0.741531185599394439864, 0.279705391489276667901, 0.140653259715525918745),
    (-0.586087235467691130294, 0.0, 0.169004726639267902827),
    (-0.405845151377397166907, 0.381830050505118944950, 0.190350578064785409913),
    (-0.207784955007898467601, 0.0, 0.204432940075298892414),
    (0.0, 0.417959183673469387755, 0.209482141084727828013),
    (0.207784955007898467601, 0.0, 0.204432940075298892414),
    (0.405845151377397166907, 0.381830050505118944950, 0.190350578064785409913),
    (0.586087235467691130294, 0.0, 0.169004726639267902827),
    (0.741531185599394439864, 0.279705391489276667901, 0.140653259715525918745),
    (0.864864423359769072790, 0.0, 0.104790010322250183840),
    (0.949107912342758524526, 0.129484966168869693271, 0.0630920926299785532907),
    (0.991455371120812639207, 0.0, 0.0229353220105292249637),
)

_NODES = np.array([row[0] for row in _GK_TABLE])
_W_GAUSS = np.array([row[1] for row in _GK_TABLE])
_W_KRONROD = np.array([row[2] for row in _GK_TABLE])


@dataclass(frozen=True)
class QuadratureSettings:
    """Tolerances and the subdivision budget of the adaptive rule."""

    abs_tol: float = 1e-12
    rel_tol: float = 1e-9
    max_panels: int = 2000

    def __post_init__(self):
        if self.abs_tol <= 0.0 or self.rel_tol <= 0.0:
            raise ValueError("tolerances must be positive")
        if self.max_panels < 1:
            raise ValueError("max_panels must be at least 1")


@dataclass(frozen=True)
class IntegralEstimate:
    """Quadrature result: value, accumulated error estimate, panel count."""

    value: float
    error: float
    panels: int
    converged: bool


DEFAULT_SETTINGS = QuadratureSettings()


def _panel(f, a: float, b: float) -> tuple[float, float]:
    """K15 value and |G7 - K15| estimate of the transformed integrand on [a, b]."""
    half = 0.5 * (b - a)
    tau = 0.5 * (a + b) + half * _NODES
    omega = tau / (1.0 - tau)
    g = np.asarray(f(omega), dtype=float) / (1.0 - tau) ** 2
    if not np.all(np.isfinite(g)):
        raise ValueError("non-finite integrand sample encountered")
    k15 = half * float(_W_KRONROD @ g)
    g7 = half * float(_W_GAUSS @ g)
    return k15, abs(k15 - g7)


def _initial_edges(max_panels: int) -> list[float]:
    """Initial panel edges on (0, 1).

    A geometric ladder toward both endpoints guarantees that integrand
    structure at any scale down to 2^-44 (sharp peaks at omega ~ lambda for
    tiny lambda, or humps at omega ~ lambda for huge lambda) lands on a
    quadrature node, so the error estimate sees it and refinement follows.
    A plain bisection start can miss such peaks entirely and converge to a
    wrong value.
    """
    ladder = [2.0**-k for k in range(44, 1, -4)] + [0.125, 0.25, 0.5]
    edges = [0.0] + ladder + [1.0 - tau for tau in reversed(ladder)] + [1.0]
    if max_panels >= len(edges) - 1:
        return edges
    if max_panels >= 4:
        return [0.0, 0.25, 0.5, 0.75, 1.0]
    return [0.0, 1.0]


def integrate_real_line(f, settings: QuadratureSettings = DEFAULT_SETTINGS) -> IntegralEstimate:
    """Integrate an even function f over (-inf, inf).

    ``f`` must accept a numpy array of nonnegative frequencies and return
    the integrand values; it is never sampled at negative arguments.  On
    convergence the reported error estimate satisfies
    ``error <= max(abs_tol, rel_tol * |value|)``; otherwise the best
    available estimate is returned with ``converged = False``.
    """
    edges = _initial_edges(settings.max_panels)
    panels = []
    for a, b in zip(edges[:-1], edges[1:]):
        val, err = _panel(f, a, b)
        panels.append((a, b, val, err))

    while True:
        total = 2.0 * math.fsum(p[2] for p in panels)
        err_total = 2.0 * math.fsum(p[3] for p in panels)
        if err_total <= max(settings.abs_tol, settings.rel_tol * abs(total)):
            return IntegralEstimate(total, err_total, len(panels), True)
        if len(panels) >= settings.max_panels:
            return IntegralEstimate(total, err_total, len(panels), False)
        worst = max(range(len(panels)), key=lambda idx: panels[idx][3])
        a, b, _, _ = panels.pop(worst)
        mid = 0.5 * (a + b)
        left_val, left_err = _panel(f, a, mid)
        right_val, right_err = _panel(f, mid, b)
        panels.append((a, mid, left_val, left_err))
        panels.append((mid, b, right_val, right_err))
        panels.sort(key=lambda p: p[0])
