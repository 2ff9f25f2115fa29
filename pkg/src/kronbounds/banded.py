"""Banded symmetric matrices, example generators, and grid index bookkeeping.

Matrices are stored by diagonals (one array per sub-diagonal, main diagonal
first).  All public indices are 1-based, matching the usual linear-algebra
convention for matrix entries; conversion to 0-based numpy indexing happens
at the boundary of each function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg


class NotSPDError(ValueError):
    """The matrix is not symmetric positive definite."""


class DegenerateSpectrumError(ValueError):
    """The spectrum collapses to a point; the resolvent geometry is undefined."""


BOTH_DIFFER = "BothDiffer"
ONE_EQUAL = "OneEqual"
DIAGONAL = "Diagonal"


@dataclass(frozen=True, eq=False)
class BandedSymmetricMatrix:
    """Symmetric banded matrix of order n with half-bandwidth b.

    ``diagonals[d]`` holds the ``n - d`` entries of the d-th sub-diagonal
    (``d = 0`` is the main diagonal); the upper triangle is implied by
    symmetry and entries with ``|i - j| > b`` are identically zero.
    Positive definiteness is not checked at construction.
    """

    diagonals: tuple[np.ndarray, ...]

    def __post_init__(self):
        if not self.diagonals:
            raise ValueError("at least the main diagonal is required")
        diags = []
        n = len(self.diagonals[0])
        if n < 1:
            raise ValueError("order must be at least 1")
        if len(self.diagonals) > n:
            raise ValueError(f"half-bandwidth {len(self.diagonals) - 1} must be < order {n}")
        for d, seq in enumerate(self.diagonals):
            arr = np.array(seq, dtype=float)
            if arr.ndim != 1 or arr.size != n - d:
                raise ValueError(f"diagonal {d} must have exactly {n - d} entries")
            arr.setflags(write=False)
            diags.append(arr)
        object.__setattr__(self, "diagonals", tuple(diags))

    @property
    def n(self) -> int:
        return len(self.diagonals[0])

    @property
    def b(self) -> int:
        return len(self.diagonals) - 1

    def entry(self, i: int, j: int) -> float:
        """Entry (i, j), 1-based."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"entry ({i}, {j}) out of range for order {self.n}")
        d = abs(i - j)
        if d > self.b:
            return 0.0
        return float(self.diagonals[d][min(i, j) - 1])

    def main_diagonal(self) -> np.ndarray:
        return self.diagonals[0]

    def to_dense(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for d, seq in enumerate(self.diagonals):
            idx = np.arange(self.n - d)
            a[idx + d, idx] = seq
            a[idx, idx + d] = seq
        return a

    def band_form(self) -> np.ndarray:
        """(b+1, n) lower band-storage array as used by LAPACK band solvers."""
        ab = np.zeros((self.b + 1, self.n))
        for d, seq in enumerate(self.diagonals):
            ab[d, : self.n - d] = seq
        return ab


@dataclass(frozen=True)
class SpectralInterval:
    """Extreme eigenvalues of an SPD matrix."""

    lambda_min: float
    lambda_max: float

    def __post_init__(self):
        if not self.lambda_min > 0.0:
            raise NotSPDError(f"lambda_min = {self.lambda_min} is not positive")
        if self.lambda_max < self.lambda_min:
            raise ValueError("lambda_max must be >= lambda_min")

    @property
    def kappa(self) -> float:
        """Condition number lambda_max / lambda_min."""
        return self.lambda_max / self.lambda_min

    @property
    def width(self) -> float:
        return self.lambda_max - self.lambda_min


@dataclass(frozen=True)
class GridPoint:
    """Position of a linear index on the underlying n x n grid (1-based)."""

    i: int
    j: int
    n: int


@dataclass(frozen=True)
class MeshSeparation:
    """Grid-distance classification of a pair of linear indices.

    ``distance`` is the raw grid distance |l - i| + |m - j|; ``n2`` is
    distance - 2 (populated only when both grid coordinates differ) and
    ``n1`` is distance - 1 (populated only when exactly one coordinate
    matches).
    """

    case: str
    distance: int
    n1: int | None = None
    n2: int | None = None

    @property
    def n_value(self) -> int:
        """The separation count governing the 1/sqrt(n) decay."""
        if self.case == BOTH_DIFFER:
            return self.n2
        if self.case == ONE_EQUAL:
            return self.n1
        raise ValueError("diagonal pairs have no separation count")


_PRESET_MINIMUM_ORDER = {"fd-laplacian": 2, "dd": 2, "legendre": 2, "ninepoint": 3}


def make_preset(name: str, n: int) -> BandedSymmetricMatrix:
    """Build one of the bundled example matrices at order n.

    Presets: ``fd-laplacian`` = tridiag(-1, 2, -1); ``dd`` = the diagonally
    dominant tridiag(-0.5, 2, -0.5); ``legendre`` = the stiffness matrix of
    the tensorized Babuska-Shen basis (Legendre polynomials, even degrees);
    ``ninepoint`` = pentadiag(1/12, -4/3, 15/6, -4/3, 1/12) from the 9-point
    one-dimensional Laplace stencil.
    """
    if name not in _PRESET_MINIMUM_ORDER:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(_PRESET_MINIMUM_ORDER)}")
    if n < _PRESET_MINIMUM_ORDER[name]:
        raise ValueError(f"preset {name!r} requires n >= {_PRESET_MINIMUM_ORDER[name]}")
    if name == "fd-laplacian":
        return BandedSymmetricMatrix((np.full(n, 2.0), np.full(n - 1, -1.0)))
    if name == "dd":
        return BandedSymmetricMatrix((np.full(n, 2.0), np.full(n - 1, -0.5)))
    if name == "ninepoint":
        return BandedSymmetricMatrix(
            (np.full(n, 15.0 / 6.0), np.full(n - 1, -4.0 / 3.0), np.full(n - 2, 1.0 / 12.0))
        )
    k = np.arange(1, n + 1, dtype=float)
    gamma = 2.0 / ((4.0 * k - 3.0) * (4.0 * k + 1.0))
    koff = k[:-1]
    delta = -1.0 / ((4.0 * koff + 1.0) * np.sqrt((4.0 * koff - 1.0) * (4.0 * koff + 3.0)))
    return BandedSymmetricMatrix((gamma, delta))


def custom_matrix(diagonals) -> BandedSymmetricMatrix:
    """Build a matrix from explicit diagonal sequences (main diagonal first)."""
    return BandedSymmetricMatrix(tuple(np.asarray(d, dtype=float) for d in diagonals))


def read_matrix_file(path) -> BandedSymmetricMatrix:
    """Read a matrix from the text format ``n b`` followed by b+1 diagonal lines.

    Line d (0-based, after the header) holds the n-d whitespace-separated
    entries of diagonal d, main diagonal first; decimal or scientific
    notation is accepted.
    """
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise ValueError(f"empty matrix file {path}")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError("matrix file must start with a line 'n b'")
    n, b = int(header[0]), int(header[1])
    if len(lines) != b + 2:
        raise ValueError(f"expected {b + 1} diagonal lines, found {len(lines) - 1}")
    diagonals = []
    for d in range(b + 1):
        vals = [float(tok) for tok in lines[1 + d].split()]
        if len(vals) != n - d:
            raise ValueError(f"diagonal {d} must have {n - d} entries, found {len(vals)}")
        diagonals.append(np.array(vals))
    return BandedSymmetricMatrix(tuple(diagonals))


def scale_by_diagonal(m: BandedSymmetricMatrix) -> BandedSymmetricMatrix:
    """Two-sided Jacobi scaling D^(-1/2) M D^(-1/2) producing a unit main diagonal.

    Preserves symmetry and bandwidth; requires strictly positive diagonal
    entries.
    """
    main = m.main_diagonal()
    if np.any(main <= 0.0):
        raise NotSPDError("diagonal scaling requires strictly positive diagonal entries")
    root = np.sqrt(main)
    scaled = []
    for d, seq in enumerate(m.diagonals):
        scaled.append(seq / (root[d:] * root[: m.n - d]))
    return BandedSymmetricMatrix(tuple(scaled))


def grid_of_linear(t: int, n: int) -> GridPoint:
    """Map linear index t in 1..n^2 to its (row, column) grid position."""
    if not (1 <= t <= n * n):
        raise IndexError(f"linear index {t} out of range 1..{n * n}")
    j = (t - 1) // n + 1
    i = t - n * ((t - 1) // n)
    return GridPoint(i=i, j=j, n=n)


def linear_of_grid(i: int, j: int, n: int) -> int:
    """Map grid position (i, j), 1-based, to the linear index i + n (j - 1)."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"grid point ({i}, {j}) out of range for n = {n}")
    return i + n * (j - 1)


def mesh_separation(k: int, t: int, n: int) -> MeshSeparation:
    """Classify the grid separation of two linear indices k, t in 1..n^2.

    Invariant under exchanging k and t.
    """
    gk = grid_of_linear(k, n)
    gt = grid_of_linear(t, n)
    d_row = abs(gk.i - gt.i)
    d_col = abs(gk.j - gt.j)
    raw = d_row + d_col
    if d_row > 0 and d_col > 0:
        return MeshSeparation(case=BOTH_DIFFER, distance=raw, n2=raw - 2)
    if raw == 0:
        return MeshSeparation(case=DIAGONAL, distance=0)
    return MeshSeparation(case=ONE_EQUAL, distance=raw, n1=raw - 1)


def extreme_eigenvalues(m: BandedSymmetricMatrix) -> SpectralInterval:
    """Extreme eigenvalues of a banded symmetric matrix, SPD-certified.

    Raises NotSPDError when the smallest eigenvalue is not positive, which
    signals that the decay-bound machinery is inapplicable.
    """
    w = scipy.linalg.eig_banded(m.band_form(), lower=True, eigvals_only=True)
    lo, hi = float(w[0]), float(w[-1])
    if lo <= 0.0:
        raise NotSPDError(f"smallest eigenvalue {lo} is not positive")
    return SpectralInterval(lo, hi)
