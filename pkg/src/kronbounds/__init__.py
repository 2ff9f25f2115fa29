"""Decay bounds for inverses of Kronecker sums of banded SPD matrices.

The entries of (M (x) I + I (x) M)^{-1} decay non-monotonically: they
oscillate with the grid distance between the two indices on the underlying
n x n mesh.  This package computes rigorous upper bounds that follow the
oscillation (integral, closed-form and asymptotic variants), the classical
monotone band bound for comparison, the corresponding bound for the inverse
transposed Cholesky factor, and the two-matrix (Sylvester) generalization.
A dense oracle certifies every bound at desk scale, and a CLI emits
per-column reports and example datasets as CSV.
"""

from ._backend import active_backend
from .banded import (
    BOTH_DIFFER,
    DIAGONAL,
    ONE_EQUAL,
    BandedSymmetricMatrix,
    DegenerateSpectrumError,
    GridPoint,
    MeshSeparation,
    NotSPDError,
    SpectralInterval,
    custom_matrix,
    extreme_eigenvalues,
    grid_of_linear,
    linear_of_grid,
    make_preset,
    mesh_separation,
    read_matrix_file,
    scale_by_diagonal,
)
from .bounds import (
    BoundConstants,
    DemkoConstants,
    EntryBoundReport,
    ShiftedSpectrumGeometry,
    SylvesterSpectraPair,
    asymptotic_entry_bound,
    bound_constants,
    column_reports,
    demko_bound,
    demko_constants,
    explicit_entry_bound,
    freund_entry_bound,
    geometry_at,
    integral_entry_bound,
    inverse_cholesky_factor_bound,
    resolvent_diagonal_bound,
    sylvester_integral_bound,
)
from .oracle import (
    CholeskyFactor,
    assemble_kronecker_sum,
    cholesky,
    inverse_column,
    inverse_transpose_factor_entry,
    lyapunov_residual,
)
from .quadrature import (
    DEFAULT_SETTINGS,
    IntegralEstimate,
    QuadratureSettings,
    integrate_real_line,
)

__version__ = "0.1.0"

__all__ = [
    "BOTH_DIFFER",
    "DIAGONAL",
    "ONE_EQUAL",
    "BandedSymmetricMatrix",
    "BoundConstants",
    "CholeskyFactor",
    "DEFAULT_SETTINGS",
    "DegenerateSpectrumError",
    "DemkoConstants",
    "EntryBoundReport",
    "GridPoint",
    "IntegralEstimate",
    "MeshSeparation",
    "NotSPDError",
    "QuadratureSettings",
    "ShiftedSpectrumGeometry",
    "SpectralInterval",
    "SylvesterSpectraPair",
    "active_backend",
    "assemble_kronecker_sum",
    "asymptotic_entry_bound",
    "bound_constants",
    "cholesky",
    "column_reports",
    "custom_matrix",
    "demko_bound",
    "demko_constants",
    "explicit_entry_bound",
    "extreme_eigenvalues",
    "freund_entry_bound",
    "geometry_at",
    "grid_of_linear",
    "integral_entry_bound",
    "integrate_real_line",
    "inverse_cholesky_factor_bound",
    "inverse_column",
    "inverse_transpose_factor_entry",
    "linear_of_grid",
    "lyapunov_residual",
    "make_preset",
    "mesh_separation",
    "read_matrix_file",
    "scale_by_diagonal",
    "sylvester_integral_bound",
]
