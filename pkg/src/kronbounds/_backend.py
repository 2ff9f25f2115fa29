"""Kernel backend selection.

``KRONBOUNDS_BACKEND=numpy`` forces the pure-numpy kernels,
``KRONBOUNDS_BACKEND=numba`` requires the compiled ones, and the default
(``auto``) prefers numba when it imports.  The choice only affects speed;
results agree between backends up to floating-point rounding in the libm
calls, and every run is deterministic for a fixed backend.
"""

from __future__ import annotations

import os

ENV_VAR = "KRONBOUNDS_BACKEND"


def _load():
    choice = os.environ.get(ENV_VAR, "auto").strip().lower() or "auto"
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(f"{ENV_VAR} must be 'auto', 'numba' or 'numpy', got {choice!r}")
    if choice in ("auto", "numba"):
        try:
            from . import _kernels_numba as mod

            return mod, "numba"
        except ImportError:
            if choice == "numba":
                raise
    from . import _kernels_numpy as mod

    return mod, "numpy"


kernels, active_backend = _load()
