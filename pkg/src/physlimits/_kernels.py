"""Hot kernels with a numba fast path and a pure-numpy fallback.

The expensive inner loop of the radiation mode sum is counting lattice
modes per frequency shell: how many integer triples (nx, ny, nz) in
[1, n_max]^3 share each squared norm s = nx^2 + ny^2 + nz^2.  Both
backends return exactly the same int64 array, so everything downstream
is backend-independent bit for bit.

Backend selection: set PHYSLIMITS_BACKEND=numpy to force the fallback,
PHYSLIMITS_BACKEND=numba to require numba (raises if unavailable).
Default is numba when importable, numpy otherwise.
"""

from __future__ import annotations

import os

import numpy as np
from scipy.signal import fftconvolve

_ENV_VAR = "PHYSLIMITS_BACKEND"

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:
    _HAVE_NUMBA = False


def _resolve_backend() -> str:
    choice = os.environ.get(_ENV_VAR, "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not _HAVE_NUMBA:
            raise RuntimeError(f"{_ENV_VAR}=numba requested but numba is not importable")
        return "numba"
    if choice not in ("", "auto"):
        raise RuntimeError(f"unrecognized {_ENV_VAR}={choice!r}; use 'numba' or 'numpy'")
    return "numba" if _HAVE_NUMBA else "numpy"


def active_backend() -> str:
    """Name of the backend that shell_counts will use right now."""
    return _resolve_backend()


if _HAVE_NUMBA:

    @njit(cache=True)
    def _shell_counts_numba(n_max):  # pragma: no cover - exercised via shell_counts
        sq = np.empty(n_max + 1, np.int64)
        for i in range(n_max + 1):
            sq[i] = i * i
        pair = np.zeros(2 * n_max * n_max + 1, np.int64)
        for i in range(1, n_max + 1):
            for j in range(1, n_max + 1):
                pair[sq[i] + sq[j]] += 1
        nnz = 0
        for t in range(pair.size):
            if pair[t] > 0:
                nnz += 1
        idx = np.empty(nnz, np.int64)
        val = np.empty(nnz, np.int64)
        k = 0
        for t in range(pair.size):
            if pair[t] > 0:
                idx[k] = t
                val[k] = pair[t]
                k += 1
        counts = np.zeros(3 * n_max * n_max + 1, np.int64)
        for i in range(1, n_max + 1):
            base = sq[i]
            for m in range(nnz):
                counts[base + idx[m]] += val[m]
        return counts


def _shell_counts_numpy(n_max: int) -> np.ndarray:
    sq = np.arange(1, n_max + 1, dtype=np.int64) ** 2
    pair = np.bincount(
        (sq[:, None] + sq[None, :]).ravel(), minlength=2 * n_max * n_max + 1
    )
    single = np.bincount(sq, minlength=n_max * n_max + 1)
    # fftconvolve of integer histograms; counts are far below the float64
    # integer limit, so rounding recovers them exactly.
    conv = fftconvolve(pair.astype(np.float64), single.astype(np.float64))
    counts = np.zeros(3 * n_max * n_max + 1, np.int64)
    m = min(conv.size, counts.size)
    counts[:m] = np.rint(conv[:m]).astype(np.int64)
    return counts


def shell_counts(n_max: int) -> np.ndarray:
    """Count modes per squared-norm shell for (nx, ny, nz) in [1, n_max]^3.

    Returns an int64 array c of length 3*n_max^2 + 1 with c[s] the number
    of triples of squared norm s; the total over all shells is n_max^3.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if _resolve_backend() == "numba":
        return _shell_counts_numba(n_max)
    return _shell_counts_numpy(n_max)
