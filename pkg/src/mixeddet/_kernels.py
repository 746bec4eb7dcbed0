"""Float-mode hot kernels: principal-minor tables and ranked subset
convolution over machine doubles.

Two interchangeable implementations are provided: numba ``@njit`` loops and
a pure-numpy path.  Selection happens once at import time; set
``MIXEDDET_DISABLE_NUMBA=1`` to force the numpy path (it is also used
automatically when numba is unavailable).  Exact mode never touches this
module.
"""

from __future__ import annotations

import os

import numpy as np


def _numba_disabled() -> bool:
    return os.environ.get("MIXEDDET_DISABLE_NUMBA", "").strip().lower() in {
        "1",
        "true",
        "yes",
        "on",
    }


_HAVE_NUMBA = False
if not _numba_disabled():
    try:
        from numba import njit

        _HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - depends on environment
        _HAVE_NUMBA = False


def _popcounts(size: int) -> np.ndarray:
    pc = np.zeros(size, dtype=np.int64)
    bit = 1
    while bit < size:
        idx = np.arange(size)
        pc += (idx & bit) != 0
        bit <<= 1
    return pc


# -- pure numpy implementations ---------------------------------------------


def minor_table_numpy(a: np.ndarray) -> np.ndarray:
    """All 2^n principal minors of a Hermitian complex matrix, as float64."""
    n = a.shape[0]
    size = 1 << n
    out = np.empty(size, dtype=np.float64)
    out[0] = 1.0
    if n == 0:
        return out
    pc = _popcounts(size)
    masks = np.arange(size)
    for k in range(1, n + 1):
        sel = masks[pc == k]
        batch = np.empty((sel.shape[0], k, k), dtype=np.complex128)
        for t, m in enumerate(sel):
            idx = [i for i in range(n) if (m >> i) & 1]
            batch[t] = a[np.ix_(idx, idx)]
        out[sel] = np.linalg.det(batch).real
    return out


def _zeta_numpy(arr: np.ndarray, n: int) -> None:
    size = arr.shape[-1]
    idx = np.arange(size)
    for b in range(n):
        bit = 1 << b
        hi = idx[(idx & bit) != 0]
        arr[..., hi] += arr[..., hi ^ bit]


def _mobius_numpy(arr: np.ndarray, n: int) -> None:
    size = arr.shape[-1]
    idx = np.arange(size)
    for b in range(n):
        bit = 1 << b
        hi = idx[(idx & bit) != 0]
        arr[..., hi] -= arr[..., hi ^ bit]


def subset_convolve_numpy(f: np.ndarray, g: np.ndarray, n: int) -> np.ndarray:
    """Ranked zeta/Moebius subset convolution over float64."""
    size = 1 << n
    pc = _popcounts(size)
    fh = np.zeros((n + 1, size))
    gh = np.zeros((n + 1, size))
    fh[pc, np.arange(size)] = f
    gh[pc, np.arange(size)] = g
    _zeta_numpy(fh, n)
    _zeta_numpy(gh, n)
    hh = np.zeros((n + 1, size))
    for k in range(n + 1):
        acc = hh[k]
        for i in range(k + 1):
            acc += fh[i] * gh[k - i]
    _mobius_numpy(hh, n)
    return hh[pc, np.arange(size)]


# -- numba implementations ---------------------------------------------------

if _HAVE_NUMBA:

    @njit(cache=True)
    def _minor_table_jit(a):  # pragma: no cover - exercised via dispatch
        n = a.shape[0]
        size = 1 << n
        out = np.empty(size, dtype=np.float64)
        out[0] = 1.0
        idx = np.empty(n, dtype=np.int64)
        sub = np.empty((n, n), dtype=np.complex128)
        for s in range(1, size):
            k = 0
            for i in range(n):
                if (s >> i) & 1:
                    idx[k] = i
                    k += 1
            for r in range(k):
                ir = idx[r]
                for c in range(k):
                    sub[r, c] = a[ir, idx[c]]
            det = 1.0 + 0.0j
            for col in range(k):
                piv = col
                big = abs(sub[col, col])
                for r in range(col + 1, k):
                    mag = abs(sub[r, col])
                    if mag > big:
                        big = mag
                        piv = r
                if big == 0.0:
                    det = 0.0 + 0.0j
                    break
                if piv != col:
                    for c in range(col, k):
                        tmp = sub[col, c]
                        sub[col, c] = sub[piv, c]
                        sub[piv, c] = tmp
                    det = -det
                pv = sub[col, col]
                det *= pv
                for r in range(col + 1, k):
                    factor = sub[r, col] / pv
                    for c in range(col + 1, k):
                        sub[r, c] -= factor * sub[col, c]
            out[s] = det.real
        return out

    @njit(cache=True)
    def _subset_convolve_jit(f, g, n):  # pragma: no cover - via dispatch
        size = 1 << n
        fh = np.zeros((n + 1, size))
        gh = np.zeros((n + 1, size))
        for s in range(size):
            k = 0
            t = s
            while t:
                k += 1
                t &= t - 1
            fh[k, s] = f[s]
            gh[k, s] = g[s]
        for r in range(n + 1):
            for b in range(n):
                bit = 1 << b
                for s in range(size):
                    if s & bit:
                        fh[r, s] += fh[r, s ^ bit]
                        gh[r, s] += gh[r, s ^ bit]
        hh = np.zeros((n + 1, size))
        for k in range(n + 1):
            for i in range(k + 1):
                for s in range(size):
                    hh[k, s] += fh[i, s] * gh[k - i, s]
        for r in range(n + 1):
            for b in range(n):
                bit = 1 << b
                for s in range(size):
                    if s & bit:
                        hh[r, s] -= hh[r, s ^ bit]
        out = np.empty(size)
        for s in range(size):
            k = 0
            t = s
            while t:
                k += 1
                t &= t - 1
            out[s] = hh[k, s]
        return out


def backend_name() -> str:
    return "numba" if _HAVE_NUMBA else "numpy"


def minor_table_f64(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.complex128)
    if _HAVE_NUMBA:
        return _minor_table_jit(a)
    return minor_table_numpy(a)


def subset_convolve_f64(f: np.ndarray, g: np.ndarray, n: int) -> np.ndarray:
    f = np.ascontiguousarray(f, dtype=np.float64)
    g = np.ascontiguousarray(g, dtype=np.float64)
    if _HAVE_NUMBA:
        return _subset_convolve_jit(f, g, n)
    return subset_convolve_numpy(f, g, n)
