"""COO-triplet kernels for generator matrices on a truncated monomial basis.

The basis is every exponent vector of total degree <= D in n variables.
Lookup from exponent vector to basis position goes through a dense
mixed-radix table of size (D+1)^n. Both kernels exist in a numba flavour and
a vectorised numpy flavour; they must produce identical triplets.
"""
from __future__ import annotations

import numpy as np

from .._accel import njit, resolve_backend


def radix_weights(n: int, D: int) -> np.ndarray:
    return (D + 1) ** np.arange(n, dtype=np.int64)


def build_lookup(exps: np.ndarray, D: int) -> np.ndarray:
    n = exps.shape[1]
    table = np.full((D + 1) ** n, -1, dtype=np.int64)
    table[exps @ radix_weights(n, D)] = np.arange(exps.shape[0], dtype=np.int64)
    return table


# -- Demazure -----------------------------------------------------------------

@njit
def _demazure_numba(exps, table, radix, i):
    m, n = exps.shape
    total = 0
    for r in range(m):
        total += abs(exps[r, i] - exps[r, i + 1])
    rows = np.empty(total, dtype=np.int64)
    cols = np.empty(total, dtype=np.int64)
    vals = np.empty(total, dtype=np.int64)
    pos = 0
    for r in range(m):
        a = exps[r, i]
        b = exps[r, i + 1]
        if a == b:
            continue
        lo = min(a, b)
        d = abs(a - b)
        sign = 1 if a > b else -1
        base = 0
        for k in range(n):
            if k != i and k != i + 1:
                base += exps[r, k] * radix[k]
        base += lo * (radix[i] + radix[i + 1])
        for j in range(d):
            code = base + j * radix[i] + (d - 1 - j) * radix[i + 1]
            rows[pos] = table[code]
            cols[pos] = r
            vals[pos] = sign
            pos += 1
    return rows, cols, vals


def _demazure_numpy(exps, table, radix, i):
    a = exps[:, i]
    b = exps[:, i + 1]
    d = np.abs(a - b)
    lo = np.minimum(a, b)
    sign = np.sign(a - b)
    base = exps @ radix - a * radix[i] - b * radix[i + 1] + lo * (radix[i] + radix[i + 1])
    cols = np.repeat(np.arange(exps.shape[0], dtype=np.int64), d)
    starts = np.cumsum(d) - d
    j = np.arange(int(d.sum()), dtype=np.int64) - np.repeat(starts, d)
    dd = np.repeat(d, d)
    codes = np.repeat(base, d) + j * radix[i] + (dd - 1 - j) * radix[i + 1]
    return table[codes], cols, np.repeat(sign, d).astype(np.int64)


def demazure_triplets(exps: np.ndarray, table: np.ndarray, D: int, i: int, backend: str | None = None):
    """Triplets of t_i (0-based pair ``i, i+1``) on the basis ``exps``."""
    radix = radix_weights(exps.shape[1], D)
    if resolve_backend(backend) == "numba":
        return _demazure_numba(exps, table, radix, i)
    return _demazure_numpy(exps, table, radix, i)


# -- multiplication by x_k ------------------------------------------------------

@njit
def _xmul_numba(exps, table, radix, k, D):
    m = exps.shape[0]
    rows = np.empty(m, dtype=np.int64)
    cols = np.empty(m, dtype=np.int64)
    pos = 0
    for r in range(m):
        deg = 0
        for c in range(exps.shape[1]):
            deg += exps[r, c]
        if deg >= D:
            continue
        code = 0
        for c in range(exps.shape[1]):
            code += exps[r, c] * radix[c]
        rows[pos] = table[code + radix[k]]
        cols[pos] = r
        pos += 1
    return rows[:pos], cols[:pos], np.ones(pos, dtype=np.int64)


def _xmul_numpy(exps, table, radix, k, D):
    keep = np.nonzero(exps.sum(axis=1) < D)[0].astype(np.int64)
    codes = exps[keep] @ radix + radix[k]
    return table[codes], keep, np.ones(keep.shape[0], dtype=np.int64)


def xmul_triplets(exps: np.ndarray, table: np.ndarray, D: int, k: int, backend: str | None = None):
    """Triplets of multiplication by x_k (0-based); top-degree columns are dropped."""
    radix = radix_weights(exps.shape[1], D)
    if resolve_backend(backend) == "numba":
        return _xmul_numba(exps, table, radix, k, D)
    return _xmul_numpy(exps, table, radix, k, D)
