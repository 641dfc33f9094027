"""Degree-gap arithmetic behind uniqueness and existence of the convolution of Theta.

For terms A_s = F^{(lam+s)} E^{(s)} [-s] the two vanishing conditions are
Hom(A_s[k-1], A_{s-k}) = 0 for k >= 2 and Hom(A_s[k-2], A_{s-k}) = 0 for
k >= 3. After adjunction and the merge rules, with a = lam+s-k and b = lam+s,
both reduce to a comparison, for each 0 <= j <= a, between

* the highest degree of E^{(a-j+s)} in the source,
  d_max = s(a-j) - (a-j)(s-k+2b-j), and
* the lowest degree in the target,
  d_min = -(b-j)(s-k) - j(s-k+b-j) + (lam+s)s - h,

where h is the homological gap (1 for the first condition, 2 for the second).
Vanishing follows from d_max < d_min.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from ._accel import njit, resolve_backend


@dataclass(frozen=True)
class GapReport:
    condition: int
    N: int | None
    lam: int
    s: int
    k: int
    j: int
    a: int
    b: int
    d_max: int
    d_min: int
    gap_ok: bool

    def to_json(self) -> dict:
        return asdict(self)


def _check(lam: int, s: int, k: int, j: int, kmin: int):
    if lam < 0 or s < 0:
        raise ValueError("need lambda >= 0 and s >= 0")
    if k < kmin:
        raise ValueError(f"this condition needs k >= {kmin}, got {k}")
    a = lam + s - k
    if not 0 <= j <= a:
        raise ValueError(f"need 0 <= j <= a = {a}, got j={j}")


def d_max_raw(lam: int, s: int, k: int, j: int) -> int:
    a, b = lam + s - k, lam + s
    return s * (a - j) - (a - j) * (s - k + 2 * b - j)


def d_min_raw(lam: int, s: int, k: int, j: int, h: int) -> int:
    b = lam + s
    return -(b - j) * (s - k) - j * (s - k + b - j) + (lam + s) * s - h


def d_max_simplified(lam: int, s: int, k: int, j: int) -> int:
    a, b = lam + s - k, lam + s
    return (a - j) * (k - 2 * b + j)


def d_min_simplified(lam: int, s: int, k: int, j: int, h: int) -> int:
    b = lam + s
    return b * (k - j) + j * j - h


def gap_quadratic(k: int, a: int, b: int, j: int, h: int) -> int:
    """2j^2 + 2j(k-2b) + k^2 + 2ab - h, equal to d_min - d_max when a = b - k."""
    return 2 * j * j + 2 * j * (k - 2 * b) + k * k + 2 * a * b - h


def _report(cond: int, lam: int, s: int, k: int, j: int, N: int | None) -> GapReport:
    h = cond
    dmax, dmin = d_max_raw(lam, s, k, j), d_min_raw(lam, s, k, j, h)
    # the simplified forms must agree with the unsimplified ones
    assert dmax == d_max_simplified(lam, s, k, j)
    assert dmin == d_min_simplified(lam, s, k, j, h)
    a, b = lam + s - k, lam + s
    assert dmin - dmax == gap_quadratic(k, a, b, j, h)
    return GapReport(cond, N, lam, s, k, j, a, b, dmax, dmin, dmax < dmin)


def degree_gap_cond1(lam: int, s: int, k: int, j: int, N: int | None = None) -> GapReport:
    _check(lam, s, k, j, 2)
    return _report(1, lam, s, k, j, N)


def degree_gap_cond2(lam: int, s: int, k: int, j: int, N: int | None = None) -> GapReport:
    _check(lam, s, k, j, 3)
    return _report(2, lam, s, k, j, N)


def discriminants(k: int) -> tuple[int, int]:
    if k < 0:
        raise ValueError("k must be >= 0")
    return -4 * k * k + 8, -4 * k * k + 16


def discriminant_of(k: int, a: int, b: int, h: int) -> int:
    """B^2 - 4AC of the gap quadratic in j, computed from its coefficients."""
    A, B, C = 2, 2 * (k - 2 * b), k * k + 2 * a * b - h
    return B * B - 4 * A * C


def closed_form_ok(k: int, cond: int) -> bool:
    """Positive leading coefficient and negative discriminant: positive for every j."""
    d1, d2 = discriminants(k)
    return (d1 if cond == 1 else d2) < 0


@dataclass
class ConvolutionCheck:
    N: int
    lam: int
    rows: list
    closed_form_agrees: bool

    @property
    def passed(self) -> bool:
        return self.closed_form_agrees and all(r.gap_ok for r in self.rows)

    def to_json(self) -> dict:
        return {"N": self.N, "lambda": self.lam, "passed": self.passed,
                "closed_form_agrees": self.closed_form_agrees,
                "rows": [r.to_json() for r in self.rows]}


def check_convolution_conditions(N: int, lam: int) -> ConvolutionCheck:
    if lam < 0 or lam > N or (N - lam) % 2:
        raise ValueError(f"need 0 <= lambda <= N with matching parity, got N={N}, lambda={lam}")
    smax = (N - lam) // 2
    rows, agree = [], True
    for s in range(smax + 1):
        for k in range(2, s + 1):
            for cond, fn in ((1, degree_gap_cond1), (2, degree_gap_cond2)):
                if cond == 2 and k < 3:
                    continue
                a = lam + s - k
                disc = discriminant_of(k, a, lam + s, cond)
                if disc != discriminants(k)[cond - 1]:
                    agree = False
                brute = []
                for j in range(a + 1):
                    rep = fn(lam, s, k, j, N)
                    rows.append(rep)
                    brute.append(rep.gap_ok)
                if closed_form_ok(k, cond) and not all(brute):
                    agree = False
    return ConvolutionCheck(N, lam, rows, agree)


# -- vectorised sweep ------------------------------------------------------------------

@njit
def _sweep_numba(max_n):
    out = np.zeros(4, dtype=np.int64)  # cases1, fails1, cases2, fails2
    for N in range(max_n + 1):
        for lam in range(N % 2, N + 1, 2):
            smax = (N - lam) // 2
            for s in range(smax + 1):
                b = lam + s
                for k in range(2, s + 1):
                    a = b - k
                    for j in range(a + 1):
                        dmax = s * (a - j) - (a - j) * (s - k + 2 * b - j)
                        base = -(b - j) * (s - k) - j * (s - k + b - j) + b * s
                        out[0] += 1
                        if not dmax < base - 1:
                            out[1] += 1
                        if k >= 3:
                            out[2] += 1
                            if not dmax < base - 2:
                                out[3] += 1
    return out


def _grid(max_n: int) -> np.ndarray:
    rows = []
    for N in range(max_n + 1):
        for lam in range(N % 2, N + 1, 2):
            for s in range((N - lam) // 2 + 1):
                for k in range(2, s + 1):
                    a = lam + s - k
                    js = np.arange(a + 1, dtype=np.int64)
                    block = np.empty((a + 1, 4), dtype=np.int64)
                    block[:, 0], block[:, 1], block[:, 2], block[:, 3] = lam, s, k, js
                    rows.append(block)
    return np.concatenate(rows) if rows else np.zeros((0, 4), dtype=np.int64)


def _sweep_numpy(max_n: int) -> np.ndarray:
    g = _grid(max_n)
    lam, s, k, j = g.T
    b = lam + s
    a = b - k
    dmax = s * (a - j) - (a - j) * (s - k + 2 * b - j)
    base = -(b - j) * (s - k) - j * (s - k + b - j) + b * s
    c2 = k >= 3
    return np.array([g.shape[0], np.count_nonzero(~(dmax < base - 1)),
                     np.count_nonzero(c2), np.count_nonzero(c2 & ~(dmax < base - 2))], dtype=np.int64)


def gap_sweep(max_n: int, backend: str | None = None) -> dict[str, int]:
    """Counts of (N, lam, s, k, j) cases and failures for both conditions, N <= max_n."""
    be = resolve_backend(backend)
    out = _sweep_numba(max_n) if be == "numba" else _sweep_numpy(max_n)
    return {"cond1_cases": int(out[0]), "cond1_failures": int(out[1]),
            "cond2_cases": int(out[2]), "cond2_failures": int(out[3])}


# -- bounds excluding F^{(r)} from F^{(r+a)} E^{(a)} ------------------------------------

def no_f_part_bounds(lam: int, r: int, a: int) -> tuple[int, int]:
    """(upper bound on k from maps into, lower bound on k from maps out of).

    Maps F^{(r)}<k> -> F^{(r+a)}E^{(a)} need k + a(lam+a+2r) - ar <= 0 after
    adjunction and merging; the mirrored argument gives k >= a(lam+r+a).
    """
    if a < 1:
        raise ValueError("a must be >= 1")
    upper = a * r - a * (lam + a + 2 * r)
    assert upper == -a * (lam + r + a)
    lower = a * (lam + r + a)
    return upper, lower


def no_f_part_contradiction(lam: int, r: int, a: int) -> bool:
    """True when no k meets both bounds."""
    upper, lower = no_f_part_bounds(lam, r, a)
    return upper < lower
