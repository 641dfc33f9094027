"""Exact linear algebra over Q, backed by sympy's DomainMatrix."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Rows = Sequence[Sequence[Fraction | int]]


def _dm(rows: Rows, ncols: int) -> DomainMatrix:
    data = [[QQ(int(x.numerator), int(x.denominator)) if isinstance(x, Fraction) else QQ(int(x)) for x in r]
            for r in rows]
    return DomainMatrix(data, (len(rows), ncols), QQ)


def _to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _rows(dm: DomainMatrix) -> list[list[Fraction]]:
    return [[_to_fraction(x) for x in r] for r in dm.to_list()]


def rank(rows: Rows, ncols: int | None = None) -> int:
    if not rows:
        return 0
    ncols = len(rows[0]) if ncols is None else ncols
    if ncols == 0:
        return 0
    return _dm(rows, ncols).rank()


def sparse_rank(entries: dict[tuple[int, int], Fraction], nrows: int, ncols: int) -> int:
    if not entries or nrows == 0 or ncols == 0:
        return 0
    rows = [[0] * ncols for _ in range(nrows)]
    for (r, c), v in entries.items():
        rows[r][c] = v
    return rank(rows, ncols)


def nullspace(rows: Rows, ncols: int) -> list[list[Fraction]]:
    """Basis of {x : A x = 0} as a list of vectors (reduced, deterministic)."""
    if ncols == 0:
        return []
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ns = _dm(rows, ncols).nullspace()
    return _rows(ns) if ns.shape[0] else []


def rref_pivots(vectors: list[list[Fraction]], ncols: int) -> list[int]:
    if not vectors:
        return []
    _, pivots = _dm(vectors, ncols).rref()
    return list(pivots)


def complete_basis(vectors: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Standard basis vectors completing ``vectors`` to a basis of Q^ncols."""
    piv = set(rref_pivots(vectors, ncols))
    return [[Fraction(int(i == k)) for i in range(ncols)] for k in range(ncols) if k not in piv]


def inverse(rows: Rows) -> list[list[Fraction]]:
    n = len(rows)
    if n == 0:
        return []
    return _rows(_dm(rows, n).inv())


def matmul(a: Rows, b: Rows) -> list[list[Fraction]]:
    if not a:
        return []
    m = len(b[0]) if b else 0
    return [[sum((Fraction(a[i][k]) * b[k][j] for k in range(len(b)) if a[i][k]), Fraction(0))
             for j in range(m)] for i in range(len(a))]


def transpose(a: Rows, ncols: int | None = None) -> list[list]:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]
