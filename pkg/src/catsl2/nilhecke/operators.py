"""The nil affine Hecke algebra acting on polynomials.

x_i acts by multiplication and t_i by the Demazure operator. A word is
applied right to left, so ``(X(1), T(1))`` means "apply t_1, then multiply by
x_1". With this convention ``x_i t_i = t_i x_{i+1} + 1`` holds literally.

Two routes compute the same thing:

* the dictionary route (:func:`apply_word`) acts on one :class:`MultiPoly`;
* :class:`OperatorSpace` turns generators into sparse integer matrices on a
  truncated monomial basis, which is how identities are checked on every
  monomial up to a spanning degree at once.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence, Union

import numpy as np
import scipy.sparse as sp

from .kernels import build_lookup, demazure_triplets, xmul_triplets
from .poly import MultiPoly, demazure, monomials_up_to, staircase

DEFAULT_SPAN_DEG = 8
_INT_GUARD = 2 ** 62


@dataclass(frozen=True)
class X:
    i: int


@dataclass(frozen=True)
class T:
    i: int


Gen = Union[X, T]
NhWord = tuple  # tuple of X / T


def check_word(word: Iterable[Gen], n: int) -> tuple:
    word = tuple(word)
    for g in word:
        if isinstance(g, X):
            if not 1 <= g.i <= n:
                raise ValueError(f"X({g.i}) out of range for n={n}")
        elif isinstance(g, T):
            if not 1 <= g.i <= n - 1:
                raise ValueError(f"T({g.i}) out of range for n={n}")
        else:
            raise TypeError(f"not a nil-Hecke generator: {g!r}")
    return word


def apply_word(word: Iterable[Gen], f: MultiPoly) -> MultiPoly:
    word = check_word(word, f.n)
    for g in reversed(word):
        if isinstance(g, X):
            f = MultiPoly.var(g.i, f.n) * f
        else:
            f = demazure(g.i, f)
    return f


# -- permutations and reduced words --------------------------------------------

def _left_descents(w: Sequence[int]) -> list[int]:
    pos = {v: k for k, v in enumerate(w)}
    return [i for i in range(1, len(w)) if pos[i + 1] < pos[i]]


def _swap_values(w: Sequence[int], i: int) -> tuple[int, ...]:
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)


def check_permutation(w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def length(w: Sequence[int]) -> int:
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def reduced_word(w: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least reduced word i_1..i_k with w = s_{i_1} ... s_{i_k}."""
    w = check_permutation(w)
    out = []
    while True:
        d = _left_descents(w)
        if not d:
            return tuple(out)
        out.append(d[0])
        w = _swap_values(w, d[0])


def all_reduced_words(w: Sequence[int]) -> list[tuple[int, ...]]:
    w = check_permutation(w)
    d = _left_descents(w)
    if not d:
        return [()]
    return sorted((i,) + rest for i in d for rest in all_reduced_words(_swap_values(w, i)))


def longest_element(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def t_word(w: Sequence[int], word: Sequence[int] | None = None) -> tuple:
    return tuple(T(i) for i in (reduced_word(w) if word is None else word))


def t_w(w: Sequence[int], f: MultiPoly, word: Sequence[int] | None = None) -> MultiPoly:
    """Apply t_w along ``word`` (default: the lexicographically least reduced word)."""
    w = check_permutation(w)
    if len(w) != f.n:
        raise ValueError("permutation size differs from variable count")
    if word is not None and tuple(word) not in all_reduced_words(w):
        raise ValueError(f"{word} is not a reduced word for {w}")
    return apply_word(t_word(w, word), f)


# -- matrix route --------------------------------------------------------------

class OperatorSpace:
    """Generator matrices on the monomials of degree <= D in n variables."""

    def __init__(self, n: int, D: int, backend: str | None = None):
        self.n, self.D, self.backend = n, D, backend
        self.basis = monomials_up_to(n, D)
        self.exps = np.array(self.basis, dtype=np.int64).reshape(len(self.basis), n)
        self.index = {e: k for k, e in enumerate(self.basis)}
        self.degrees = self.exps.sum(axis=1)
        self._table = build_lookup(self.exps, D)
        self._cache: dict = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _coo(self, rows, cols, vals):
        m = self.dim
        return sp.csr_matrix((vals, (rows, cols)), shape=(m, m), dtype=np.int64)

    def gen(self, g: Gen) -> sp.csr_matrix:
        if g not in self._cache:
            if isinstance(g, X):
                trip = xmul_triplets(self.exps, self._table, self.D, g.i - 1, self.backend)
            else:
                trip = demazure_triplets(self.exps, self._table, self.D, g.i - 1, self.backend)
            self._cache[g] = self._coo(*trip)
        return self._cache[g]

    def poly_mul(self, f: MultiPoly) -> sp.csr_matrix:
        """Multiplication by f, dropping anything pushed above degree D."""
        rows, cols, vals = [], [], []
        for c, e in enumerate(self.basis):
            for fe, fc in f.terms.items():
                tgt = tuple(a + b for a, b in zip(e, fe))
                r = self.index.get(tgt)
                if r is not None:
                    rows.append(r)
                    cols.append(c)
                    vals.append(fc)
        return self._coo(np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64),
                         np.array(vals, dtype=np.int64))

    def identity(self) -> sp.csr_matrix:
        return sp.identity(self.dim, dtype=np.int64, format="csr")

    def factor(self, fac) -> sp.csr_matrix:
        if isinstance(fac, (X, T)):
            return self.gen(fac)
        if isinstance(fac, MultiPoly):
            return self.poly_mul(fac)
        if isinstance(fac, int):
            return self.identity() * fac
        raise TypeError(f"unsupported operator factor {fac!r}")

    @staticmethod
    def _matmul(a: sp.csr_matrix, b: sp.csr_matrix) -> sp.csr_matrix:
        amax = int(abs(a).max()) if a.nnz else 0
        bmax = int(abs(b).max()) if b.nnz else 0
        width = int(np.diff(a.indptr).max()) if a.nnz else 0
        if amax * bmax * max(width, 1) >= _INT_GUARD:
            raise OverflowError("int64 guard tripped in sparse product")
        return a @ b

    def word_matrix(self, factors: Sequence) -> sp.csr_matrix:
        out = self.identity()
        for fac in factors:
            out = self._matmul(out, self.factor(fac))
        return out

    def expr_matrix(self, expr) -> sp.csr_matrix:
        """``expr`` is a list of (coeff, factors) pairs summed together."""
        out = sp.csr_matrix((self.dim, self.dim), dtype=np.int64)
        for coeff, factors in expr:
            out = out + self.word_matrix(factors) * coeff
        return out

    def columns_up_to(self, max_deg: int) -> np.ndarray:
        return np.nonzero(self.degrees <= max_deg)[0]

    def vector(self, f: MultiPoly) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        for e, c in f.terms.items():
            v[self.index[e]] = c
        return v

    def poly(self, v) -> MultiPoly:
        v = np.asarray(v).ravel()
        return MultiPoly(self.n, ((self.basis[k], int(v[k])) for k in np.nonzero(v)[0]))


def _raise(factors) -> int:
    up = 0
    for fac in factors:
        if isinstance(fac, X):
            up += 1
        elif isinstance(fac, MultiPoly):
            up += max(fac.degree(), 0)
    return up


def make_space(n: int, max_deg: int, exprs, backend: str | None = None) -> OperatorSpace:
    extra = max((_raise(fs) for ex in exprs for _, fs in ex), default=0)
    return OperatorSpace(n, max_deg + extra, backend)


def operators_equal(lhs, rhs, n: int, max_deg: int = DEFAULT_SPAN_DEG, backend: str | None = None) -> bool:
    """Do two operator expressions agree on every monomial of degree <= max_deg?

    An expression is a list of ``(coeff, factors)``; factors are X, T,
    MultiPoly (multiplication) or int, composed right to left.
    """
    space = make_space(n, max_deg, [lhs, rhs], backend)
    diff = (space.expr_matrix(lhs) - space.expr_matrix(rhs))[:, space.columns_up_to(max_deg)]
    diff.eliminate_zeros()
    return diff.nnz == 0


def word(*factors):
    return [(1, list(factors))]


def relation_table(n: int, max_deg: int = DEFAULT_SPAN_DEG, backend: str | None = None) -> dict[str, bool]:
    """The defining relations, each checked for every admissible index."""
    one = MultiPoly.const(1, n)
    checks: dict[str, list[bool]] = {k: [] for k in (
        "x_i x_j = x_j x_i",
        "x_i t_i = t_i x_{i+1} + 1",
        "x_{i+1} t_i = t_i x_i - 1",
        "t_i x_j = x_j t_i (j != i, i+1)",
        "t_i^2 = 0",
        "t_i t_{i+1} t_i = t_{i+1} t_i t_{i+1}",
        "t_i t_j = t_j t_i (|i-j| >= 2)",
    )}
    ev = lambda lhs, rhs: operators_equal(lhs, rhs, n, max_deg, backend)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            checks["x_i x_j = x_j x_i"].append(ev(word(X(i), X(j)), word(X(j), X(i))))
    for i in range(1, n):
        checks["x_i t_i = t_i x_{i+1} + 1"].append(
            ev(word(X(i), T(i)), word(T(i), X(i + 1)) + [(1, [one])]))
        checks["x_{i+1} t_i = t_i x_i - 1"].append(
            ev(word(X(i + 1), T(i)), word(T(i), X(i)) + [(-1, [one])]))
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                checks["t_i x_j = x_j t_i (j != i, i+1)"].append(ev(word(T(i), X(j)), word(X(j), T(i))))
        checks["t_i^2 = 0"].append(ev(word(T(i), T(i)), []))
        if i + 1 < n:
            checks["t_i t_{i+1} t_i = t_{i+1} t_i t_{i+1}"].append(
                ev(word(T(i), T(i + 1), T(i)), word(T(i + 1), T(i), T(i + 1))))
        for j in range(i + 2, n):
            checks["t_i t_j = t_j t_i (|i-j| >= 2)"].append(ev(word(T(i), T(j)), word(T(j), T(i))))
    return {k: all(v) for k, v in checks.items()}


def staircase_idempotent_check(n: int, max_deg: int | None = None, backend: str | None = None) -> int:
    """Sign c with t_{w0} x^delta t_{w0} = c t_{w0} on all monomials up to max_deg."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ell = n * (n - 1) // 2
    max_deg = max(DEFAULT_SPAN_DEG, ell) if max_deg is None else max_deg
    if max_deg < ell:
        raise ValueError("spanning degree must reach the length of w0")
    tw0 = list(t_word(longest_element(n)))
    space = OperatorSpace(n, max_deg, backend)
    cols = space.columns_up_to(max_deg)
    lhs = space.word_matrix(tw0 + [staircase(n)] + tw0)[:, cols]
    base = space.word_matrix(tw0)[:, cols]
    base.eliminate_zeros()
    if base.nnz == 0:
        raise AssertionError("t_{w0} vanishes on the spanning set")
    for sign in (1, -1):
        d = lhs - base * sign
        d.eliminate_zeros()
        if d.nnz == 0:
            return sign
    raise AssertionError("t_{w0} x^delta t_{w0} is not a signed multiple of t_{w0}")


def telescoping_identity_check(i: int, a: int, n: int, max_deg: int = DEFAULT_SPAN_DEG,
                               backend: str | None = None) -> bool:
    """x_{i+1}^a t_i = t_i x_i^a - sum_j x_i^j x_{i+1}^{a-1-j}."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"index {i} out of range 1..{n - 1}")
    if a < 1:
        raise ValueError("a must be >= 1")
    xi, xj = MultiPoly.var(i, n), MultiPoly.var(i + 1, n)
    tail = sum((xi ** j * xj ** (a - 1 - j) for j in range(a)), MultiPoly.const(0, n))
    lhs = word(*([X(i + 1)] * a), T(i))
    rhs = word(T(i), *([X(i)] * a)) + [(-1, [tail])]
    return operators_equal(lhs, rhs, n, max_deg, backend)


def far_commutation_check(i: int, j: int, n: int, max_deg: int = DEFAULT_SPAN_DEG) -> bool:
    if j in (i, i + 1):
        raise ValueError("x_j must not touch the pair (i, i+1)")
    return operators_equal(word(T(i), X(j)), word(X(j), T(i)), n, max_deg)


def symmetric_polys(n: int, i: int, max_deg: int) -> list[MultiPoly]:
    """A spanning set of polynomials symmetric in x_i, x_{i+1} of degree <= max_deg."""
    out, seen = [], set()
    for e in monomials_up_to(n, max_deg):
        f = MultiPoly.monomial(e) + MultiPoly.monomial(e).swap(i)
        if f.is_symmetric_in(i) and f not in seen:
            # halve doubled diagonal monomials
            if f == MultiPoly.monomial(e) * 2:
                f = MultiPoly.monomial(e)
            seen.add(f)
            out.append(f)
    return out


def sym2_checks(n: int, sym_deg: int = 6, max_deg: int = 4) -> bool:
    """For f symmetric in x_i, x_{i+1}: t_i f = f t_i and t_i f t_i = 0."""
    for i in range(1, n):
        for f in symmetric_polys(n, i, sym_deg):
            if not operators_equal(word(T(i), f), word(f, T(i)), n, max_deg):
                return False
            if not operators_equal(word(T(i), f, T(i)), [], n, max_deg):
                return False
    return True


def w0_kills_pair_symmetric(n: int, sym_deg: int = 4, max_deg: int | None = None) -> bool:
    """t_{w0} f t_{w0} = 0 whenever f is symmetric in some adjacent pair."""
    ell = n * (n - 1) // 2
    max_deg = ell + 1 if max_deg is None else max_deg
    tw0 = list(t_word(longest_element(n)))
    for i in range(1, n):
        for f in symmetric_polys(n, i, sym_deg):
            if not operators_equal(word(*tw0, f, *tw0), [], n, max_deg):
                return False
    return True


def w0_degree_check(n: int, max_deg: int | None = None, backend: str | None = None) -> bool:
    """t_{w0} kills degrees < l(w0) and maps degree d into degree d - l(w0)."""
    ell = n * (n - 1) // 2
    max_deg = ell + 3 if max_deg is None else max_deg
    space = OperatorSpace(n, max_deg, backend)
    m = space.word_matrix(t_word(longest_element(n))).tocoo()
    src = space.degrees[m.col]
    tgt = space.degrees[m.row]
    nz = m.data != 0
    if np.any(src[nz] < ell):
        return False
    return bool(np.all(tgt[nz] == src[nz] - ell))


def reduced_word_independence(n: int, max_deg: int = 6) -> bool:
    """Every reduced word of every permutation of S_n gives the same t_w."""
    space = OperatorSpace(n, max_deg)
    cols = space.columns_up_to(max_deg)
    for w in permutations(range(1, n + 1)):
        words = all_reduced_words(w)
        ref = space.word_matrix([T(i) for i in words[0]])[:, cols]
        for wd in words[1:]:
            d = space.word_matrix([T(i) for i in wd])[:, cols] - ref
            d.eliminate_zeros()
            if d.nnz:
                return False
    return True
