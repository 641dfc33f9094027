"""Gaussian elimination of complexes whose objects are sums of shifted copies of Q.

Maps between copies live in a test ring standing in for End(Q): a polynomial
ring over Q with positive-degree generators, truncated above a degree bound.
A map from a copy in shift j to a copy in shift j' must be homogeneous of
degree j' - j (so it vanishes when j' < j); degree-0 entries are scalars.

The reduction works upward from position 0. At each step the scalar part of
the current map is split as kernel + complement on the source and image +
cokernel on the target. The complement-to-image block is invertible because
it is block upper triangular with invertible scalar diagonal. The block is
cancelled, leaving the kernel part (the next B_i) and the cokernel (a
residual object). An exact complex leaves nothing behind.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from ..qcore import LaurentPoly
from .complexes import GradedComplex, GradedVS, homology
from .linalg import complete_basis, inverse, nullspace, rank

Mono = tuple[int, ...]
Elem = dict  # Mono -> Fraction, zero-free


class TruncatedRing:
    """Q[y_1..y_m] with deg y_k = degrees[k], everything above ``bound`` set to 0."""

    def __init__(self, degrees=(1, 2), bound: int = 12):
        if any(d <= 0 for d in degrees):
            raise ValueError("generator degrees must be positive")
        self.degrees = tuple(degrees)
        self.bound = bound

    def deg(self, m: Mono) -> int:
        return sum(a * d for a, d in zip(m, self.degrees))

    @property
    def one_mono(self) -> Mono:
        return (0,) * len(self.degrees)

    def scalar(self, c) -> Elem:
        c = Fraction(c)
        return {self.one_mono: c} if c else {}

    def add(self, a: Elem, b: Elem) -> Elem:
        out = dict(a)
        for m, c in b.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return out

    def neg(self, a: Elem) -> Elem:
        return {m: -c for m, c in a.items()}

    def mul(self, a: Elem, b: Elem) -> Elem:
        out: Elem = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                if self.deg(m) > self.bound:
                    continue
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return out

    def degrees_of(self, a: Elem) -> set[int]:
        return {self.deg(m) for m in a}

    def constant(self, a: Elem) -> Fraction:
        return a.get(self.one_mono, Fraction(0))

    @lru_cache(maxsize=None)
    def monomials(self, d: int) -> tuple[Mono, ...]:
        out = []
        for total in range(d + 1):
            for combo in combinations_with_replacement(range(len(self.degrees)), total):
                m = [0] * len(self.degrees)
                for k in combo:
                    m[k] += 1
                if self.deg(tuple(m)) == d:
                    out.append(tuple(m))
        return tuple(sorted(set(out)))

    def random_homogeneous(self, rng: random.Random, d: int, span: int = 3) -> Elem:
        out: Elem = {}
        for m in self.monomials(d):
            c = rng.randint(-span, span)
            if c:
                out[m] = Fraction(c)
        return out

    # matrices -------------------------------------------------------------
    def mat_mul(self, a: list, b: list, inner: int | None = None) -> list:
        n = len(a)
        k = len(b) if inner is None else inner
        m = len(b[0]) if b else 0
        out = [[{} for _ in range(m)] for _ in range(n)]
        for i in range(n):
            for t in range(k):
                if not a[i][t]:
                    continue
                for j in range(m):
                    if b[t][j]:
                        out[i][j] = self.add(out[i][j], self.mul(a[i][t], b[t][j]))
        return out

    def mat_add(self, a: list, b: list) -> list:
        return [[self.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

    def mat_neg(self, a: list) -> list:
        return [[self.neg(x) for x in r] for r in a]

    def mat_scalar(self, rows) -> list:
        return [[self.scalar(x) for x in r] for r in rows]

    def mat_is_zero(self, a: list) -> bool:
        return all(not x for r in a for x in r)

    def identity(self, n: int) -> list:
        return [[self.scalar(int(i == j)) for j in range(n)] for i in range(n)]

    def mat_constant(self, a: list) -> list:
        return [[self.constant(x) for x in r] for r in a]


def _zeros(n: int, m: int) -> list:
    return [[{} for _ in range(m)] for _ in range(n)]


@dataclass
class QComplex:
    """objects[i] lists the shift of each copy of Q at position i;
    maps[i] (i >= 1) is a len(objects[i-1]) x len(objects[i]) matrix over the ring."""

    ring: TruncatedRing
    objects: list
    maps: dict = field(default_factory=dict)

    def map(self, i: int) -> list:
        if i in self.maps:
            return self.maps[i]
        return _zeros(len(self.objects[i - 1]) if 0 <= i - 1 < len(self.objects) else 0,
                      len(self.objects[i]) if 0 <= i < len(self.objects) else 0)

    @property
    def top(self) -> int:
        return len(self.objects) - 1

    def violations(self) -> list[str]:
        out = []
        R = self.ring
        for i in range(1, len(self.objects)):
            m = self.map(i)
            src, tgt = self.objects[i], self.objects[i - 1]
            if len(m) != len(tgt) or any(len(r) != len(src) for r in m):
                out.append(f"map {i} has the wrong shape")
                continue
            for r, jt in enumerate(tgt):
                for c, js in enumerate(src):
                    e = m[r][c]
                    if not e:
                        continue
                    degs = R.degrees_of(e)
                    if jt < js:
                        out.append(f"map {i} entry ({r},{c}) goes from shift {js} down to {jt}")
                    elif degs != {jt - js}:
                        kind = "non-scalar degree-0 entry" if jt == js else "inhomogeneous entry"
                        out.append(f"map {i} entry ({r},{c}): {kind}, degrees {sorted(degs)} "
                                   f"but expected {jt - js}")
        for i in range(2, len(self.objects)):
            if not R.mat_is_zero(R.mat_mul(self.map(i - 1), self.map(i), len(self.objects[i - 1]))):
                out.append(f"maps {i - 1} and {i} do not compose to zero")
        return out

    def validate(self):
        v = self.violations()
        if v:
            raise ValueError("invalid Q-complex: " + "; ".join(v))

    def scalar_complex(self) -> GradedComplex:
        """The complex of graded vector spaces (V, M) from the degree-0 blocks."""
        objs = [GradedVS(tuple(((k, j), j) for k, j in enumerate(o))) for o in self.objects]
        diffs = {}
        for i in range(1, len(self.objects)):
            m = self.map(i)
            ent = {}
            for r, jt in enumerate(self.objects[i - 1]):
                for c, js in enumerate(self.objects[i]):
                    if jt == js:
                        v = self.ring.constant(m[r][c])
                        if v:
                            ent[(r, c)] = v
            diffs[i] = ent
        return GradedComplex(objs, diffs, 0)


def graded(shifts) -> LaurentPoly:
    out: dict[int, int] = {}
    for j in shifts:
        out[j] = out.get(j, 0) + 1
    return LaurentPoly(out)


@dataclass
class ReductionStep:
    position: int
    kept: list          # shifts of the kernel part W (the new B at position+1)
    cancelled: int      # size of the invertible block
    residual: list      # shifts of the cokernel part left at `position`
    inverse_certified: bool


@dataclass
class ReductionReport:
    steps: list
    B: list             # shifts of B_0 = A_0, B_1, ..., B_n
    final_objects: list  # residual shifts per position
    final_maps: dict

    @property
    def final_zero(self) -> bool:
        return all(not o for o in self.final_objects)

    def final_dims(self) -> list[dict[int, int]]:
        return [graded(o).coeffs for o in self.final_objects]

    def triangle_relation_holds(self, qc: QComplex) -> bool:
        """dim B_i = dim A_i - dim B_{i-1} + dim(residual at i-1), as graded dims."""
        for i in range(1, len(self.B)):
            lhs = graded(self.B[i])
            rhs = graded(qc.objects[i]) - graded(self.B[i - 1]) + graded(self.final_objects[i - 1])
            if lhs != rhs:
                return False
        return True


def _split_by_shift(shifts: list) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for k, j in enumerate(shifts):
        out.setdefault(j, []).append(k)
    return out


def invert_upper_triangular(R: TruncatedRing, s: list, row_shifts: list, col_shifts: list) -> tuple[list, bool]:
    """Invert s = D + P (D scalar part, P positive degree) by a terminating Neumann series."""
    n = len(s)
    if n == 0:
        return [], True
    D = R.mat_constant(s)
    # D only links equal shifts, so it is invertible iff each per-shift block is
    Dinv = R.mat_scalar(inverse(D))
    P = R.mat_add(s, R.mat_neg(R.mat_scalar(D)))
    step = R.mat_neg(R.mat_mul(Dinv, P))
    term = Dinv
    total = Dinv
    for _ in range(R.bound + 2):
        term = R.mat_mul(step, term)
        if R.mat_is_zero(term):
            break
        total = R.mat_add(total, term)
    else:
        raise ArithmeticError("Neumann series did not terminate")
    ok = R.mat_mul(s, total) == R.identity(n) and R.mat_mul(total, s) == R.identity(n)
    return total, ok


def _sub(m: list, rows: list[int], cols: list[int]) -> list:
    return [[m[r][c] for c in cols] for r in rows]


def gaussian_convolve(qc: QComplex) -> ReductionReport:
    qc.validate()
    R = qc.ring
    n = qc.top
    objs = [list(o) for o in qc.objects]
    maps = {i: [list(r) for r in qc.map(i)] for i in range(1, n + 1)}
    residual: list = [None] * (n + 1)
    res_maps: dict = {}
    steps, B = [], [list(objs[0])]
    below = None  # map from the current target object into the previous residual
    for k in range(n):
        src, tgt = objs[k + 1], objs[k]
        f = maps[k + 1]
        # scalar splits per shift
        P_cols = [[Fraction(0)] * len(src) for _ in range(len(src))]
        Q_cols = [[Fraction(0)] * len(tgt) for _ in range(len(tgt))]
        U_idx, W_idx, I_idx, C_idx = [], [], [], []
        new_src_shift, new_tgt_shift = [None] * len(src), [None] * len(tgt)
        src_by, tgt_by = _split_by_shift(src), _split_by_shift(tgt)
        u_vecs, w_vecs, im_vecs, c_vecs = [], [], [], []
        for j in sorted(set(src) | set(tgt)):
            sc, tr = src_by.get(j, []), tgt_by.get(j, [])
            M = [[R.constant(f[r][c]) for c in sc] for r in tr]
            ker = nullspace(M, len(sc)) if sc else []
            comp = complete_basis(ker, len(sc)) if sc else []
            imgs = [[sum((M[r][c] * u[c] for c in range(len(sc))), Fraction(0)) for r in range(len(tr))]
                    for u in comp]
            coker = complete_basis(imgs, len(tr)) if tr else []
            u_vecs += [(j, sc, v) for v in comp]
            w_vecs += [(j, sc, v) for v in ker]
            im_vecs += [(j, tr, v) for v in imgs]
            c_vecs += [(j, tr, v) for v in coker]
        # new bases: source = U then W, target = Im then C
        for col, (j, idx, v) in enumerate(u_vecs + w_vecs):
            for a, x in zip(idx, v):
                P_cols[a][col] = x
            new_src_shift[col] = j
        for col, (j, idx, v) in enumerate(im_vecs + c_vecs):
            for a, x in zip(idx, v):
                Q_cols[a][col] = x
            new_tgt_shift[col] = j
        nu, nw, ni = len(u_vecs), len(w_vecs), len(im_vecs)
        P = R.mat_scalar(P_cols)
        Pinv = R.mat_scalar(inverse(P_cols)) if src else []
        Qm = R.mat_scalar(Q_cols)
        Qinv = R.mat_scalar(inverse(Q_cols)) if tgt else []
        f2 = R.mat_mul(R.mat_mul(Qinv, f, len(tgt)), P, len(src)) if src and tgt else _zeros(len(tgt), len(src))
        U, W = list(range(nu)), list(range(nu, nu + nw))
        I, C = list(range(ni)), list(range(ni, len(tgt)))
        s = _sub(f2, I, U)
        r_blk = _sub(f2, I, W)
        d_blk = _sub(f2, C, U)
        e_blk = _sub(f2, C, W)
        sinv, ok = invert_upper_triangular(R, s, [new_tgt_shift[i] for i in I], [new_src_shift[u] for u in U])
        if not ok:
            raise ArithmeticError(f"cancelled block at position {k} failed to invert")
        corr = R.mat_mul(R.mat_mul(d_blk, sinv, len(U)), r_blk, len(I)) if U else _zeros(len(C), len(W))
        new_map = R.mat_add(e_blk, R.mat_neg(corr)) if C and W else _zeros(len(C), len(W))
        # residual at position k and its map down
        residual[k] = [new_tgt_shift[c] for c in C]
        if below is not None:
            tq = R.mat_mul(below, Qm, len(tgt)) if tgt else below
            res_maps[k] = [[row[c] for c in C] for row in tq]
        # update the map coming from above into the new W
        if k + 2 <= n:
            up = R.mat_mul(Pinv, maps[k + 2], len(src)) if src else maps[k + 2]
            maps[k + 2] = [up[w] for w in W]
        objs[k + 1] = [new_src_shift[w] for w in W]
        below = new_map
        B.append(list(objs[k + 1]))
        steps.append(ReductionStep(k, list(objs[k + 1]), len(U), residual[k], ok))
    residual[n] = list(objs[n])
    if n >= 1 and below is not None:
        res_maps[n] = below
    return ReductionReport(steps, B, residual, res_maps)


# -- random test complexes -----------------------------------------------------

def _random_invertible_scalar(rng: random.Random, shifts: list) -> list[list[Fraction]]:
    n = len(shifts)
    by = _split_by_shift(shifts)
    while True:
        m = [[Fraction(0)] * n for _ in range(n)]
        for idx in by.values():
            for a in idx:
                for b in idx:
                    m[a][b] = Fraction(rng.randint(-2, 2))
        if n == 0 or rank(m, n) == n:
            return m


def random_automorphism(R: TruncatedRing, rng: random.Random, shifts: list) -> list:
    n = len(shifts)
    g = R.mat_scalar(_random_invertible_scalar(rng, shifts))
    for r, jt in enumerate(shifts):
        for c, js in enumerate(shifts):
            if jt > js:
                g[r][c] = R.random_homogeneous(rng, jt - js)
    return g


def canonical_acyclic(rng: random.Random, length: int, max_dim: int, max_shift: int = 3,
                      extra: int = 0) -> tuple[list, dict, list]:
    """Sum of pieces Q<j> --id--> Q<j> plus ``extra`` isolated copies.

    Returns (objects, scalar maps as dict of sparse entries, isolated list).
    """
    objs = [[] for _ in range(length + 1)]
    n_pairs = rng.randint(length, 3 * length + 2)
    # isolated copies go in first so a full object can never crowd them out
    isolated = []
    for _ in range(extra):
        i = rng.randint(0, length)
        if len(objs[i]) < max_dim:
            j = rng.randint(0, max_shift)
            objs[i].append(j)
            isolated.append((i, j))
    pairs = []
    for _ in range(n_pairs):
        i = rng.randint(1, length)
        if len(objs[i]) < max_dim and len(objs[i - 1]) < max_dim:
            j = rng.randint(0, max_shift)
            objs[i].append(j)
            objs[i - 1].append(j)
            pairs.append((i, len(objs[i]) - 1, len(objs[i - 1]) - 1))
    maps = {i: {} for i in range(1, length + 1)}
    for i, c, r in pairs:
        maps[i][(r, c)] = Fraction(1)
    return objs, maps, isolated


def random_qcomplex(seed: int, exact: bool = True, max_len: int = 6, max_dim: int = 8,
                    ring: TruncatedRing | None = None) -> QComplex:
    """A seeded Q-complex: canonical acyclic pieces (plus isolated copies when
    ``exact`` is False) conjugated by random degree-nondecreasing automorphisms."""
    rng = random.Random(seed)
    R = ring or TruncatedRing()
    length = rng.randint(1, max_len)
    extra = 0 if exact else rng.randint(1, 3)
    objs, smaps, _ = canonical_acyclic(rng, length, max_dim, extra=extra)
    base = {}
    for i in range(1, length + 1):
        m = _zeros(len(objs[i - 1]), len(objs[i]))
        for (r, c), v in smaps[i].items():
            m[r][c] = R.scalar(v)
        base[i] = m
    gs = [random_automorphism(R, rng, o) for o in objs]
    ginv = []
    for g, o in zip(gs, objs):
        inv, ok = invert_upper_triangular(R, g, o, o)
        assert ok
        ginv.append(inv)
    maps = {}
    for i in range(1, length + 1):
        a = R.mat_mul(gs[i - 1], base[i], len(objs[i - 1])) if objs[i - 1] else base[i]
        maps[i] = R.mat_mul(a, ginv[i], len(objs[i])) if objs[i] else a
    qc = QComplex(R, objs, maps)
    qc.validate()
    return qc


def scalar_homology_dims(qc: QComplex) -> list[dict[int, int]]:
    sc = qc.scalar_complex()
    return [homology(sc, i).dims for i in range(len(qc.objects))]
