"""Finite chain complexes of graded vector spaces over Q and Koszul complexes."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Hashable, Iterable, Mapping

from ..qcore import ZERO, LaurentPoly
from .linalg import nullspace, sparse_rank


@dataclass(frozen=True)
class GradedVS:
    """A graded vector space with a labelled, degree-tagged basis."""

    basis: tuple = ()  # ((label, degree), ...)

    @classmethod
    def from_dims(cls, dims: Mapping[int, int]) -> "GradedVS":
        basis = []
        for d in sorted(dims):
            if dims[d] < 0:
                raise ValueError("dimensions must be >= 0")
            basis.extend(((d, k), d) for k in range(dims[d]))
        return cls(tuple(basis))

    @property
    def dims(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for _, d in self.basis:
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def degree(self, k: int) -> int:
        return self.basis[k][1]

    def labels(self) -> list:
        return [lab for lab, _ in self.basis]

    def graded_dim(self) -> LaurentPoly:
        return LaurentPoly(self.dims)

    def shift(self, m: int) -> "GradedVS":
        """The shift <m>: every degree d becomes d - m."""
        return GradedVS(tuple((lab, d - m) for lab, d in self.basis))

    def is_zero(self) -> bool:
        return not self.basis

    def to_json(self) -> dict:
        return {"dims": [[d, n] for d, n in self.dims.items()],
                "basis": [[_jsonable(lab), d] for lab, d in self.basis]}


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    return x


Sparse = dict  # (row, col) -> Fraction


@dataclass
class GradedComplex:
    """objects[k] sits at homological position bottom + k; diffs[i]: position i -> i-1."""

    objects: list
    diffs: dict = field(default_factory=dict)
    bottom: int = 0

    def __post_init__(self):
        for i, m in list(self.diffs.items()):
            src, tgt = self.obj(i), self.obj(i - 1)
            clean = {}
            for (r, c), v in m.items():
                v = Fraction(v)
                if not v:
                    continue
                if not (0 <= r < tgt.dim and 0 <= c < src.dim):
                    raise ValueError(f"entry {(r, c)} out of range in d_{i}")
                if tgt.degree(r) != src.degree(c):
                    raise ValueError(f"d_{i} entry {(r, c)} does not preserve degree")
                clean[(r, c)] = v
            self.diffs[i] = clean

    @property
    def top(self) -> int:
        return self.bottom + len(self.objects) - 1

    def positions(self) -> range:
        return range(self.bottom, self.top + 1)

    def obj(self, i: int) -> GradedVS:
        if self.bottom <= i <= self.top:
            return self.objects[i - self.bottom]
        return GradedVS()

    def d(self, i: int) -> Sparse:
        return self.diffs.get(i, {})

    def d_squared_zero(self) -> bool:
        for i in self.positions():
            a, b = self.d(i), self.d(i + 1)
            acc: dict = {}
            for (r, k), v in a.items():
                for (k2, c), w in b.items():
                    if k2 == k:
                        acc[(r, c)] = acc.get((r, c), 0) + v * w
            if any(acc.values()):
                return False
        return True

    def block(self, i: int, deg: int) -> tuple[dict, int, int, list[int], list[int]]:
        """The degree-``deg`` block of d_i with local indices."""
        src, tgt = self.obj(i), self.obj(i - 1)
        cols = [k for k in range(src.dim) if src.degree(k) == deg]
        rows = [k for k in range(tgt.dim) if tgt.degree(k) == deg]
        ci = {k: n for n, k in enumerate(cols)}
        ri = {k: n for n, k in enumerate(rows)}
        ent = {(ri[r], ci[c]): v for (r, c), v in self.d(i).items() if r in ri and c in ci}
        return ent, len(rows), len(cols), rows, cols

    def rank_in_degree(self, i: int, deg: int) -> int:
        ent, nr, nc, _, _ = self.block(i, deg)
        return sparse_rank(ent, nr, nc)

    def total_dim(self) -> int:
        return sum(o.dim for o in self.objects)

    def to_json(self) -> dict:
        out_d = []
        for i in sorted(self.diffs):
            per_deg: dict[int, list] = {}
            src = self.obj(i)
            for (r, c), v in sorted(self.diffs[i].items()):
                per_deg.setdefault(src.degree(c), []).append([r, c, str(v)])
            out_d.append({"position": i, "blocks": [{"degree": d, "triplets": t} for d, t in sorted(per_deg.items())]})
        return {"bottom": self.bottom,
                "objects": [o.to_json() for o in self.objects],
                "differentials": out_d}


def homology(c: GradedComplex, position: int) -> GradedVS:
    """Graded dimensions of ker d_position / im d_{position+1}."""
    obj = c.obj(position)
    dims = {}
    for deg, n in obj.dims.items():
        ker = n - c.rank_in_degree(position, deg)
        h = ker - c.rank_in_degree(position + 1, deg)
        if h:
            dims[deg] = h
    return GradedVS.from_dims(dims)


def homology_all(c: GradedComplex) -> dict[int, GradedVS]:
    return {i: homology(c, i) for i in c.positions()}


def is_exact(c: GradedComplex) -> bool:
    return all(h.is_zero() for h in homology_all(c).values())


def kernel_vectors(c: GradedComplex, position: int, deg: int) -> list[dict]:
    """Kernel of d_position in one degree, as sparse vectors on the full basis."""
    ent, nr, nc, rows, cols = c.block(position, deg)
    dense = [[Fraction(0)] * nc for _ in range(nr)]
    for (r, k), v in ent.items():
        dense[r][k] = v
    vecs = nullspace(dense, nc)
    return [{cols[k]: x for k, x in enumerate(v) if x} for v in vecs]


# -- Koszul complexes -------------------------------------------------------------

def wedge_insert(i: int, J: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
    """e_i ^ e_J as (sign, sorted J'), or None when i is already in J."""
    if i in J:
        return None
    before = sum(1 for j in J if j < i)
    return (-1 if before % 2 else 1), tuple(sorted(J + (i,)))


def _sym_basis(m: int, s: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(m), s):
        a = [0] * m
        for k in combo:
            a[k] += 1
        out.append(tuple(a))
    return out


def _koszul(degrees: list[int], l: int, keep=lambda J: True) -> GradedComplex:
    m = len(degrees)
    objects, index = [], []
    for s in range(l + 1):
        basis = []
        for alpha in _sym_basis(m, s):
            for J in combinations(range(m), l - s):
                if keep(J):
                    deg = sum(a * d for a, d in zip(alpha, degrees)) + sum(degrees[j] for j in J)
                    basis.append(((alpha, J), deg))
        basis.sort(key=lambda t: (t[1], t[0]))
        objects.append(GradedVS(tuple(basis)))
        index.append({lab: k for k, (lab, _) in enumerate(basis)})
    diffs = {}
    for s in range(1, l + 1):
        ent = {}
        for c, ((alpha, J), _) in enumerate(objects[s].basis):
            for i, ai in enumerate(alpha):
                if not ai:
                    continue
                w = wedge_insert(i, J)
                if w is None:
                    continue
                sign, J2 = w
                a2 = list(alpha)
                a2[i] -= 1
                r = index[s - 1][(tuple(a2), J2)]
                ent[(r, c)] = ent.get((r, c), 0) + sign * ai
        diffs[s] = ent
    return GradedComplex(objects, diffs, 0)


def build_koszul(degrees: Iterable[int], l: int) -> GradedComplex:
    """C_s = Sym^s M (x) Lambda^{l-s} M for s = l..0, M with the given basis degrees.

    d(e^alpha (x) e_J) = sum_i alpha_i e^{alpha - eps_i} (x) (e_i ^ e_J), where the
    wedge is sorted into increasing index order with the usual sign.
    """
    degrees = list(degrees)
    if l < 0 or l > len(degrees):
        raise ValueError(f"need 0 <= l <= dim M = {len(degrees)}, got l={l}")
    return _koszul(degrees, l)


def modified_koszul_data(lam: int, p: int) -> tuple[list[int], int, int]:
    """(degrees of e_0..e_{lam+p}, index of v, l)."""
    if lam < 0 or p < 0:
        raise ValueError("need lambda >= 0 and p >= 0")
    return [2 * i for i in range(lam + p + 1)], lam + p, p + 1


def build_modified_koszul(lam: int, p: int) -> GradedComplex:
    """The subcomplex C'_s = Sym^s M (x) Lambda^{l-s-1} M ^ v, s = p..0."""
    degrees, v, l = modified_koszul_data(lam, p)
    full = _koszul(degrees, l, keep=lambda J: v in J)
    # position l = p+1 would need Lambda^{-1}; it is empty, drop it
    assert full.objects[l].dim == 0
    return GradedComplex(full.objects[:l], {s: full.diffs[s] for s in range(1, l)}, 0)


def top_class_label(lam: int, p: int):
    """Label of v^p (x) v in C'_p."""
    m = lam + p + 1
    alpha = [0] * m
    alpha[lam + p] = p
    return tuple(alpha), (lam + p,)


def top_class_degree(lam: int, p: int) -> int:
    return 2 * (p + 1) * (lam + p)
