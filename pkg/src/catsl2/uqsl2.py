"""The irreducible U_q(sl2) modules V(N) in the divided-power basis.

Basis vectors are ``b_j = f^{(j)} v`` for ``j = 0..N`` where v is a highest
weight vector; ``b_j`` has weight ``N - 2j``. Every weight space is a line, so
weight-space blocks are 1x1 (or empty when the weight does not occur).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .qcore import ONE, ZERO, LaurentPoly, qbinom, qbinom_general

Matrix = list  # list of rows of LaurentPoly


class ModuleElement:
    __slots__ = ("N", "_coords")

    def __init__(self, N: int, coords: Mapping[int, LaurentPoly] | None = None):
        if N < 0:
            raise ValueError("highest weight must be >= 0")
        self.N = N
        c: dict[int, LaurentPoly] = {}
        for j, v in (coords or {}).items():
            if not 0 <= j <= N:
                raise ValueError(f"basis index {j} outside 0..{N}")
            if isinstance(v, int):
                v = LaurentPoly.const(v)
            if v:
                c[j] = c[j] + v if j in c else v
        self._coords = {j: v for j, v in c.items() if v}

    @classmethod
    def basis(cls, N: int, j: int) -> "ModuleElement":
        return cls(N, {j: ONE})

    @property
    def coords(self) -> dict[int, LaurentPoly]:
        return dict(self._coords)

    def __getitem__(self, j: int) -> LaurentPoly:
        return self._coords.get(j, ZERO)

    def is_zero(self) -> bool:
        return not self._coords

    def weights(self) -> set[int]:
        return {self.N - 2 * j for j in self._coords}

    def weight(self) -> int | None:
        """The weight if homogeneous and nonzero, else None."""
        w = self.weights()
        return w.pop() if len(w) == 1 else None

    def scale(self, c) -> "ModuleElement":
        return ModuleElement(self.N, {j: v * c for j, v in self._coords.items()})

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        if other.N != self.N:
            raise ValueError("elements of different modules")
        out = dict(self._coords)
        for j, v in other._coords.items():
            out[j] = out[j] + v if j in out else v
        return ModuleElement(self.N, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.N == other.N and self._coords == other._coords

    def __repr__(self):
        if not self._coords:
            return f"0 in V({self.N})"
        return " + ".join(f"({v})*b{j}" for j, v in sorted(self._coords.items()))


def act_f_div(r: int, v: ModuleElement) -> ModuleElement:
    if r < 0:
        raise ValueError("divided power exponent must be >= 0")
    return ModuleElement(v.N, {j + r: c * qbinom(j + r, r) for j, c in v.coords.items() if j + r <= v.N})


def act_e_div(r: int, v: ModuleElement) -> ModuleElement:
    if r < 0:
        raise ValueError("divided power exponent must be >= 0")
    N = v.N
    return ModuleElement(N, {j - r: c * qbinom(N - j + r, r) for j, c in v.coords.items() if j >= r})


def act_k(sign: int, v: ModuleElement) -> ModuleElement:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return ModuleElement(v.N, {j: c.shift(sign * (v.N - 2 * j)) for j, c in v.coords.items()})


def _check_weight(v: ModuleElement, lam: int):
    if lam < 0:
        raise ValueError(f"t is only defined on weights >= 0, got {lam}")
    if v.weights() - {lam}:
        raise ValueError(f"element is not homogeneous of weight {lam}")


def t_action(v: ModuleElement, lam: int) -> ModuleElement:
    """sum_s (-1)^s q^s f^{(lam+s)} e^{(s)} v for v of weight lam >= 0."""
    _check_weight(v, lam)
    out = ModuleElement(v.N)
    s = 0
    while True:
        ev = act_e_div(s, v)
        if ev.is_zero():
            break
        term = act_f_div(lam + s, ev).scale(LaurentPoly.monomial(s, -1 if s % 2 else 1))
        out = out + term
        s += 1
    return out


# -- weight-space blocks ------------------------------------------------------

def weight_index(N: int, lam: int) -> list[int]:
    """Basis indices spanning the weight-lam space of V(N)."""
    if abs(lam) <= N and (N - lam) % 2 == 0:
        return [(N - lam) // 2]
    return []


@dataclass(frozen=True)
class WeightOperator:
    N: int
    source: int
    target: int
    matrix: tuple = field(default_factory=tuple)  # rows of LaurentPoly, target x source

    @property
    def source_basis(self) -> list[int]:
        return weight_index(self.N, self.source)

    @property
    def target_basis(self) -> list[int]:
        return weight_index(self.N, self.target)

    def entry(self) -> LaurentPoly:
        """The single entry of a 1x1 block (0 if the block is empty)."""
        return self.matrix[0][0] if self.matrix and self.matrix[0] else ZERO

    def det(self) -> LaurentPoly:
        if len(self.matrix) != len(self.source_basis):
            raise ValueError("determinant of a non-square block")
        return _det([list(r) for r in self.matrix])

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "source_weight": self.source,
            "target_weight": self.target,
            "source_basis": self.source_basis,
            "target_basis": self.target_basis,
            "matrix": [[e.to_json() for e in row] for row in self.matrix],
        }

    @classmethod
    def from_json(cls, d) -> "WeightOperator":
        return cls(d["N"], d["source_weight"], d["target_weight"],
                   tuple(tuple(LaurentPoly.from_json(e) for e in row) for row in d["matrix"]))


def _det(m: list) -> LaurentPoly:
    if not m:
        return ONE
    if len(m) == 1:
        return m[0][0]
    return sum(((-1 if c % 2 else 1) * m[0][c] * _det([r[:c] + r[c + 1:] for r in m[1:]])
                for c in range(len(m))), ZERO)


def block_of(fn, N: int, source: int, target: int) -> WeightOperator:
    """Weight block of a linear map given as a function on ModuleElement."""
    rows = weight_index(N, target)
    cols = weight_index(N, source)
    mat = []
    for i in rows:
        row = []
        for j in cols:
            row.append(fn(ModuleElement.basis(N, j))[i])
        mat.append(tuple(row))
    return WeightOperator(N, source, target, tuple(mat))


def t_block(N: int, lam: int) -> WeightOperator:
    if lam < 0 or lam > N or (N - lam) % 2:
        raise ValueError(f"need 0 <= lambda <= N with matching parity, got N={N}, lambda={lam}")
    return block_of(lambda v: t_action(v, lam), N, lam, -lam)


def t_matrix(N: int, lam: int) -> WeightOperator:
    return t_block(N, lam)


# -- full-module matrices (oracle route) ---------------------------------------

def f_div_matrix(N: int, r: int) -> Matrix:
    m = [[ZERO] * (N + 1) for _ in range(N + 1)]
    for j in range(N + 1 - r):
        m[j + r][j] = qbinom(j + r, r)
    return m


def e_div_matrix(N: int, r: int) -> Matrix:
    m = [[ZERO] * (N + 1) for _ in range(N + 1)]
    for j in range(r, N + 1):
        m[j - r][j] = qbinom(N - j + r, r)
    return m


def identity_matrix(N: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(N + 1)] for i in range(N + 1)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = [[ZERO] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            if a[i][t]:
                ait = a[i][t]
                row = b[t]
                for j in range(m):
                    if row[j]:
                        out[i][j] = out[i][j] + ait * row[j]
    return out


# -- checks --------------------------------------------------------------------

def commutator_check(N: int) -> bool:
    """(ef - fe) b_j = [N - 2j] b_j."""
    from .qcore import qint_signed

    for j in range(N + 1):
        b = ModuleElement.basis(N, j)
        lhs = act_e_div(1, act_f_div(1, b)) - act_f_div(1, act_e_div(1, b))
        if lhs != b.scale(qint_signed(N - 2 * j)):
            return False
    return True


def lusztig_commutation_check(N: int, max_ab: int = 3) -> bool:
    """e^{(b)} f^{(a)} v = sum_j [lam-a+b, j] f^{(a-j)} e^{(b-j)} v on every b_i."""
    for i in range(N + 1):
        v = ModuleElement.basis(N, i)
        lam = N - 2 * i
        for a in range(max_ab + 1):
            for b in range(max_ab + 1):
                lhs = act_e_div(b, act_f_div(a, v))
                rhs = ModuleElement(N)
                for j in range(min(a, b) + 1):
                    rhs = rhs + act_f_div(a - j, act_e_div(b - j, v)).scale(qbinom_general(lam - a + b, j))
                if lhs != rhs:
                    return False
    return True


def t_intertwines_check(N: int) -> bool:
    """t f = -q^2 k^{-1} e t on every weight-(lam+2) space with lam >= 0."""
    mq2 = LaurentPoly.monomial(2, -1)
    for lam in range(N % 2, N - 1, 2):
        j = (N - lam - 2) // 2
        v = ModuleElement.basis(N, j)
        lhs = t_action(act_f_div(1, v), lam)
        rhs = act_k(-1, act_e_div(1, t_action(v, lam + 2))).scale(mq2)
        if lhs != rhs:
            return False
    return True


def t_blocks_invertible(N: int) -> bool:
    return all(t_block(N, lam).det().is_unit() for lam in range(N % 2, N + 1, 2))


def highest_weight_image(N: int, p: int) -> tuple[int, int]:
    """(sign, m) with t f^{(p)} b_0 = sign q^m f^{(lam+p)} b_0, lam = N - 2p >= 0."""
    lam = N - 2 * p
    if p < 0 or lam < 0:
        raise ValueError("need 0 <= 2p <= N")
    src = act_f_div(p, ModuleElement.basis(N, 0))
    img = t_action(src, lam)
    target = act_f_div(lam + p, ModuleElement.basis(N, 0))
    (j, tc), = target.coords.items()
    if set(img.coords) != {j} or tc != ONE or not img[j].is_unit():
        raise AssertionError("highest-weight image is not a signed monomial multiple")
    (m, c), = img[j].items()
    return c, m


def _is_highest(v: ModuleElement) -> bool:
    return act_e_div(1, v).is_zero()


def _is_lowest(v: ModuleElement) -> bool:
    return act_f_div(1, v).is_zero()


def lowest_from_highest_check(N: int, mu: int, p: int | None = None) -> bool:
    """f^{(mu)} of a weight-mu highest weight vector is lowest weight, and dually.

    Searches the weight-mu (resp. -mu) space of V(N) for vectors killed by e
    (resp. f) and checks f^{(r)} f^{(mu)} v = 0 (resp. e^{(r)} e^{(mu)} w = 0)
    for 1 <= r <= p (default p = N + 1, i.e. every r that can act).
    """
    if mu < 0:
        raise ValueError("mu must be >= 0")
    p = N + 1 if p is None else p
    for j in weight_index(N, mu):
        v = ModuleElement.basis(N, j)
        if _is_highest(v):
            w = act_f_div(mu, v)
            if any(not act_f_div(r, w).is_zero() for r in range(1, p + 1)):
                return False
    for j in weight_index(N, -mu):
        v = ModuleElement.basis(N, j)
        if _is_lowest(v):
            w = act_e_div(mu, v)
            if any(not act_e_div(r, w).is_zero() for r in range(1, p + 1)):
                return False
    return True
