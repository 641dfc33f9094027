"""Rewriting words in E^{(r)}, F^{(r)} into the basis F^{(a)} E^{(b)} 1_mu.

A class lives in a weight window [-N, N]: anything routed through a weight
outside the window is zero. Symbols ``(a, b)`` stand for ``F^{(a)} E^{(b)}``
acting on weight mu (E first), with target weight ``mu + 2b - 2a``.

Inside a finite window the F-then-E symbols are not independent: when
``mu - 2a < -N`` the word ``E^{(b)} F^{(a)} 1_mu`` vanishes, and expanding it
expresses ``F^{(a)} E^{(b)} 1_mu`` through symbols with smaller a. Applying
that rewrite until ``mu - 2a >= -N`` gives a unique normal form.

Words are sequences of ``(kind, r)`` listed in the order they act, so
``[("F", 1), ("E", 1)]`` is E after F.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .qcore import ONE, ZERO, LaurentPoly, homological_sign, qbinom, qbinom_general, shift_power
from .uqsl2 import WeightOperator, e_div_matrix, f_div_matrix, matmul, t_block, weight_index

Symbol = tuple[int, int]


def _check_weight(mu: int, N: int):
    if N < 0:
        raise ValueError("window bound must be >= 0")
    if abs(mu) > N or (N - mu) % 2:
        raise ValueError(f"weight {mu} is not in the window [-{N}, {N}] with parity of N")


def in_window(mu: int, a: int, b: int, N: int) -> bool:
    return abs(mu) <= N and abs(mu + 2 * b) <= N and abs(mu + 2 * b - 2 * a) <= N


@dataclass(frozen=True)
class MorClass:
    N: int
    mu: int
    target: int
    terms: tuple  # sorted ((a, b), LaurentPoly) pairs, zero-free

    @classmethod
    def make(cls, N: int, mu: int, target: int, terms: Mapping[Symbol, LaurentPoly]) -> "MorClass":
        _check_weight(mu, N)
        clean = _normalize(terms, mu, target, N)
        return cls(N, mu, target, tuple(sorted(clean.items())))

    @property
    def term_dict(self) -> dict[Symbol, LaurentPoly]:
        return dict(self.terms)

    def __getitem__(self, sym: Symbol) -> LaurentPoly:
        return self.term_dict.get(sym, ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def scale(self, c: LaurentPoly | int) -> "MorClass":
        return MorClass.make(self.N, self.mu, self.target, {s: v * c for s, v in self.terms})

    def __add__(self, other: "MorClass") -> "MorClass":
        if (self.N, self.mu, self.target) != (other.N, other.mu, other.target):
            raise ValueError("adding classes with different source, target or window")
        out = self.term_dict
        for s, v in other.terms:
            out[s] = out[s] + v if s in out else v
        return MorClass.make(self.N, self.mu, self.target, out)

    def to_json(self) -> dict:
        return {
            "mu": self.mu,
            "N": self.N,
            "target": self.target,
            "terms": [{"a": a, "b": b, "poly": p.to_json()} for (a, b), p in self.terms],
        }

    @classmethod
    def from_json(cls, d) -> "MorClass":
        terms = {(t["a"], t["b"]): LaurentPoly.from_json(t["poly"]) for t in d["terms"]}
        return cls.make(d["N"], d["mu"], d["target"], terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({p})*F^({a})E^({b})" for (a, b), p in self.terms)


def _normalize(terms: Mapping[Symbol, LaurentPoly], mu: int, target: int, N: int) -> dict:
    work: dict[Symbol, LaurentPoly] = {}
    for (a, b), p in terms.items():
        if a < 0 or b < 0:
            raise ValueError(f"negative divided power in symbol {(a, b)}")
        if mu + 2 * b - 2 * a != target:
            raise ValueError(f"symbol {(a, b)} does not end at weight {target}")
        if p and in_window(mu, a, b, N):
            work[(a, b)] = work[(a, b)] + p if (a, b) in work else p
    # rewrite symbols whose E-after-F twin dips below -N, largest a first
    while True:
        bad = [s for s, p in work.items() if p and mu - 2 * s[0] < -N]
        if not bad:
            break
        a, b = max(bad)
        p = work.pop((a, b))
        for j in range(1, min(a, b) + 1):
            sym = (a - j, b - j)
            if not in_window(mu, *sym, N):
                continue
            c = p * qbinom_general(mu - a + b, j) * -1
            work[sym] = work[sym] + c if sym in work else c
    return {s: p for s, p in work.items() if p}


def zero_class(N: int, mu: int, target: int) -> MorClass:
    return MorClass.make(N, mu, target, {})


def identity_class(N: int, mu: int) -> MorClass:
    return MorClass.make(N, mu, mu, {(0, 0): ONE})


def generator(kind: str, r: int, mu: int, N: int) -> MorClass:
    if r < 0:
        raise ValueError("divided power exponent must be >= 0")
    if kind == "E":
        return MorClass.make(N, mu, mu + 2 * r, {(0, r): ONE})
    if kind == "F":
        return MorClass.make(N, mu, mu - 2 * r, {(r, 0): ONE})
    raise ValueError(f"generator kind must be 'E' or 'F', got {kind!r}")


def compose(left_kind: str, r: int, c: MorClass) -> MorClass:
    """The class of (left generator) after c."""
    N, mu, nu = c.N, c.mu, c.target
    if r < 0:
        raise ValueError("divided power exponent must be >= 0")
    if left_kind == "F":
        new_target = nu - 2 * r
        out: dict[Symbol, LaurentPoly] = {}
        if abs(new_target) <= N:
            for (a, b), p in c.terms:
                s = (a + r, b)
                v = p * qbinom(a + r, r)
                out[s] = out[s] + v if s in out else v
        return MorClass(N, mu, new_target, tuple(sorted(_normalize(out, mu, new_target, N).items())))
    if left_kind == "E":
        new_target = nu + 2 * r
        out = {}
        if abs(new_target) <= N:
            for (a, b), p in c.terms:
                mid = mu + 2 * b  # source weight of F^{(a)}
                for j in range(min(a, r) + 1):
                    coef = qbinom_general(mid - a + r, j) * qbinom(b + r - j, b)
                    if coef:
                        s = (a - j, b + r - j)
                        v = p * coef
                        out[s] = out[s] + v if s in out else v
        return MorClass(N, mu, new_target, tuple(sorted(_normalize(out, mu, new_target, N).items())))
    raise ValueError(f"generator kind must be 'E' or 'F', got {left_kind!r}")


def word_target(word: Sequence[tuple[str, int]], mu: int) -> int:
    for kind, r in word:
        mu += 2 * r if kind == "E" else -2 * r
    return mu


def normalize_word(word: Iterable[tuple[str, int]], mu: int, N: int) -> MorClass:
    _check_weight(mu, N)
    c = identity_class(N, mu)
    for kind, r in word:
        if kind not in ("E", "F"):
            raise ValueError(f"generator kind must be 'E' or 'F', got {kind!r}")
        c = compose(kind, r, c)
    return c


def compose_classes(outer: MorClass, inner: MorClass) -> MorClass:
    """outer after inner."""
    if outer.N != inner.N or outer.mu != inner.target:
        raise ValueError("weight mismatch when composing classes")
    total = zero_class(inner.N, inner.mu, outer.target)
    for (a, b), p in outer.terms:
        piece = inner
        if b:
            piece = compose("E", b, piece)
        if a:
            piece = compose("F", a, piece)
        total = total + piece.scale(p)
    return total


def evaluate(c: MorClass, N: int | None = None) -> WeightOperator:
    """The weight block of c acting on V(N) (default: the window bound)."""
    M = c.N if N is None else N
    if M > c.N or (c.N - M) % 2:
        raise ValueError("module must fit inside the class window")
    rows = weight_index(M, c.target)
    cols = weight_index(M, c.mu)
    if not rows or not cols:
        return WeightOperator(M, c.mu, c.target, tuple(tuple() for _ in rows))
    i, j = rows[0], cols[0]
    total = ZERO
    for (a, b), p in c.terms:
        # b_j --E^{(b)}--> b_{j-b} --F^{(a)}--> b_{j-b+a}
        if b > j or j - b + a > M:
            continue
        coef = qbinom(M - j + b, b) * qbinom(j - b + a, a)
        total = total + p * coef
    return WeightOperator(M, c.mu, c.target, ((total,),))


def word_matrix(word: Sequence[tuple[str, int]], N: int):
    """Direct product of generator matrices on all of V(N) (oracle route)."""
    from .uqsl2 import identity_matrix

    m = identity_matrix(N)
    for kind, r in word:
        g = f_div_matrix(N, r) if kind == "F" else e_div_matrix(N, r)
        m = matmul(g, m)
    return m


# -- the complex Theta ---------------------------------------------------------

def _check_theta(N: int, lam: int):
    if lam < 0 or lam > N or (N - lam) % 2:
        raise ValueError(f"need 0 <= lambda <= N with matching parity, got N={N}, lambda={lam}")


def theta_terms(N: int, lam: int) -> list[tuple[int, MorClass]]:
    """Terms s = 0..(N-lam)/2: symbol F^{(lam+s)}E^{(s)} shifted <-s>, placed in [-s]."""
    _check_theta(N, lam)
    out = []
    for s in range((N - lam) // 2 + 1):
        c = MorClass.make(N, lam, -lam, {(lam + s, s): shift_power(-s)})
        out.append((homological_sign(-s), c))
    return out


def euler_characteristic(N: int, lam: int, module: int | None = None) -> WeightOperator:
    M = N if module is None else module
    total = ZERO
    for sign, c in theta_terms(N, lam):
        total = total + evaluate(c, M).entry() * sign
    rows = weight_index(M, -lam)
    return WeightOperator(M, lam, -lam, ((total,),) if rows else tuple())


def euler_matches_t(N: int, lam: int) -> bool:
    return euler_characteristic(N, lam) == t_block(N, lam)


def f_part_multiplicity(c: MorClass, a: int) -> LaurentPoly:
    return c[(a, 0)]


def theta_after_f(N: int, p: int, s: int) -> MorClass:
    """Theta_s composed after F^{(p)} starting at weight N (lam = N - 2p)."""
    lam = N - 2 * p
    _check_theta(N, lam)
    c = normalize_word([("F", p), ("E", s), ("F", lam + s)], N, N)
    return c.scale(shift_power(-s))


# -- sweeps ---------------------------------------------------------------------

def generator_alphabet(max_r: int) -> list[tuple[str, int]]:
    return [(k, r) for k in ("E", "F") for r in range(1, max_r + 1)]


def _apply_column(col: list, kind: str, r: int, N: int) -> list:
    """One generator applied to a coordinate column on V(N), straight from the matrix."""
    m = f_div_matrix(N, r) if kind == "F" else e_div_matrix(N, r)
    return [sum((m[i][k] * col[k] for k in range(N + 1) if m[i][k] and col[k]), ZERO) for i in range(N + 1)]


def oracle_sweep(N: int, max_len: int = 4, max_r: int = 3) -> tuple[int, int]:
    """Compare normalize-then-evaluate with direct matrix action for every word.

    Returns (cases, failures). Words are explored depth-first so each prefix
    is normalized once.
    """
    alphabet = generator_alphabet(max_r)
    cases = fails = 0
    for mu in range(-N, N + 1, 2):
        j = (N - mu) // 2
        start = [ONE if i == j else ZERO for i in range(N + 1)]
        stack = [((), identity_class(N, mu), start)]
        while stack:
            word, cls, col = stack.pop()
            tgt = cls.target
            nz = [i for i in range(N + 1) if col[i]]
            expected = col[(N - tgt) // 2] if abs(tgt) <= N else ZERO
            got = evaluate(cls).entry() if abs(tgt) <= N else ZERO
            cases += 1
            if got != expected or any(i != (N - tgt) // 2 for i in nz):
                fails += 1
            if len(word) < max_len:
                for kind, r in alphabet:
                    nxt = compose(kind, r, cls)
                    stack.append((word + ((kind, r),), nxt, _apply_column(col, kind, r, N)))
    return cases, fails
