"""Generalized and extended generalized Boolean functions.

A :class:`PolyFunction` maps Z_b^n -> Z_q as a sum of monomials
``coef * y_{l1} * ... * y_{lr}`` over distinct variables.  With b = 2 it is a
GBF; with b > 2 an EGBF.  Its sequence lists the values at the points whose
base-b digits (least significant = variable 1) spell the index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .correlation import QarySequence

__all__ = [
    "PolyFunction",
    "add",
    "constant",
    "digits",
    "sequence_of",
    "truncate",
    "variable",
]


def digits(index: int, base: int, width: int) -> tuple[int, ...]:
    """Base-``base`` digits of ``index``, least significant first."""
    out = []
    for _ in range(width):
        index, r = divmod(index, base)
        out.append(r)
    if index:
        raise ValueError(f"index does not fit in {width} base-{base} digits")
    return tuple(out)


def _digit_matrix(base: int, width: int) -> np.ndarray:
    idx = np.arange(base**width, dtype=np.int64)
    if width == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.stack([(idx // base**l) % base for l in range(width)], axis=1)


@dataclass(frozen=True)
class PolyFunction:
    b: int
    n_vars: int
    q: int
    terms: tuple[tuple[int, frozenset[int]], ...] = ()

    def __post_init__(self):
        if not 2 <= self.b <= self.q:
            raise ValueError(f"need 2 <= b <= q, got b={self.b}, q={self.q}")
        if self.n_vars < 0:
            raise ValueError("n_vars must be non-negative")
        merged: dict[frozenset[int], int] = {}
        for coef, vars_ in self.terms:
            vars_list = list(vars_)
            if len(set(vars_list)) != len(vars_list):
                raise ValueError(f"repeated variable in monomial {vars_list}")
            vs = frozenset(vars_list)
            if any(not 1 <= v <= self.n_vars for v in vs):
                raise ValueError(f"variable index out of 1..{self.n_vars}: {sorted(vs)}")
            merged[vs] = (merged.get(vs, 0) + int(coef)) % self.q
        terms = tuple(
            (c, vs)
            for vs, c in sorted(merged.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
            if c
        )
        object.__setattr__(self, "terms", terms)

    def __call__(self, *point: int) -> int:
        if len(point) != self.n_vars:
            raise ValueError(f"expected {self.n_vars} arguments, got {len(point)}")
        if any(not 0 <= x < self.b for x in point):
            raise ValueError(f"arguments must lie in Z_{self.b}")
        total = 0
        for coef, vs in self.terms:
            prod = coef
            for v in vs:
                prod *= point[v - 1]
            total += prod
        return total % self.q

    def __add__(self, other: PolyFunction) -> PolyFunction:
        return add(self, other)

    def __str__(self) -> str:
        name = "x" if self.b == 2 else "y"
        parts = []
        for coef, vs in self.terms:
            mono = "".join(f"{name}{v}" for v in sorted(vs))
            parts.append(f"{coef}{mono}" if mono else str(coef))
        return " + ".join(parts) if parts else "0"


def constant(value: int, b: int, n_vars: int, q: int) -> PolyFunction:
    return PolyFunction(b, n_vars, q, ((value, frozenset()),))


def variable(index: int, b: int, n_vars: int, q: int, coef: int = 1) -> PolyFunction:
    """The monomial ``coef * y_index``."""
    return PolyFunction(b, n_vars, q, ((coef, frozenset({index})),))


def add(f: PolyFunction, g: PolyFunction) -> PolyFunction:
    if (f.b, f.n_vars, f.q) != (g.b, g.n_vars, g.q):
        raise ValueError(
            f"incompatible functions: (b, n, q) = {(f.b, f.n_vars, f.q)} vs {(g.b, g.n_vars, g.q)}"
        )
    return PolyFunction(f.b, f.n_vars, f.q, f.terms + g.terms)


def sequence_of(f: PolyFunction) -> QarySequence:
    """Length-b^n sequence of values of f in index order."""
    pts = _digit_matrix(f.b, f.n_vars)
    vals = np.zeros(len(pts), dtype=np.int64)
    for coef, vs in f.terms:
        mono = np.full(len(pts), coef, dtype=np.int64)
        for v in vs:
            mono = (mono * pts[:, v - 1]) % f.q
        vals = (vals + mono) % f.q
    return QarySequence(f.q, tuple(vals.tolist()))


def truncate(s: QarySequence, L: int) -> QarySequence:
    """Keep the first L entries."""
    if not 1 <= L <= s.L:
        raise ValueError(f"truncation length {L} outside [1, {s.L}]")
    return QarySequence(s.q, s.exponents[:L])


def sum_sequences(seqs: Iterable[QarySequence]) -> QarySequence:
    """Entrywise sum mod q of equal-length sequences."""
    seqs = list(seqs)
    q = seqs[0].q
    if any(s.q != q or s.L != seqs[0].L for s in seqs):
        raise ValueError("sequences must share q and length")
    total = np.sum([s.array for s in seqs], axis=0) % q
    return QarySequence(q, tuple(total.tolist()))
