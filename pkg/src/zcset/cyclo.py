"""Exact arithmetic in the cyclotomic integers Z[xi], xi = exp(2*pi*i/q).

Values are stored as length-q integer coefficient vectors over the powers
xi^0, ..., xi^(q-1), i.e. as elements of Z[x]/(x^q - 1).  Two vectors denote
the same complex number iff their difference is divisible by the q-th
cyclotomic polynomial, so zero tests and equality reduce modulo Phi_q.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "CycloValue",
    "complex_estimate",
    "cyclotomic_polynomial",
    "is_zero",
    "poly_divmod",
    "reduce_mod_cyclotomic",
    "reduction_matrix",
]


def _trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(_trim(out))


def poly_divmod(
    num: tuple[int, ...] | list[int], den: tuple[int, ...] | list[int]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Divide integer polynomials (coefficients low degree first).

    ``den`` must be monic so the quotient stays integral.
    """
    den = _trim(list(den))
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    dd = len(den) - 1
    if len(rem) - 1 < dd:
        return (0,), tuple(_trim(rem or [0]))
    quot = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                rem[i - dd + j] -= c * den[j]
    return tuple(_trim(quot)), tuple(_trim(rem[:dd] or [0]))


@lru_cache(maxsize=None)
def cyclotomic_polynomial(q: int) -> tuple[int, ...]:
    """Return the q-th cyclotomic polynomial, lowest-degree coefficient first.

    Computed by dividing x^q - 1 by Phi_d for every proper divisor d of q.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if not isinstance(q, (int, np.integer)) or q < 1:
        raise ValueError(f"cyclotomic polynomial needs q >= 1, got {q!r}")
    q = int(q)
    num: tuple[int, ...] = (-1,) + (0,) * (q - 1) + (1,)
    for d in range(1, q):
        if q % d == 0:
            num, rem = poly_divmod(num, cyclotomic_polynomial(d))
            assert rem == (0,)
    return num


def reduce_mod_cyclotomic(coeffs, q: int) -> tuple[int, ...]:
    """Canonical representative of ``sum coeffs[j] x^j`` modulo Phi_q.

    The result always has length ``deg Phi_q`` (zero padded).
    """
    phi = cyclotomic_polynomial(q)
    deg = len(phi) - 1
    _, rem = poly_divmod([int(c) for c in coeffs], phi)
    return tuple(rem) + (0,) * (deg - len(rem))


@lru_cache(maxsize=None)
def _reduction_matrix(q: int) -> np.ndarray:
    deg = len(cyclotomic_polynomial(q)) - 1
    mat = np.zeros((q, deg), dtype=np.int64)
    for j in range(q):
        mat[j] = reduce_mod_cyclotomic((0,) * j + (1,), q)
    mat.setflags(write=False)
    return mat


def reduction_matrix(q: int) -> np.ndarray:
    """Integer matrix R with ``coeffs @ R`` the reduction modulo Phi_q.

    Row j holds x^j mod Phi_q, so batches of coefficient vectors can be
    reduced exactly with one integer matrix product.
    """
    return _reduction_matrix(int(q))


@dataclass(frozen=True)
class CycloValue:
    """Element of Z[xi_q] as multiplicities of xi^0, ..., xi^(q-1).

    Equality and hashing are by value: vectors that differ by a multiple of
    Phi_q compare equal.
    """

    q: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.q < 1:
            raise ValueError(f"modulus must be positive, got {self.q}")
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.q:
            raise ValueError(f"expected {self.q} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, q: int) -> CycloValue:
        return cls(q, (0,) * q)

    @classmethod
    def unit(cls, q: int, power: int = 0, multiplicity: int = 1) -> CycloValue:
        """``multiplicity * xi^power``."""
        coeffs = [0] * q
        coeffs[power % q] = multiplicity
        return cls(q, tuple(coeffs))

    @classmethod
    def from_exponents(cls, q: int, exponents) -> CycloValue:
        """Sum of xi^e over the given exponents."""
        counts = np.bincount(np.mod(np.asarray(exponents, dtype=np.int64), q), minlength=q)
        return cls(q, tuple(int(c) for c in counts))

    def _check(self, other: CycloValue) -> None:
        if not isinstance(other, CycloValue):
            raise TypeError(f"expected CycloValue, got {type(other).__name__}")
        if other.q != self.q:
            raise ValueError(f"moduli differ: {self.q} vs {other.q}")

    def __add__(self, other: CycloValue) -> CycloValue:
        self._check(other)
        return CycloValue(self.q, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: CycloValue) -> CycloValue:
        self._check(other)
        return CycloValue(self.q, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CycloValue:
        return CycloValue(self.q, tuple(-a for a in self.coeffs))

    def __mul__(self, other: CycloValue | int) -> CycloValue:
        if isinstance(other, (int, np.integer)):
            return CycloValue(self.q, tuple(int(other) * a for a in self.coeffs))
        self._check(other)
        q = self.q
        out = [0] * q
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[(i + j) % q] += a * b
        return CycloValue(q, tuple(out))

    __rmul__ = __mul__

    def conjugate(self) -> CycloValue:
        """Complex conjugate: xi^j -> xi^(-j)."""
        q = self.q
        return CycloValue(q, tuple(self.coeffs[(-j) % q] for j in range(q)))

    def reduced(self) -> tuple[int, ...]:
        return reduce_mod_cyclotomic(self.coeffs, self.q)

    def is_zero(self) -> bool:
        return not any(self.reduced())

    def abs2(self) -> CycloValue:
        """|v|^2 as an exact element of Z[xi]."""
        return self * self.conjugate()

    def __complex__(self) -> complex:
        return complex_estimate(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycloValue) or other.q != self.q:
            return NotImplemented
        return self.reduced() == other.reduced()

    def __hash__(self) -> int:
        return hash((self.q, self.reduced()))

    def __str__(self) -> str:
        terms = [f"{c}*xi^{j}" if j else str(c) for j, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def is_zero(v: CycloValue) -> bool:
    """Exact test ``sum coeffs[j] xi^j == 0`` by reduction modulo Phi_q."""
    return v.is_zero()


def complex_estimate(v: CycloValue) -> complex:
    q = v.q
    return complex(sum(c * cmath.exp(2j * cmath.pi * j / q) for j, c in enumerate(v.coeffs)))
