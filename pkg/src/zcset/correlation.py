"""q-ary unimodular sequences and their exact aperiodic correlations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cyclo import CycloValue

__all__ = [
    "QarySequence",
    "aacf",
    "accf",
    "correlation_table",
    "cyclic_shift",
]


@dataclass(frozen=True)
class QarySequence:
    """Exponent vector (a_0, ..., a_{L-1}) standing for (xi^a_0, ..., xi^a_{L-1})."""

    q: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if int(self.q) < 2:
            raise ValueError(f"q must be at least 2, got {self.q}")
        exps = tuple(map(int, self.exponents))
        if not exps:
            raise ValueError("sequence must have length >= 1")
        if min(exps) < 0 or max(exps) >= self.q:
            bad = next(e for e in exps if not 0 <= e < self.q)
            raise ValueError(f"exponents must lie in [0, {self.q}), got {bad}")
        object.__setattr__(self, "q", int(self.q))
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def from_any(cls, q: int, exponents: Sequence[int]) -> QarySequence:
        """Build from arbitrary integers, reducing them mod q."""
        return cls(q, tuple(int(e) % q for e in exponents))

    @property
    def L(self) -> int:
        return len(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.exponents, dtype=np.int64)

    def to_complex(self) -> np.ndarray:
        return np.exp(2j * np.pi * self.array / self.q)

    def __str__(self) -> str:
        return "".join(np.base_repr(e, 36).lower() for e in self.exponents)


def accf(c: QarySequence, d: QarySequence, u: int) -> CycloValue:
    """Aperiodic cross-correlation ``sum_i c_{i+u} conj(d_i)`` at shift u.

    For u < 0 the sum runs over ``c_i conj(d_{i-u})``; there is no wrap-around.
    The result is exact.
    """
    if c.q != d.q:
        raise ValueError(f"moduli differ: {c.q} vs {d.q}")
    if c.L != d.L:
        raise ValueError(f"lengths differ: {c.L} vs {d.L}")
    L = c.L
    if not -L < u < L:
        raise ValueError(f"shift {u} outside (-{L}, {L})")
    a, b = c.array, d.array
    if u >= 0:
        diff = a[u:] - b[: L - u]
    else:
        diff = a[: L + u] - b[-u:]
    return CycloValue.from_exponents(c.q, diff)


def aacf(c: QarySequence, u: int) -> CycloValue:
    """Aperiodic autocorrelation of c at shift u."""
    return accf(c, c, u)


def cyclic_shift(v, u: int):
    """Right cyclic shift by u: ``out[j] = v[(j - u) mod len(v)]``.

    Returns the same container kind for tuples, lists, numpy arrays and
    QarySequence.
    """
    if isinstance(v, QarySequence):
        return QarySequence(v.q, cyclic_shift(v.exponents, u))
    n = len(v)
    if not 0 <= u <= n:
        raise ValueError(f"shift must be in [0, {n}], got {u}")
    if isinstance(v, np.ndarray):
        return np.roll(v, u)
    items = list(v)
    out = items[n - u :] + items[: n - u] if n else items
    return type(v)(out) if isinstance(v, (tuple, list)) else out


def correlation_table(exponents: np.ndarray, q: int, other: np.ndarray | None = None) -> np.ndarray:
    """All set correlations of a family, as exact multiplicity vectors.

    Parameters
    ----------
    exponents : int array of shape (M, N, L)
        Flock p, sequence lambda, position i.
    q : int
        Alphabet size.
    other : int array of shape (M2, N, L), optional
        Second family for the right-hand argument; defaults to ``exponents``.

    Returns
    -------
    counts : int64 array of shape (M, M2, 2L-1, q)
        ``counts[p, t, u + L - 1, j]`` is the multiplicity of xi^j in
        ``sum_lambda accf(c^p_lambda, d^t_lambda, u)``.

    Notes
    -----
    Each sequence is mapped through every character ``xi -> xi^k``,
    k = 0..q-1; the flock cross-correlations are formed with zero-padded FFTs
    and a matrix product over lambda, and the multiplicities are recovered by
    a length-q DFT followed by rounding.  Multiplicities are integers bounded
    by N*L, so rounding is exact; the residual is checked anyway.
    """
    exps = np.mod(np.asarray(exponents, dtype=np.int64), q)
    rhs = exps if other is None else np.mod(np.asarray(other, dtype=np.int64), q)
    if exps.ndim != 3 or rhs.ndim != 3:
        raise ValueError(f"expected (M, N, L) arrays, got shapes {exps.shape}, {rhs.shape}")
    if exps.shape[1:] != rhs.shape[1:]:
        raise ValueError(f"flock shapes differ: {exps.shape[1:]} vs {rhs.shape[1:]}")
    M, N, L = exps.shape
    M2 = rhs.shape[0]
    nfft = 1 << max(1, int(2 * L - 1).bit_length())
    shifts = np.arange(-(L - 1), L) % nfft
    # by_char[k, u, p, t]: the set correlation seen through xi -> xi^k
    by_char = np.empty((q, 2 * L - 1, M, M2), dtype=np.complex128)
    roots = np.exp(2j * np.pi * np.arange(q) / q)
    for k in range(q // 2 + 1):
        spec = np.fft.fft(roots[(k * exps) % q], n=nfft, axis=-1)  # (M, N, F)
        spec2 = spec if other is None else np.fft.fft(roots[(k * rhs) % q], n=nfft, axis=-1)
        # contiguous operands keep matmul on the BLAS path
        spec_f = np.ascontiguousarray(np.transpose(spec, (2, 0, 1)))  # (F, M, N)
        spec_h = np.ascontiguousarray(np.conj(np.transpose(spec2, (2, 1, 0))))  # (F, N, M2)
        cross = spec_f @ spec_h  # (F, M, M2)
        by_char[k] = np.fft.ifft(cross, axis=0)[shifts]
    # character q-k sees the complex conjugate of character k
    for k in range(q // 2 + 1, q):
        by_char[k] = np.conj(by_char[q - k])
    acc = np.fft.fft(by_char, axis=0) / q
    counts = np.rint(acc.real)
    resid = max(np.abs(acc.real - counts).max(), np.abs(acc.imag).max())
    if resid > 0.25:
        raise ArithmeticError(f"correlation rounding residual too large: {resid}")
    return np.transpose(counts.astype(np.int64), (2, 3, 1, 0))
