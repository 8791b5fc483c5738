"""Checking Z-complementary sets: zone conditions, bounds and optimality."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .correlation import accf, correlation_table
from .cyclo import CycloValue, reduction_matrix
from .family import Flock, ZcsFamily

__all__ = [
    "BoundReport",
    "Failure",
    "Optimality",
    "VerificationReport",
    "WelchMatrixReport",
    "bounds",
    "classify_optimality",
    "max_zcz_width",
    "set_correlation",
    "verify_zcs",
    "welch_matrix",
    "welch_matrix_check",
]

OPTIMAL = "optimal"
SUBOPTIMAL = "suboptimal"
NOT_A_ZCS = "not-a-ZCS"


class Failure(NamedTuple):
    p: int
    t: int
    u: int
    value: CycloValue


@dataclass(frozen=True)
class BoundReport:
    N: int
    L: int
    Z: int
    theorem1_bound: int
    fan_bound: int
    welch_feng_bound: Fraction


@dataclass
class VerificationReport:
    ok: bool
    Z: int
    measured_Z: int
    energy_ok: bool
    failures: list[Failure] = field(default_factory=list)


@dataclass(frozen=True)
class Optimality:
    verdict: str
    M: int
    N: int
    L: int
    Z: int
    bound: int | None

    @property
    def optimal(self) -> bool:
        return self.verdict == OPTIMAL


@dataclass
class WelchMatrixReport:
    rows: int
    cols: int
    column_energy: list[int]
    max_offdiag: float
    slack: int
    welch_lhs: float
    welch_rhs: float
    welch_rhs_rows: float
    alpha: int
    alpha_unimodular: bool
    exact_offdiag_zero: bool
    float_mirror_error: float

    @property
    def dims(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def welch_ok(self) -> bool:
        scale = max(1.0, abs(self.welch_rhs))
        return (
            self.welch_lhs >= self.welch_rhs - 1e-9 * scale
            and abs(self.welch_rhs - self.welch_rhs_rows) <= 1e-9 * scale
        )


def set_correlation(cp: Flock, ct: Flock, u: int) -> CycloValue:
    """``sum_lambda accf(cp[lambda], ct[lambda], u)``, evaluated one pair at a time."""
    if (cp.N, cp.L, cp.q) != (ct.N, ct.L, ct.q):
        raise ValueError("flocks must share N, L and q")
    total = CycloValue.zero(cp.q)
    for a, b in zip(cp, ct):
        total = total + accf(a, b, u)
    return total


@dataclass(frozen=True)
class _Analysis:
    counts: np.ndarray  # (M, M, 2L-1, q)
    zero: np.ndarray  # (M, M, 2L-1) bool
    energy_ok: np.ndarray  # (M,) bool
    measured_Z: int


@lru_cache(maxsize=16)
def _analyse(family: ZcsFamily) -> _Analysis:
    M, N, L, q = family.M, family.N, family.L, family.q
    counts = correlation_table(family.to_array(), q)
    red = np.einsum("...j,jd->...d", counts, reduction_matrix(q))
    zero = ~np.any(red, axis=-1)
    target = CycloValue.unit(q, 0, N * L).reduced()
    energy_ok = np.all(red[np.arange(M), np.arange(M), L - 1] == np.array(target), axis=-1)

    offdiag = ~np.eye(M, dtype=bool)
    measured = L
    for a in range(L):
        if a == 0:
            bad = not energy_ok.all() or not zero[:, :, L - 1][offdiag].all()
        else:
            bad = not (zero[:, :, L - 1 + a].all() and zero[:, :, L - 1 - a].all())
        if bad:
            measured = a
            break
    for arr in (counts, zero, energy_ok):
        arr.setflags(write=False)
    return _Analysis(counts, zero, energy_ok, measured)


def verify_zcs(family: ZcsFamily, Z: int) -> VerificationReport:
    """Check the (M, N, L, Z) zone conditions exactly.

    Every pair (p, t) and every shift |u| < Z is examined; violations are
    listed in lexicographic (p, t, u) order.
    """
    L = family.L
    if not 1 <= Z <= L:
        raise ValueError(f"Z={Z} outside [1, {L}]")
    an = _analyse(family)
    q = family.q
    good = an.zero[:, :, L - Z : L + Z - 1].copy()
    diag = np.arange(family.M)
    good[diag, diag, Z - 1] = an.energy_ok
    failures = [
        Failure(int(p), int(t), int(s) - (Z - 1), CycloValue(q, tuple(an.counts[p, t, s + L - Z])))
        for p, t, s in zip(*np.nonzero(~good))
    ]
    return VerificationReport(
        ok=not failures,
        Z=Z,
        measured_Z=an.measured_Z,
        energy_ok=bool(an.energy_ok.all()),
        failures=failures,
    )


def max_zcz_width(family: ZcsFamily) -> int:
    """Largest Z for which the family is a ZCS; 0 when the u = 0 conditions fail."""
    return _analyse(family).measured_Z


def bounds(N: int, L: int, Z: int) -> BoundReport:
    """Set-size bounds for (M, N, L, Z) families.

    ``theorem1_bound`` is floor(NL/Z), ``fan_bound`` is N*floor(L/Z) and
    ``welch_feng_bound`` the unfloored N(L+Z-1)/Z.
    """
    if N < 1 or L < 1 or not 1 <= Z <= L:
        raise ValueError(f"need N >= 1, L >= 1 and 1 <= Z <= L, got N={N}, L={L}, Z={Z}")
    return BoundReport(
        N=N,
        L=L,
        Z=Z,
        theorem1_bound=(N * L) // Z,
        fan_bound=N * (L // Z),
        welch_feng_bound=Fraction(N * (L + Z - 1), Z),
    )


def classify_optimality(family: ZcsFamily) -> Optimality:
    M, N, L = family.params
    Z = max_zcz_width(family)
    if Z < 1:
        return Optimality(NOT_A_ZCS, M, N, L, Z, None)
    bound = bounds(N, L, Z).theorem1_bound
    return Optimality(OPTIMAL if M == bound else SUBOPTIMAL, M, N, L, Z, bound)


def welch_matrix(family: ZcsFamily, Z: int) -> tuple[np.ndarray, np.ndarray]:
    """Exponents and support mask of the shifted, zero-padded column matrix.

    Column p*Z + u is the u-th right cyclic shift of
    (c^p_0, 0^{Z-1}, c^p_1, 0^{Z-1}, ..., c^p_{N-1}, 0^{Z-1}).
    Returns ``(exps, mask)``, both of shape (N(L+Z-1), M*Z).
    """
    M, N, L = family.params
    if not 1 <= Z <= L:
        raise ValueError(f"Z={Z} outside [1, {L}]")
    seg = L + Z - 1
    rows = N * seg
    exps = np.zeros((rows, M * Z), dtype=np.int64)
    mask = np.zeros((rows, M * Z), dtype=bool)
    arr = family.to_array()
    for p in range(M):
        base_e = np.zeros(rows, dtype=np.int64)
        base_m = np.zeros(rows, dtype=bool)
        for lam in range(N):
            base_e[lam * seg : lam * seg + L] = arr[p, lam]
            base_m[lam * seg : lam * seg + L] = True
        for u in range(Z):
            exps[:, p * Z + u] = np.roll(base_e, u)
            mask[:, p * Z + u] = np.roll(base_m, u)
    return exps, mask


def welch_matrix_check(family: ZcsFamily, Z: int) -> WelchMatrixReport:
    """Rebuild the orthogonality argument behind the floor(NL/Z) bound.

    Raises ``ValueError`` unless the family is a ZCS of width Z.
    """
    if not verify_zcs(family, Z).ok:
        raise ValueError(f"family is not a ZCS of width {Z}")
    M, N, L = family.params
    q = family.q
    exps, mask = welch_matrix(family, Z)
    rows, cols = exps.shape

    # exact Gram matrix as multiplicity vectors: gram[v, t, j] counts rows l
    # with both entries present and e[l, v] - e[l, t] = j (mod q)
    onehot = np.zeros((rows, cols, q), dtype=np.int64)
    li, vi = np.nonzero(mask)
    onehot[li, vi, exps[li, vi] % q] = 1
    gram = np.empty((cols, cols, q), dtype=np.int64)
    for j in range(q):
        gram[:, :, j] = np.einsum("lvr,ltr->vt", np.roll(onehot, -j, axis=2), onehot)
    red = gram @ reduction_matrix(q)
    offdiag = ~np.eye(cols, dtype=bool)
    exact_zero = bool(not np.any(red[offdiag]))
    energies = [int(gram[v, v].sum()) for v in range(cols)]

    xi = np.exp(2j * np.pi * np.arange(q) / q)
    gram_exact_c = gram @ xi
    x = np.where(mask, np.exp(2j * np.pi * exps / q), 0)
    gram_c = x.T @ np.conj(x)
    mirror_err = float(np.max(np.abs(gram_c - gram_exact_c)))

    max_off = float(np.max(np.abs(gram_exact_c[offdiag]))) if cols > 1 else 0.0
    if exact_zero:
        max_off = 0.0
    energy = N * L
    lhs = cols * (cols - 1) * max_off**2 + cols * float(energy) ** 2
    rhs = float(np.sum(np.abs(gram_c) ** 2))
    rhs_rows = float(np.sum(np.abs(x @ np.conj(x).T) ** 2))

    alpha = Z - 1
    return WelchMatrixReport(
        rows=rows,
        cols=cols,
        column_energy=energies,
        max_offdiag=max_off,
        slack=M * N * L * Z - (M * Z) ** 2,
        welch_lhs=lhs,
        welch_rhs=rhs,
        welch_rhs_rows=rhs_rows,
        alpha=alpha,
        alpha_unimodular=bool(mask[alpha].all()),
        exact_offdiag_zero=exact_zero,
        float_mirror_error=mirror_err,
    )
