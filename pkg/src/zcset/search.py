"""Brute-force oracles: exhaustive set-size search and orthogonal-pair checks.

Nothing here relies on the floor(NL/Z) bound; the search is meant to be
compared against it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .correlation import QarySequence, accf, correlation_table
from .cyclo import CycloValue, reduction_matrix
from .family import ZcsFamily

__all__ = [
    "SearchResult",
    "SearchSpec",
    "exhaustive_max_set_size",
    "lemma2_check",
    "random_orthogonal_pair",
]

log = logging.getLogger(__name__)

DEFAULT_CAP = 10**7
_CHUNK = 1 << 15


@dataclass(frozen=True)
class SearchSpec:
    q: int
    N: int
    L: int
    Z: int
    max_candidates: int = DEFAULT_CAP
    seed: int = 0

    def __post_init__(self):
        if self.q < 2 or self.N < 1 or self.L < 1:
            raise ValueError(f"need q >= 2, N >= 1, L >= 1; got {self.q}, {self.N}, {self.L}")
        if not 1 <= self.Z <= self.L:
            raise ValueError(f"Z={self.Z} outside [1, {self.L}]")
        if self.max_candidates < 1:
            raise ValueError("max_candidates must be positive")

    @property
    def n_candidates(self) -> int:
        return self.q ** (self.N * self.L)

    @property
    def within_cap(self) -> bool:
        return self.n_candidates <= self.max_candidates


@dataclass
class SearchResult:
    best_M: int
    witness: Optional[ZcsFamily]
    bound: int
    proven_exhaustive: bool
    candidates_examined: int
    vertices: int


def _decode(indices: np.ndarray, q: int, N: int, L: int) -> np.ndarray:
    """Flock index -> (K, N, L) exponents; position (lam, i) is digit lam*L + i."""
    out = np.empty((len(indices), N * L), dtype=np.int64)
    rem = indices.copy()
    for pos in range(N * L):
        out[:, pos] = rem % q
        rem //= q
    return out.reshape(-1, N, L)


def _auto_zone_ok(flocks: np.ndarray, q: int, Z: int) -> np.ndarray:
    """Summed autocorrelation vanishes for 0 < u < Z (u > 0 suffices by symmetry)."""
    K, N, L = flocks.shape
    ok = np.ones(K, dtype=bool)
    red = reduction_matrix(q)
    for u in range(1, Z):
        diff = (flocks[:, :, u:] - flocks[:, :, : L - u]) % q
        counts = np.stack([(diff == j).sum(axis=(1, 2)) for j in range(q)], axis=1)
        ok &= ~np.any(counts @ red, axis=1)
    return ok


def _cross_zone_ok(a: np.ndarray, b: np.ndarray, q: int, Z: int) -> np.ndarray:
    L = a.shape[2]
    counts = correlation_table(a, q, other=b)[:, :, L - Z : L + Z - 1]
    red = np.einsum("...j,jd->...d", counts, reduction_matrix(q))
    return ~np.any(red, axis=(2, 3))


def _is_sorted_flock(flock: np.ndarray) -> bool:
    rows = [tuple(r) for r in flock.tolist()]
    return rows == sorted(rows)


def _max_clique(adj: list[int], roots: list[int]) -> list[int]:
    """Largest clique containing at least one root vertex (adjacency as bitsets)."""
    best: list[int] = []

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        if not cand:
            if len(clique) > len(best):
                best = list(clique)
            return
        while cand:
            if len(clique) + cand.bit_count() <= len(best):
                return
            v = (cand & -cand).bit_length() - 1
            clique.append(v)
            expand(clique, cand & adj[v])
            clique.pop()
            cand &= ~(1 << v)

    for r in roots:
        if 1 + adj[r].bit_count() <= len(best):
            continue
        expand([r], adj[r])
    return best


def exhaustive_max_set_size(spec: SearchSpec) -> SearchResult:
    """Largest M such that an (M, N, L, Z)-ZCS over Z_q exists.

    Every N-tuple of length-L q-ary sequences whose summed autocorrelation
    vanishes on 0 < |u| < Z is a vertex; two vertices are adjacent when their
    set cross-correlation vanishes on |u| < Z.  A maximum clique is a largest
    family.  Permuting sequence positions jointly in every flock preserves
    all correlations, so the search only roots cliques at flocks whose rows
    are sorted.  If ``q^(N L)`` exceeds ``max_candidates`` only the first
    ``max_candidates`` flocks are enumerated and the result is flagged
    non-exhaustive.
    """
    q, N, L, Z = spec.q, spec.N, spec.L, spec.Z
    total = spec.n_candidates
    examined = min(total, spec.max_candidates)
    exhaustive = examined == total
    if not exhaustive:
        log.warning("enumeration capped at %d of %d flocks", examined, total)

    kept = []
    for start in range(0, examined, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, examined), dtype=np.int64)
        flocks = _decode(idx, q, N, L)
        kept.append(flocks[_auto_zone_ok(flocks, q, Z)])
    verts = np.concatenate(kept) if kept else np.zeros((0, N, L), dtype=np.int64)
    V = len(verts)

    rng = np.random.default_rng(spec.seed)
    order = rng.permutation(V)
    verts = verts[order]

    adj = [0] * V
    block = 256
    for i0 in range(0, V, block):
        for j0 in range(0, V, block):
            ok = _cross_zone_ok(verts[i0 : i0 + block], verts[j0 : j0 + block], q, Z)
            for a, b in zip(*np.nonzero(ok)):
                if i0 + a != j0 + b:
                    adj[i0 + a] |= 1 << int(j0 + b)
    roots = [v for v in range(V) if _is_sorted_flock(verts[v])]
    clique = _max_clique(adj, roots)

    witness = None
    if clique:
        witness = ZcsFamily.from_array(verts[sorted(clique)], q, claimed_Z=Z)
    return SearchResult(
        best_M=len(clique),
        witness=witness,
        bound=(N * L) // Z,
        proven_exhaustive=exhaustive,
        candidates_examined=examined,
        vertices=V,
    )


def lemma2_check(c: QarySequence, d: QarySequence, alpha: int) -> bool:
    """For orthogonal unimodular c, d: is |sum_{l != alpha} c_l conj(d_l)|^2 == 1?

    Evaluated exactly in Z[xi].
    """
    if not accf(c, d, 0).is_zero():
        raise ValueError("sequences are not orthogonal")
    if not 0 <= alpha < c.L:
        raise ValueError(f"alpha={alpha} outside [0, {c.L})")
    diff = [a - b for l, (a, b) in enumerate(zip(c.exponents, d.exponents)) if l != alpha]
    rest = CycloValue.from_exponents(c.q, diff)
    return rest.abs2() == CycloValue.unit(c.q)


def excluded_sum_abs2(c: QarySequence, d: QarySequence, alpha: int) -> float:
    """Floating mirror of the quantity tested by :func:`lemma2_check`."""
    z = c.to_complex() * np.conj(d.to_complex())
    return float(abs(z.sum() - z[alpha]) ** 2)


def random_orthogonal_pair(q: int, L: int, seed) -> tuple[QarySequence, QarySequence]:
    """Two ramps a*i and a'*i (mod q) whose slopes differ by a nonzero multiple of q/L.

    Their inner product is a full sum of nontrivial L-th roots of unity, so it
    vanishes.
    """
    if L < 2:
        raise ValueError("orthogonal ramps need L >= 2")
    if q % L:
        raise ValueError(f"L={L} does not divide q={q}")
    rng = np.random.default_rng(seed)
    a = int(rng.integers(q))
    step = int(rng.integers(1, L)) * (q // L)
    a2 = (a - step) % q
    i = np.arange(L)
    c = QarySequence(q, tuple(((a * i) % q).tolist()))
    d = QarySequence(q, tuple(((a2 * i) % q).tolist()))
    return c, d
