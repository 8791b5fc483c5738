"""Optimal (b^n, 2^k, b^n, 2^k) Z-complementary sets from EGBFs.

The sequences are

    c^p_lambda = f^(b^n) + g^p + (q/2) * sum_gamma lambda_gamma x_{pi_gamma(1)}^(b^n)

where f is a quadratic GBF following k path orderings of {1..m} and g^p is a
linear EGBF over Z_b^n whose coefficients are the base-b digits of p.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .boolean import PolyFunction, digits, sequence_of, truncate
from .family import Flock, ZcsFamily
from .correlation import QarySequence

__all__ = [
    "ConstructionError",
    "ConstructionParams",
    "build_offset_egbf",
    "build_quadratic_gbf",
    "build_zcs",
    "construction_sequence",
    "random_params",
    "valid_size_grid",
]


class ConstructionError(ValueError):
    """Construction parameters violate a requirement."""


@dataclass(frozen=True)
class ConstructionParams:
    """Inputs of the construction.

    ``blocks[g]`` is the ordered list (pi_g(1), ..., pi_g(m_g)); the blocks
    must partition {1..m} and their first elements must be exactly {1..k}.
    ``beta`` holds (beta_0, beta_1, ..., beta_m); zeros when omitted.
    """

    q: int
    b: int
    m: int
    n: int
    blocks: tuple[tuple[int, ...], ...]
    beta: Optional[tuple[int, ...]] = None
    k: Optional[int] = None

    def __post_init__(self):
        blocks = tuple(tuple(int(x) for x in blk) for blk in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        k = len(blocks) if self.k is None else int(self.k)
        object.__setattr__(self, "k", k)
        beta = (0,) * (self.m + 1) if self.beta is None else tuple(int(x) for x in self.beta)
        object.__setattr__(self, "beta", beta)
        self.validate()
        object.__setattr__(self, "beta", tuple(x % self.q for x in beta))

    def validate(self) -> None:
        q, b, m, n, k = self.q, self.b, self.m, self.n, self.k
        if q < 2 or q % 2:
            raise ConstructionError(f"q must be even, got q={q}")
        if b < 2 or b > q:
            raise ConstructionError(f"b must satisfy 2 <= b <= q, got b={b}")
        if q % b:
            raise ConstructionError(f"b does not divide q (b={b}, q={q})")
        if m < 1:
            raise ConstructionError(f"m must be positive, got m={m}")
        if n < 1:
            raise ConstructionError(f"n must be positive, got n={n}")
        if b**n > 2**m:
            raise ConstructionError(f"b^n exceeds 2^m ({b}^{n} > 2^{m})")
        if len(self.blocks) != k:
            raise ConstructionError(f"k={k} but {len(self.blocks)} blocks were given")
        if not 1 <= k <= m:
            raise ConstructionError(f"k must satisfy 1 <= k <= m, got k={k}, m={m}")
        if 2**k > b**n:
            raise ConstructionError(f"zone width 2^k exceeds length b^n (2^{k} > {b}^{n})")
        members = [x for blk in self.blocks for x in blk]
        if any(not blk for blk in self.blocks) or sorted(members) != list(range(1, m + 1)):
            raise ConstructionError(f"blocks do not partition {{1..{m}}}: {self.blocks}")
        if sorted(blk[0] for blk in self.blocks) != list(range(1, k + 1)):
            raise ConstructionError(
                f"first elements of blocks must be {{1..{k}}}, got {[blk[0] for blk in self.blocks]}"
            )
        if len(self.beta) != m + 1:
            raise ConstructionError(f"beta needs m+1={m + 1} entries, got {len(self.beta)}")

    @property
    def length(self) -> int:
        return self.b**self.n

    @property
    def flock_size(self) -> int:
        return 2**self.k

    @property
    def set_size(self) -> int:
        return self.b**self.n

    @property
    def zone_width(self) -> int:
        return 2**self.k


def build_quadratic_gbf(params: ConstructionParams) -> PolyFunction:
    """(q/2) * sum over consecutive pairs of each block path, plus the affine part."""
    q, m = params.q, params.m
    terms = []
    for blk in params.blocks:
        for a, c in zip(blk, blk[1:]):
            terms.append((q // 2, frozenset({a, c})))
    for l in range(1, m + 1):
        terms.append((params.beta[l], frozenset({l})))
    terms.append((params.beta[0], frozenset()))
    return PolyFunction(2, m, q, tuple(terms))


def build_offset_egbf(p: int, params: ConstructionParams) -> PolyFunction:
    """g^p = (q/b) * sum_l p_l y_l with p_l the base-b digits of p (LSB first)."""
    b, n, q = params.b, params.n, params.q
    if not 0 <= p < b**n:
        raise ConstructionError(f"offset index p={p} outside [0, {b**n})")
    ps = digits(p, b, n)
    return PolyFunction(
        b, n, q, tuple(((q // b) * ps[l - 1], frozenset({l})) for l in range(1, n + 1))
    )


def _lambda_bits(index: int, k: int) -> tuple[int, ...]:
    return digits(index, 2, k)


def construction_sequence(params: ConstructionParams, p: int, lam: int) -> QarySequence:
    """Sequence number ``lam`` of flock ``p``.

    ``lam`` encodes (lambda_1, ..., lambda_k) with lambda_1 least significant.
    """
    L, q = params.length, params.q
    f_seq = truncate(sequence_of(build_quadratic_gbf(params)), L).array
    g_seq = sequence_of(build_offset_egbf(p, params)).array
    idx = np.arange(L)
    total = f_seq + g_seq
    for bit, blk in zip(_lambda_bits(lam, params.k), params.blocks):
        if bit:
            total = total + (q // 2) * ((idx >> (blk[0] - 1)) & 1)
    return QarySequence(q, tuple((total % q).tolist()))


def build_zcs(params: ConstructionParams) -> ZcsFamily:
    """Build the family {C^0, ..., C^{b^n - 1}} with claimed zone width 2^k."""
    L, q, k = params.length, params.q, params.k
    f_seq = truncate(sequence_of(build_quadratic_gbf(params)), L).array
    idx = np.arange(L)
    heads = np.array([(idx >> (blk[0] - 1)) & 1 for blk in params.blocks])  # (k, L)
    lam = np.array([_lambda_bits(i, k) for i in range(2**k)]).reshape(2**k, k)
    lam_part = (q // 2) * (lam @ heads)  # (2^k, L)
    flocks = []
    for p in range(params.set_size):
        g_seq = sequence_of(build_offset_egbf(p, params)).array
        rows = (f_seq + g_seq + lam_part) % q
        flocks.append(Flock.from_rows(q, rows.tolist()))
    return ZcsFamily(tuple(flocks), claimed_Z=params.zone_width)


def random_params(
    rng: np.random.Generator, q: int, b: int, m: int, n: int, k: int
) -> ConstructionParams:
    """Random partition, block orderings and affine coefficients for fixed sizes."""
    heads = list(range(1, k + 1))
    rng.shuffle(heads)
    blocks = [[h] for h in heads]
    for x in range(k + 1, m + 1):
        blocks[int(rng.integers(k))].append(x)
    blocks = [[blk[0]] + list(rng.permutation(blk[1:])) for blk in blocks]
    beta = tuple(int(v) for v in rng.integers(0, q, size=m + 1))
    return ConstructionParams(q=q, b=b, m=m, n=n, blocks=tuple(map(tuple, blocks)), beta=beta)


def valid_size_grid(qs: Sequence[int] = (2, 4, 6, 8), max_log_len: int = 6):
    """All (q, b, m, n, k) accepted by ConstructionParams with 2^m <= 2^max_log_len."""
    for q in qs:
        for b in range(2, q + 1):
            if q % b:
                continue
            for m in range(1, max_log_len + 1):
                for n in range(1, m + 1):
                    if b**n > 2**m:
                        break
                    for k in range(1, m + 1):
                        if 2**k > b**n:
                            break
                        yield q, b, m, n, k
