"""Flocks and Z-complementary set families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .correlation import QarySequence

__all__ = ["Flock", "ZcsFamily"]


@dataclass(frozen=True)
class Flock:
    """N sequences of a common length over a common alphabet."""

    sequences: tuple[QarySequence, ...]

    def __post_init__(self):
        seqs = tuple(self.sequences)
        if not seqs:
            raise ValueError("a flock needs at least one sequence")
        q, L = seqs[0].q, seqs[0].L
        for s in seqs:
            if s.q != q or s.L != L:
                raise ValueError("sequences in a flock must share q and length")
        object.__setattr__(self, "sequences", seqs)

    @classmethod
    def from_rows(cls, q: int, rows: Sequence[Sequence[int]]) -> Flock:
        return cls(tuple(QarySequence(q, tuple(r)) for r in rows))

    @property
    def N(self) -> int:
        return len(self.sequences)

    @property
    def L(self) -> int:
        return self.sequences[0].L

    @property
    def q(self) -> int:
        return self.sequences[0].q

    def __iter__(self):
        return iter(self.sequences)

    def __getitem__(self, i: int) -> QarySequence:
        return self.sequences[i]

    def to_array(self) -> np.ndarray:
        return np.array([s.exponents for s in self.sequences], dtype=np.int64)


@dataclass(frozen=True)
class ZcsFamily:
    """M flocks sharing N, L and q, with an optional claimed zone width."""

    flocks: tuple[Flock, ...]
    claimed_Z: Optional[int] = None

    def __post_init__(self):
        flocks = tuple(self.flocks)
        if not flocks:
            raise ValueError("a family needs at least one flock")
        N, L, q = flocks[0].N, flocks[0].L, flocks[0].q
        for f in flocks:
            if (f.N, f.L, f.q) != (N, L, q):
                raise ValueError("flocks must share N, L and q")
        if self.claimed_Z is not None and not 1 <= self.claimed_Z <= L:
            raise ValueError(f"claimed Z={self.claimed_Z} outside [1, {L}]")
        object.__setattr__(self, "flocks", flocks)

    @classmethod
    def from_array(cls, exponents, q: int, claimed_Z: Optional[int] = None) -> ZcsFamily:
        """Build from an (M, N, L) integer array of exponents."""
        arr = np.asarray(exponents, dtype=np.int64)
        if arr.ndim != 3:
            raise ValueError(f"expected an (M, N, L) array, got shape {arr.shape}")
        return cls(tuple(Flock.from_rows(q, flock.tolist()) for flock in arr), claimed_Z)

    @property
    def M(self) -> int:
        return len(self.flocks)

    @property
    def N(self) -> int:
        return self.flocks[0].N

    @property
    def L(self) -> int:
        return self.flocks[0].L

    @property
    def q(self) -> int:
        return self.flocks[0].q

    @property
    def params(self) -> tuple[int, int, int]:
        return self.M, self.N, self.L

    def __iter__(self):
        return iter(self.flocks)

    def __getitem__(self, p: int) -> Flock:
        return self.flocks[p]

    def to_array(self) -> np.ndarray:
        return np.stack([f.to_array() for f in self.flocks])
