"""
This module defines ReachMatrix, the boolean all-pairs relation used for
nonnegative-prefix reachability, Dyck relations and transitive closures.

Diagonal entries mean "a non-empty closed walk exists"; off-diagonal entries
mean "a non-empty path exists".
"""
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence, Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class ReachMatrix:
    """
    An n x n boolean relation over vertices 1..n.

    Attributes:
    -----------
    n : int
        The dimension.
    bits : np.ndarray
        Boolean array of shape (n, n); bits[u - 1, v - 1] is entry (u, v).
    """
    n: int
    bits: np.ndarray

    def __post_init__(self):
        bits = np.asarray(self.bits, dtype=bool)
        if bits.shape != (self.n, self.n):
            raise ValueError(f"ReachMatrix bits must have shape ({self.n}, {self.n}), got {bits.shape}")
        bits = bits.copy()
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)

    def __getitem__(self, pair: Tuple[int, int]) -> bool:
        u, v = pair
        if not (1 <= u <= self.n and 1 <= v <= self.n):
            raise IndexError(f"({u}, {v}) outside [1, {self.n}]")
        return bool(self.bits[u - 1, v - 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReachMatrix):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.bits, other.bits))

    __hash__ = None

    def pairs(self) -> Iterator[Tuple[int, int]]:
        """The true entries as 1-based pairs, row-major."""
        for u, v in zip(*np.nonzero(self.bits)):
            yield int(u) + 1, int(v) + 1

    def diagonal(self) -> np.ndarray:
        return self.bits.diagonal()

    def restrict(self, vertices: Sequence[int]) -> "ReachMatrix":
        """The sub-relation on the given vertices, relabelled 1..len(vertices) in the given order."""
        index = np.asarray(vertices, dtype=np.int64) - 1
        return ReachMatrix(len(index), self.bits[np.ix_(index, index)])

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[int]) -> "ReachMatrix":
        """
        Builds a matrix from integer bitsets, where bit j of rows[i] is entry (i + 1, j + 1).
        """
        nbytes = max(1, (n + 7) // 8)
        bits = np.zeros((n, n), dtype=bool)
        for i, row in enumerate(rows[:n]):
            if row:
                packed = np.frombuffer(int(row).to_bytes(nbytes, "little"), dtype=np.uint8)
                bits[i] = np.unpackbits(packed, bitorder="little")[:n].astype(bool)
        return cls(n, bits)

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "ReachMatrix":
        bits = np.zeros((n, n), dtype=bool)
        for u, v in pairs:
            bits[u - 1, v - 1] = True
        return cls(n, bits)


class DyckRelations(NamedTuple):
    """
    D(u, v): a possibly empty Dyck path leads from u to v (D is reflexive).
    N(u, v): a non-empty Dyck path leads from u to v.
    """
    D: ReachMatrix
    N: ReachMatrix
