"""Helpers for vertex sets packed into Python integers, bit i standing for vertex i."""
from typing import Iterable, Iterator


def bits_of(indices: Iterable[int]) -> int:
    """Packs indices into an integer bitset."""
    bits = 0
    for i in indices:
        bits |= 1 << i
    return bits


def iter_bits(bits: int) -> Iterator[int]:
    """Yields the set indices of bits in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def union_of_rows(rows, bits: int) -> int:
    """OR of rows[i] over every index i set in bits."""
    result = 0
    for i in iter_bits(bits):
        result |= rows[i]
    return result
