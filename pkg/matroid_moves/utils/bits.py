"""Bit-word helpers for element sets.

Element x of PG(r-1,2) is stored at bit x-1 of a membership word, so every
set of elements is a plain Python integer and set algebra is word algebra.
"""

from typing import Iterable, Iterator, List

import numpy as np


def popcount(x: int) -> int:
    """Count the set bits of a non-negative integer.

    Examples:
        >>> popcount(0b1011)
        3
    """
    return bin(x).count("1")


def parity(x: int) -> int:
    """Return popcount(x) mod 2."""
    return bin(x).count("1") & 1


def iter_elements(mask: int) -> Iterator[int]:
    """Yield the elements (1-based) present in a membership word, ascending.

    Examples:
        >>> list(iter_elements(0b1101))
        [1, 3, 4]
    """
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def elements_of(mask: int) -> List[int]:
    """Return the sorted element list of a membership word."""
    return list(iter_elements(mask))


def mask_of(elements: Iterable[int]) -> int:
    """Build a membership word from 1-based elements.

    Examples:
        >>> mask_of([1, 3, 4])
        13
    """
    mask = 0
    for x in elements:
        mask |= 1 << (x - 1)
    return mask


def lowest_element(mask: int) -> int:
    """Return the smallest element of a non-empty membership word."""
    return (mask & -mask).bit_length()


def mask_from_bits(bits: np.ndarray) -> int:
    """Pack a 0/1 array (index i = element i+1) into a membership word."""
    packed = np.packbits(np.asarray(bits, dtype=np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def bits_from_mask(mask: int, n: int) -> np.ndarray:
    """Unpack a membership word into a 0/1 array of length n."""
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n]
