"""Utility functions for bit-packed element sets."""

from matroid_moves.utils.bits import (
    bits_from_mask,
    elements_of,
    iter_elements,
    lowest_element,
    mask_from_bits,
    mask_of,
    parity,
    popcount,
)

__all__ = [
    "bits_from_mask",
    "elements_of",
    "iter_elements",
    "lowest_element",
    "mask_from_bits",
    "mask_of",
    "parity",
    "popcount",
]
