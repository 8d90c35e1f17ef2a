"""Tests for bit-word helpers."""

import numpy as np

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


class TestCounting:
    """Tests for popcount and parity."""

    def test_popcount(self):
        """Test popcount on small words."""
        assert popcount(0) == 0
        assert popcount(0b1011) == 3
        assert popcount((1 << 255) - 1) == 255

    def test_parity(self):
        """Test parity on small words."""
        assert parity(0) == 0
        assert parity(0b1011) == 1
        assert parity(0b11) == 0


class TestElements:
    """Tests for converting between elements and membership words."""

    def test_iter_elements_ascending(self):
        """Test that elements come out ascending and 1-based."""
        assert list(iter_elements(0b1101)) == [1, 3, 4]
        assert list(iter_elements(0)) == []

    def test_mask_of(self):
        """Test building a word from elements."""
        assert mask_of([1, 3, 4]) == 13
        assert mask_of([]) == 0

    def test_elements_round_trip(self):
        """Test that elements_of inverts mask_of."""
        assert elements_of(mask_of([2, 5, 6])) == [2, 5, 6]

    def test_lowest_element(self):
        """Test the smallest element of a word."""
        assert lowest_element(0b1100) == 3


class TestPackedBits:
    """Tests for numpy bit packing."""

    def test_mask_from_bits(self):
        """Test that index i of the array colours element i+1."""
        assert mask_from_bits(np.array([1, 0, 1, 1], dtype=np.uint8)) == 13

    def test_bits_from_mask(self):
        """Test unpacking a word into a 0/1 array."""
        bits = bits_from_mask(13, 7)

        assert bits.tolist() == [1, 0, 1, 1, 0, 0, 0]

    def test_long_words(self):
        """Test packing beyond one byte."""
        bits = np.zeros(255, dtype=np.uint8)
        bits[254] = 1
        bits[0] = 1

        assert mask_from_bits(bits) == (1 << 254) | 1
