"""Tests for the binary-matroid-moves library."""
