"""Tests for the painleve_galois package."""
