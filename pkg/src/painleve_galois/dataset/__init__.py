"""Immutable domain records."""

from __future__ import annotations
