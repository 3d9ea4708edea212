"""Algorithms of the toolkit."""

from __future__ import annotations
