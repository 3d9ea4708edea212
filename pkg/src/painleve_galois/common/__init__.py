"""Exact algebra, expression front end, session and shared helpers."""

from __future__ import annotations
