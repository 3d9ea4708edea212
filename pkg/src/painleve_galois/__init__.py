"""Exact Galois analysis of the normal variational equations of Painleve II."""

from __future__ import annotations
