"""Test configuration within src dir (doctests)."""
from __future__ import annotations

from typing import Any

import pytest

from painleve_galois.common.rational_function import RationalFunction
from painleve_galois.common.session import Session


@pytest.fixture(scope="session", autouse=True)
def session(doctest_namespace: dict[str, Any]) -> Session:
    """Session shared by the doctests.

    It is made available to doctests through the `session` namespace, next to the
    identity function `z`.

    Args:
        doctest_namespace (dict[str, Any]): pytest namespace for doctests

    Returns:
        Session: session with the default limits
    """
    session = Session()
    doctest_namespace["session"] = session
    doctest_namespace["z"] = RationalFunction.identity()
    return session
