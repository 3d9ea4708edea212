"""Unit test configuration."""

from __future__ import annotations

import pytest

from painleve_galois.common.polynomial import Polynomial
from painleve_galois.common.rational_function import RationalFunction
from painleve_galois.common.session import Session
from painleve_galois.dataset.galois_certificate import GaloisCertificate
from painleve_galois.dataset.vorobev_yablonski import VorobevYablonskiTable
from painleve_galois.method.kovacic import Kovacic
from painleve_galois.method.nve_builder import NVEBuilder


@pytest.fixture(scope="session")
def table() -> VorobevYablonskiTable:
    """Polynomial table shared across the test session.

    Returns:
        VorobevYablonskiTable: table allowed to grow to the default depth
    """
    return VorobevYablonskiTable(max_n=16)


@pytest.fixture()
def session() -> Session:
    """Session with the default limits.

    Returns:
        Session: fresh session
    """
    return Session()


@pytest.fixture()
def z() -> RationalFunction:
    """The identity rational function.

    Returns:
        RationalFunction: `z`
    """
    return RationalFunction.identity()


@pytest.fixture()
def zp() -> Polynomial:
    """The identity polynomial.

    Returns:
        Polynomial: `z`
    """
    return Polynomial.identity()


@pytest.fixture(scope="session")
def certificate_n1(table: VorobevYablonskiTable) -> GaloisCertificate:
    """Certificate of the normal variational equation along `w(z, 1)`.

    Args:
        table (VorobevYablonskiTable): shared polynomial table

    Returns:
        GaloisCertificate: the certificate
    """
    problem = NVEBuilder.nve_potential(1, table)
    return Kovacic.analyze(problem.r, problem)


@pytest.fixture(scope="session")
def certificate_case1() -> GaloisCertificate:
    """Certificate of `y'' = 2/z^2 y`, solved by `y = z^2`.

    Returns:
        GaloisCertificate: the certificate
    """
    z = RationalFunction.identity()
    return Kovacic.analyze(2 / z**2)
