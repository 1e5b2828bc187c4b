"""Shared towers and reference modules; session-scoped so field tables,
residue fields, and splitting extensions are built once."""

import pytest

from drinfeld.fields import FieldTower
from drinfeld.modules import DrinfeldModule
from drinfeld.polys import Poly


@pytest.fixture(scope="session")
def tower3():
    return FieldTower(3, max_degree=4096)


@pytest.fixture(scope="session")
def tower2():
    return FieldTower(2, max_degree=2048)


@pytest.fixture(scope="session")
def tower5():
    return FieldTower(5, max_degree=1024)


@pytest.fixture(scope="session")
def tower9():
    return FieldTower(9, max_degree=512)


@pytest.fixture(scope="session")
def tower25():
    return FieldTower(25, max_degree=512)


@pytest.fixture(scope="session")
def psi3(tower3):
    """psi_T = T + tau + tau^2 over F_3."""
    one = Poly.one(tower3.base_field)
    return DrinfeldModule(tower3, [one, one])


@pytest.fixture(scope="session")
def psi3_nog1(tower3):
    """psi_T = T + tau^2 over F_3."""
    F = tower3.base_field
    return DrinfeldModule(tower3, [Poly.zero(F), Poly.one(F)])


@pytest.fixture(scope="session")
def psi2_rank3(tower2):
    """psi_T = T + tau + tau^3 over F_2."""
    F = tower2.base_field
    return DrinfeldModule(tower2, [Poly.one(F), Poly.zero(F), Poly.one(F)])
