from __future__ import annotations

import pytest

from orepair import FiniteField, PuiseuxField


@pytest.fixture
def f4():
    return FiniteField(2, 2)


@pytest.fixture
def theta(f4):
    return f4.gen()


@pytest.fixture
def K2():
    return PuiseuxField(FiniteField(2, 1))
