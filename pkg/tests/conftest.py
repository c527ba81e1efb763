import random

import pytest
from click.testing import CliRunner

from mpweyl.scalars import coefficient_field


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("MPWEYL_FORMAT", "MPWEYL_BOX", "MPWEYL_SEED", "MPWEYL_SAMPLES"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def K1():
    return coefficient_field(1)


@pytest.fixture
def K2():
    return coefficient_field(2)


@pytest.fixture
def rng():
    return random.Random(20240517)


@pytest.fixture
def runner():
    return CliRunner()
