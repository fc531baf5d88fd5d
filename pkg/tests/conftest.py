import random

import pytest

from revsynth.core.boolfunc import TruthTable


def all_truth_tables(n):
    size = 1 << n
    for value in range(1 << size):
        yield TruthTable(n, tuple((value >> a) & 1 for a in range(size)))


@pytest.fixture(scope="session")
def two_var_tables():
    return list(all_truth_tables(2))


@pytest.fixture(scope="session")
def three_var_tables():
    return list(all_truth_tables(3))


@pytest.fixture()
def rng():
    return random.Random(0xC0FFEE)
