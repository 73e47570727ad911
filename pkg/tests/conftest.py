from fractions import Fraction

import pytest

from filigrade.catalog import ModelSpec

# alpha choices known to satisfy Jacobi (rank-one models)
A_FIXTURES = [
    ModelSpec("A", 6, 1, (1,)),
    ModelSpec("A", 7, 1, (1, 2)),
    ModelSpec("A", 7, 1, (0, 1)),
    ModelSpec("A", 7, 1, (1, 0)),
    ModelSpec("A", 7, 2, (1,)),
    ModelSpec("A", 8, 3, (1,)),
]
B_FIXTURES = [
    ModelSpec("B", 6, 1, (1,)),
    ModelSpec("B", 8, 1, (-1, 2)),
    ModelSpec("B", 8, 3, (1,)),
]
# one representative per (n, p) of the classification grid
A_GRID = [ModelSpec("A", 6, 1, (1,)), ModelSpec("A", 7, 1, (1, 2)),
          ModelSpec("A", 7, 2, (1,)), ModelSpec("A", 8, 3, (1,))]
B_GRID = list(B_FIXTURES)


@pytest.fixture
def half():
    return Fraction(1, 2)
