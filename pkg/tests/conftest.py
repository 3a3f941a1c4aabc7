from fractions import Fraction

import pytest

from pseudocones.polyhedra import Polyhedron
from pseudocones.core import validate


def F(*xs):
    return tuple(Fraction(x) for x in xs)


def halfplanes(*rows):
    """Polyhedron from ``(normal, offset)`` pairs meaning ``normal . x <= offset``."""
    return Polyhedron.from_inequalities(rows)


@pytest.fixture
def K():
    # x >= 0, y >= 1
    return validate(halfplanes(((-1, 0), 0), ((0, -1), -1)))


@pytest.fixture
def L():
    # x >= 0, y <= -1
    return validate(halfplanes(((-1, 0), 0), ((0, 1), -1)))


@pytest.fixture
def triangle_cut():
    # x + y >= 2 inside the first quadrant
    return validate(halfplanes(((-1, -1), -2), ((-1, 0), 0), ((0, -1), 0)))
