import logging
import random

import pytest

from polygrow.core.geometry import RationalPolygon, make_polygon
from polygrow.utils.errors import DegenerateError
from polygrow.utils.logger import Logger


@pytest.fixture(autouse=True)
def quiet_logger():
    """No log files and no console noise while testing"""
    Logger.configure(log_dir=None, console_level=logging.CRITICAL)
    yield


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240501)


@pytest.fixture
def t21() -> RationalPolygon:
    """conv((0,0), (1/2,0), (0,1/2))"""
    return make_polygon(2, [(0, 0), (1, 0), (0, 1)])


@pytest.fixture
def half_square() -> RationalPolygon:
    """[0,1/2]^2"""
    return make_polygon(2, [(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def all_half_triangle() -> RationalPolygon:
    """conv((1/2,1/2), (1,1/2), (1/2,1))"""
    return make_polygon(2, [(1, 1), (2, 1), (1, 2)])


@pytest.fixture
def unit_triangle() -> RationalPolygon:
    return make_polygon(1, [(0, 0), (1, 0), (0, 1)])


def random_polygon(rng: random.Random, r: int, bound: int, points: int = 5) -> RationalPolygon:
    """A random two-dimensional polygon with scaled coordinates in [-bound, bound]"""
    while True:
        sample = [(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(points)]
        try:
            return make_polygon(r, sample)
        except DegenerateError:
            continue


def random_unimodular(rng: random.Random, bound: int = 5):
    while True:
        a, b, c, d = (rng.randint(-bound, bound) for _ in range(4))
        if abs(a * d - b * c) == 1:
            return (a, b), (c, d)
