import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.closure.engine import closure  # noqa: E402
from src.core.words import TheoryPoint  # noqa: E402
from src.families.blocks import Cube, FanArray, FinSet  # noqa: E402
from src.families.family import Family  # noqa: E402
from src.gallery.cases import CUBE0, CUBE0_MASK, FAN0, FAN_B, ZERO  # noqa: E402


def point(text):
    prefix, period = text.split("~")
    return TheoryPoint(prefix, period)


@pytest.fixture
def zero():
    return ZERO


@pytest.fixture
def fan0():
    return Family.of(FAN0)


@pytest.fixture
def fan0_closed():
    return closure(Family.of(FAN0))


@pytest.fixture
def fan_b_closed():
    return closure(Family.of(FAN_B))


@pytest.fixture
def cube0():
    return Family.of(CUBE0)


@pytest.fixture
def limit_only():
    return Family.of(FinSet((ZERO,)))


@pytest.fixture
def array_pair():
    first = closure(Family.of(FanArray(CUBE0_MASK, start=1, step=4)))
    second = closure(Family.of(FanArray(CUBE0_MASK, start=3, step=4)))
    return first, second


@pytest.fixture
def cube_block():
    return Cube(CUBE0_MASK)
