"""Seeded random families for property suites"""

import logging

import numpy as np

from config.settings import (
    DEFAULT_FAMILY_BUDGET, MAX_RANDOM_STRIDE, MAX_RANDOM_WORD, RANDOM_ARRAY_ATTEMPTS, RANDOM_KINDS,
)
from src.closure.engine import closure
from src.core.errors import MalformedBlock
from src.core.words import Mask, TheoryPoint
from src.families.blocks import Cube, Fan, FanArray, FinSet
from src.families.family import Family

logger = logging.getLogger(__name__)


def _word(rng, alphabet, low, high):
    size = int(rng.integers(low, high + 1))
    return "".join(alphabet[int(k)] for k in rng.integers(0, len(alphabet), size=size))


def random_point(rng) -> TheoryPoint:
    return TheoryPoint(_word(rng, "01", 0, MAX_RANDOM_WORD), _word(rng, "01", 1, MAX_RANDOM_WORD))


def random_mask(rng) -> Mask:
    period = list(_word(rng, "F01", 1, MAX_RANDOM_WORD))
    period[int(rng.integers(0, len(period)))] = "F"
    return Mask(_word(rng, "F01", 0, MAX_RANDOM_WORD), "".join(period))


def random_fan(rng) -> Fan:
    return Fan(random_point(rng),
               stride=int(rng.integers(1, MAX_RANDOM_STRIDE + 1)),
               offset=int(rng.integers(0, MAX_RANDOM_WORD + 1)),
               dev=_word(rng, "01", 0, 2),
               include_limit=bool(rng.integers(0, 2)))


def random_array(rng, attempts=RANDOM_ARRAY_ATTEMPTS):
    """A fan array over a random mask. Masks with no recurring coding position are redrawn."""
    for _ in range(attempts):
        try:
            return FanArray(random_mask(rng),
                            start=int(rng.integers(0, MAX_RANDOM_WORD + 1)),
                            step=int(rng.integers(1, MAX_RANDOM_STRIDE + 1)),
                            include_base=bool(rng.integers(0, 2)))
        except MalformedBlock as exc:
            logger.debug("redrawing fan array: %s", exc)
    return random_fan(rng)


def random_block(rng, kinds):
    kind = kinds[int(rng.integers(0, len(kinds)))]
    if kind == "fin":
        return FinSet(tuple(random_point(rng) for _ in range(int(rng.integers(1, 4)))))
    if kind == "fan":
        return random_fan(rng)
    if kind == "array":
        return random_array(rng)
    return Cube(random_mask(rng))


def make_random_family(seed, budget=DEFAULT_FAMILY_BUDGET, kinds=RANDOM_KINDS) -> Family:
    """A reproducible family of ``budget`` blocks; the same seed gives the same family."""
    rng = np.random.default_rng(seed)
    blocks = [random_block(rng, kinds) for _ in range(budget)]
    family = Family(tuple(blocks), f"random-{seed}")
    logger.debug("random family %d: %s", seed, family.describe())
    return family


def make_random_lgs_family(seed, budget=DEFAULT_FAMILY_BUDGET, kinds=("fin", "fan")) -> Family:
    """Closure of a random family.

    With the default cube-free kinds the closure is scattered and always has an LGS.
    """
    family = make_random_family(seed, budget, kinds=kinds)
    return closure(family).named(f"random-lgs-{seed}")


def make_random_points(seed, count):
    rng = np.random.default_rng(seed)
    return [random_point(rng) for _ in range(count)]
