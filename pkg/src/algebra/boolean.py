"""Boolean algebra of subsets generated by parts of a least generating set

Elements are bitmasks over a finite list of pairwise disjoint generators
drawn from the least generating set; the denotation of a mask is the
closure of the union of the generators it selects.
"""

import logging
from dataclasses import dataclass, field
from typing import List

import numpy as np

from config.settings import (
    ALGEBRA_EXHAUSTIVE_LIMIT, ALGEBRA_GENERATOR_CAP, ALGEBRA_SAMPLED_PAIRS, DEFAULT_BASE_SEED,
)
from src.closure.engine import closure, least_generating_set
from src.core.errors import CapExceeded, NoLGS, PreconditionFailed
from src.core.words import TheoryPoint
from src.families.blocks import FinSet
from src.families.family import Family, family_eq, family_subset, intersect, union
from src.lattice.elements import LatticeElement
from src.lattice.operations import meet_prime

logger = logging.getLogger(__name__)


@dataclass
class AlgebraElement:
    mask: int
    denotation: Family

    def selects(self, k):
        return bool(self.mask >> k & 1)


@dataclass
class BooleanAlgebra:
    family: Family
    generators: List[Family]
    elements: List[AlgebraElement] = field(default_factory=list)

    @property
    def size(self):
        return len(self.elements)

    @property
    def top(self):
        return (1 << len(self.generators)) - 1

    def meet(self, x, y):
        return x & y

    def join(self, x, y):
        return x | y

    def complement(self, x):
        return self.top ^ x

    def atoms(self):
        return [1 << k for k in range(len(self.generators))]

    def denotation(self, x) -> Family:
        return self.elements[x].denotation

    def to_json(self):
        width = len(self.generators)
        atoms = set(self.atoms())
        return [{"mask": format(e.mask, f"0{width}b") if width else "",
                 "atom": e.mask in atoms,
                 "denotation": e.denotation.to_dsl()} for e in self.elements]


def _as_family(generator):
    if isinstance(generator, TheoryPoint):
        return Family.of(FinSet((generator,)))
    return generator


def default_generators(lgs: Family, cap):
    """The first ``cap`` points of the generating set, as singletons."""
    if lgs.is_finite:
        points = lgs.points()
    else:
        points = [p for block in lgs.blocks for p in block.sample(cap)]
    return [Family.of(FinSet((p,))) for p in points[:cap]]


def build_algebra(family: Family, generators=None, cap=ALGEBRA_GENERATOR_CAP) -> BooleanAlgebra:
    report = least_generating_set(family, with_witnesses=False)
    if not report.has_least:
        raise NoLGS(f"{family.label()} has no least generating set")
    lgs = report.least_gen_set
    if generators is None:
        generators = default_generators(lgs, cap)
    generators = [_as_family(g) for g in generators]
    if len(generators) > cap:
        raise CapExceeded(f"{len(generators)} generators exceed the cap of {cap}")
    for k, generator in enumerate(generators):
        if not family_subset(generator, lgs):
            raise PreconditionFailed(f"generator {k} is not part of the least generating set")
        for other in generators[:k]:
            if not intersect(generator, other).is_empty:
                raise PreconditionFailed(f"generator {k} overlaps an earlier generator")

    algebra = BooleanAlgebra(family, generators)
    for mask in range(1 << len(generators)):
        chosen = [g for k, g in enumerate(generators) if mask >> k & 1]
        algebra.elements.append(AlgebraElement(mask, closure(union(*chosen))))
    logger.info("built algebra with %d elements over %d generators", algebra.size, len(generators))
    return algebra


@dataclass
class IsoReport:
    pairs_checked: int
    exhaustive: bool
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def __bool__(self):
        return self.ok


def _pairs(size, seed):
    if size <= ALGEBRA_EXHAUSTIVE_LIMIT:
        return [(x, y) for x in range(size) for y in range(size)], True
    rng = np.random.default_rng(seed)
    drawn = rng.integers(0, size, size=(ALGEBRA_SAMPLED_PAIRS, 2))
    return [(int(x), int(y)) for x, y in drawn], False


def iso_check(algebra: BooleanAlgebra, seed=DEFAULT_BASE_SEED) -> IsoReport:
    """Check that mask -> denotation is an order isomorphism commuting with the operations."""
    elements = [LatticeElement(e.denotation) for e in algebra.elements]
    pairs, exhaustive = _pairs(algebra.size, seed)
    report = IsoReport(len(pairs), exhaustive)
    top = algebra.top

    for x in range(algebra.size):
        rest = elements[algebra.complement(x)]
        if not family_eq(union(elements[x].family, rest.family), elements[top].family):
            report.failures.append(f"complement of {x:b} does not join to the top")
        if not meet_prime(elements[x], rest).family.is_empty:
            report.failures.append(f"complement of {x:b} meets it")

    for x, y in pairs:
        a, b = elements[x], elements[y]
        if family_subset(a.family, b.family) != (x & ~y == 0):
            report.failures.append(f"order differs at {x:b}, {y:b}")
        if not family_eq(elements[algebra.join(x, y)].family, union(a.family, b.family)):
            report.failures.append(f"join differs at {x:b}, {y:b}")
        if not meet_prime(a, b).same_as(elements[algebra.meet(x, y)]):
            report.failures.append(f"meet differs at {x:b}, {y:b}")
    if report.failures:
        logger.error("algebra isomorphism check failed: %s", report.failures[:3])
    return report
