"""Lattice operations on closed families: meet, join, meet-prime, order and decomposition"""

import logging
from dataclasses import dataclass

from config.settings import WITNESS_SAMPLE
from src.closure.engine import closure, isolated_points, witness_for
from src.core.errors import NoLGS, NotComparable, PreconditionFailed
from src.families.family import (
    Family, difference, family_eq, family_subset, intersect, union,
)
from .elements import LatticeElement

logger = logging.getLogger(__name__)


def meet(a: LatticeElement, b: LatticeElement) -> LatticeElement:
    return LatticeElement(intersect(a.family, b.family))


def join(a: LatticeElement, b: LatticeElement) -> LatticeElement:
    # a union of closed families is closed; LatticeElement rejects anything else
    return LatticeElement(union(a.family, b.family))


def _require_lgs(*elements):
    for element in elements:
        if not element.has_lgs:
            raise NoLGS(f"{element.label()} has no least generating set")


def meet_prime(a: LatticeElement, b: LatticeElement) -> LatticeElement:
    """Closure of the isolated points of the intersection."""
    _require_lgs(a, b)
    return LatticeElement(closure(isolated_points(intersect(a.family, b.family))))


def leq(a: LatticeElement, b: LatticeElement) -> bool:
    return family_subset(a.family, b.family)


@dataclass
class LeqDecomposition:
    """The generators of the larger element split against those of the smaller.

    ``shared`` lies in both generating sets, ``used`` accumulates at generators
    of the smaller element that the larger one does not list, ``unused`` is the rest.
    """

    shared: Family
    used: Family
    unused: Family
    missing: Family  # generators of the smaller element absent from the larger's

    def conditions(self, small_gens: Family, large_gens: Family):
        outside = union(self.used, self.unused)
        return {
            "partition": (family_eq(union(self.shared, outside), large_gens)
                          and intersect(self.shared, outside).is_empty
                          and intersect(self.used, self.unused).is_empty),
            "sharedContained": family_subset(self.shared, small_gens),
            "restDisjoint": intersect(outside, small_gens).is_empty,
            "usedAccumulates": all(_accumulates_at(p, self.missing) for p in self.used.pieces()),
            "unusedIdle": not any(_accumulates_at(p, self.missing) for p in self.unused.pieces()),
        }

    def to_json(self):
        return {"shared": self.shared.to_dsl(), "used": self.used.to_dsl(),
                "unused": self.unused.to_dsl()}


def _accumulates_at(piece, target: Family):
    return not intersect(Family(piece.acc()), target).is_empty


def decompose(a: LatticeElement, b: LatticeElement) -> LeqDecomposition:
    _require_lgs(a, b)
    if not leq(a, b):
        raise NotComparable(f"{a.label()} is not below {b.label()}")
    small, large = a.generators, b.generators
    missing = difference(small, large)
    rest = difference(large, small)
    used, unused = [], []
    for piece in rest.pieces():
        (used if _accumulates_at(piece, missing) else unused).append(piece)
    used = Family(tuple(used))
    # a point in both an accumulating and an idle piece counts as used
    unused = difference(Family(tuple(unused)), used)
    result = LeqDecomposition(intersect(large, small), used, unused, missing)
    conditions = result.conditions(small, large)
    if not all(conditions.values()):
        logger.error("decomposition of %s below %s breaks %s", a.label(), b.label(),
                     [k for k, v in conditions.items() if not v])
    return result


def check_finite_extension(a: LatticeElement, b: LatticeElement) -> bool:
    """With finitely many new generators, the larger element is the smaller plus its unused part."""
    parts = decompose(a, b)
    extra = difference(b.generators, a.generators)
    if not extra.is_finite:
        raise PreconditionFailed("the larger element adds infinitely many generators")
    return (family_eq(b.family, union(a.family, parts.unused))
            and family_eq(b.generators, union(a.generators, parts.unused)))


def check_join_has_lgs(a: LatticeElement, b: LatticeElement) -> bool:
    _require_lgs(a, b)
    joined = join(a, b)
    return joined.has_lgs and family_subset(joined.generators, union(a.generators, b.generators))


def check_generation_neighbourhoods(a: LatticeElement, b: LatticeElement) -> bool:
    """Each isolating sentence of a generator lost between ``a`` and ``b`` meets the used part infinitely."""
    parts = decompose(a, b)
    if parts.used.is_empty:
        return True
    missing = parts.missing
    points = missing.points() if missing.is_finite else [
        p for block in missing.blocks for p in block.sample(WITNESS_SAMPLE)]
    for point in points:
        sentence = witness_for(a.generators, point)
        if not parts.used.count(sentence).is_infinite:
            logger.error("neighbourhood %s of %s meets the used part finitely", sentence, point)
            return False
    return True


@dataclass
class DistributivityReport:
    first: bool   # a ∧′ (b ∨ c) = (a ∧′ b) ∨ (a ∧′ c)
    second: bool  # a ∨ (b ∧′ c) = (a ∨ b) ∧′ (a ∨ c)
    sides: dict

    @property
    def holds(self):
        return self.first and self.second


def check_distributivity(a, b, c) -> DistributivityReport:
    _require_lgs(a, b, c)
    first_left = meet_prime(a, join(b, c))
    first_right = join(meet_prime(a, b), meet_prime(a, c))
    second_left = join(a, meet_prime(b, c))
    second_right = meet_prime(join(a, b), join(a, c))
    first = first_left.same_as(first_right)
    second = second_left.same_as(second_right)
    sides = {}
    if not first:
        sides["first"] = (first_left.label(), first_right.label())
    if not second:
        sides["second"] = (second_left.label(), second_right.label())
    return DistributivityReport(first, second, sides)


def check_order_coherence(a: LatticeElement, b: LatticeElement):
    """leq agrees with join-absorption, and with meet-prime absorption when both have generators."""
    below = leq(a, b)
    result = {"leq": below, "join": join(a, b).same_as(b)}
    if a.has_lgs and b.has_lgs:
        result["meetPrime"] = meet_prime(a, b).same_as(a)
    result["coherent"] = result["join"] == below and (
        "meetPrime" not in result or not below or result["meetPrime"])
    return result
