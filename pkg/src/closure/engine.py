"""Closure engine: accumulation points, closures, isolated points and least generating sets

A point is in the closure of a family exactly when every sentence it
satisfies holds in infinitely many members; blockwise that is the fan limit,
the cube itself or the array base. Closure distributes over unions, so every
computation here runs block by block.
"""

import logging

from config.settings import WITNESS_SAMPLE
from src.core.errors import NotClosed, NotGenerating, PreconditionFailed
from src.core.sentences import prefix_sentence
from src.core.trichotomy import Trichotomy
from src.families.blocks import Cube, Fan, FanArray, FinSet
from src.families.calculus import array_pieces, fan_restrict
from src.families.family import (
    Family, difference, family_eq, family_subset, intersect, union,
)
from src.families.indexset import IndexSet
from .reports import (
    ACCUMULATION, MEMBER, SEPARATED, ClosureCertificate, GeneratingConditions, GenSetReport,
)

logger = logging.getLogger(__name__)


def acc_points(family: Family) -> Family:
    return Family(tuple(piece for block in family.blocks for piece in block.acc()))


def closure(family: Family) -> Family:
    return union(family, acc_points(family))


def is_closed(family: Family) -> bool:
    return family_subset(acc_points(family), family)


def _separation_depth(family: Family, point):
    depths = [block.separation_depth(point) for block in family.blocks]
    if any(d is None for d in depths):
        return None
    return max(depths, default=0)


def separating_sentence(family: Family, point):
    """A sentence true of ``point`` whose neighbourhood meets the family finitely, without ``point``."""
    depth = _separation_depth(family, point)
    if depth is None or family.member(point):
        raise PreconditionFailed(f"{point} is in the closure of {family.label()}")
    return prefix_sentence(point.expand(depth))


def is_in_closure(point, family: Family) -> ClosureCertificate:
    if family.member(point):
        return ClosureCertificate(point, True, MEMBER)
    if _separation_depth(family, point) is None:
        return ClosureCertificate(point, True, ACCUMULATION)
    return ClosureCertificate(point, False, SEPARATED, separating_sentence(family, point))


def isolated_points(family: Family) -> Family:
    if not is_closed(family):
        raise NotClosed(f"{family.label()} is not closed")
    return difference(family, acc_points(family))


def witness_for(family: Family, point):
    """The prefix sentence isolating ``point`` in ``family``."""
    if not family.member(point):
        raise PreconditionFailed(f"{point} is not a member of {family.label()}")
    depth = _separation_depth(family, point)
    if depth is None:
        raise PreconditionFailed(f"{point} is an accumulation point of {family.label()}")
    sentence = prefix_sentence(point.expand(depth))
    count = family.count(sentence)
    if not count.same_as(Trichotomy.finite([point])):
        logger.error("witness %s for %s counts %s", sentence, point, count)
        raise PreconditionFailed(f"witness for {point} does not isolate it")
    return sentence


def _witness_points(isolated: Family):
    if isolated.is_finite:
        return list(isolated.points())
    return [p for block in isolated.blocks for p in block.sample(WITNESS_SAMPLE)]


def least_generating_set(family: Family, with_witnesses=True) -> GenSetReport:
    isolated = isolated_points(family)
    has_least = family_eq(closure(isolated), family)
    witnesses = []
    if with_witnesses:
        witnesses = [(p, witness_for(family, p)) for p in _witness_points(isolated)]
    logger.debug("lgs of %s: %d isolated blocks, hasLeast=%s",
                 family.label(), len(isolated.blocks), has_least)
    return GenSetReport(family, isolated, has_least, isolated if has_least else None, witnesses)


def _removable_parts(piece):
    if isinstance(piece, FinSet):
        return [[FinSet((p,))] for p in piece.points]
    if isinstance(piece, Fan):
        return [[FinSet((piece.point(0),))], fan_restrict(piece, IndexSet.progression(1, 2))]
    if isinstance(piece, FanArray):
        return [array_pieces(piece, IndexSet.of(piece.coding_set.first(1)))]
    # removing one point of a perfect set never changes its closure
    return []


def puncturings(generator: Family):
    """Proper sub-families of ``generator`` missing a few points of one of its pieces.

    Points are removed from the whole generator, so a member shared by two
    overlapping pieces really is gone.
    """
    for piece in generator.pieces():
        for removed in _removable_parts(piece):
            smaller = difference(generator, Family(tuple(removed)))
            if not family_subset(generator, smaller):
                yield smaller


def check_generating_conditions(family: Family, generator: Family, pool=()) -> GeneratingConditions:
    """Evaluate the four characterizations of ``generator`` being the least generating set."""
    if not family_subset(generator, family) or not family_eq(closure(generator), family):
        raise NotGenerating(f"{generator.label()} does not generate {family.label()}")

    in_generator = intersect(generator, acc_points(generator)).is_empty
    in_family = intersect(generator, acc_points(family)).is_empty

    has_cube = any(isinstance(p, Cube) for p in generator.pieces())
    minimal = not has_cube and not any(
        family_eq(closure(smaller), family) for smaller in puncturings(generator))

    candidates = [family, union(generator, acc_points(family))] + list(pool)
    least = family_eq(generator, isolated_points(family)) and all(
        family_subset(generator, c) for c in candidates
        if family_subset(c, family) and family_eq(closure(c), family))

    conditions = GeneratingConditions(least, minimal, in_generator, in_family)
    if not conditions.agree:
        logger.error("generating conditions disagree for %s: %s", generator.label(), conditions)
    return conditions
