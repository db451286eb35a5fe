"""Symbolic blocks: finite sets, convergent fans, perfect cubes and fan-arrays

Every block decides membership exactly and classifies its intersection with a
clopen set (``clopen_count``). Flags such as a fan's limit or an array's base
are split off by ``pieces()``; the set calculus only ever sees flag-free
pieces, and the family constructor folds them back into flags.
"""

import itertools
import logging
from dataclasses import dataclass, replace
from functools import cached_property
from math import lcm
from typing import Optional, Tuple

from config.settings import ENUMERATION_CAP_BITS
from src.core.errors import EnumerationLimit, MalformedBlock
from src.core.sentences import satisfiable_under, satisfies
from src.core.trichotomy import Trichotomy
from src.core.words import Mask, PeriodicWord, TheoryPoint
from src.utils.validators import validate_block_parameters
from .indexset import IndexSet

logger = logging.getLogger(__name__)


def _check(kind, **params):
    errors, warnings = validate_block_parameters(kind, **params)
    if errors:
        raise MalformedBlock("; ".join(errors))
    for warning in warnings:
        logger.warning(warning)


class Block:
    """Common interface of the four block kinds."""

    RANK: int = 0

    def pieces(self) -> Tuple["Block", ...]:
        return (self,)

    def contains(self, point: TheoryPoint) -> bool:
        raise NotImplementedError

    def clopen_count(self, sentence, block_id=None) -> Trichotomy:
        raise NotImplementedError

    def acc(self) -> Tuple["Block", ...]:
        """Accumulation points of the block, as pieces."""
        raise NotImplementedError

    def separation_depth(self, point: TheoryPoint) -> Optional[int]:
        """Prefix length whose cylinder meets the block in at most ``point``.

        None when ``point`` is an accumulation point of the block.
        """
        raise NotImplementedError

    def sample(self, count) -> Tuple[TheoryPoint, ...]:
        """Up to ``count`` members, in a fixed order."""
        raise NotImplementedError

    # descriptors used to bound sampling horizons
    def words(self):
        return ()

    def scale(self):
        return 0

    def cycle(self):
        return 1

    def sort_key(self):
        return (self.RANK, self.to_dsl())

    def to_dsl(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.to_dsl()


@dataclass(frozen=True)
class FinSet(Block):
    points: Tuple[TheoryPoint, ...] = ()

    RANK = 0

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(sorted(set(self.points))))

    def __len__(self):
        return len(self.points)

    def contains(self, point):
        return point in self.points

    def clopen_count(self, sentence, block_id=None):
        return Trichotomy.finite(p for p in self.points if satisfies(p, sentence))

    def acc(self):
        return ()

    def separation_depth(self, point):
        depth = 0
        for other in self.points:
            if other != point:
                depth = max(depth, point.first_difference(other) + 1)
        return depth

    def sample(self, count):
        return self.points[:count]

    def to_dsl(self):
        return "fin{" + ", ".join(str(p) for p in self.points) + "}"


@dataclass(frozen=True)
class Fan(Block):
    """Points t_i agreeing with ``limit`` below h(i) = stride*i + offset, flipped at h(i),
    then ``dev``, then zeros."""

    limit: TheoryPoint
    stride: int = 1
    offset: int = 0
    dev: str = ""
    include_limit: bool = False

    RANK = 1

    def __post_init__(self):
        _check('fan', stride=self.stride, offset=self.offset, dev=self.dev)
        object.__setattr__(self, "dev", self.dev.rstrip("0"))

    def flip_position(self, i):
        return self.stride * i + self.offset

    def point(self, i) -> TheoryPoint:
        h = self.flip_position(i)
        flipped = "1" if self.limit.at(h) == "0" else "0"
        return TheoryPoint(self.limit.expand(h) + flipped + self.dev, "0")

    def indices_through(self, position):
        """Indices i with h(i) <= position."""
        if position < self.offset:
            return range(0)
        return range((position - self.offset) // self.stride + 1)

    def index_of(self, point) -> Optional[int]:
        k = point.first_difference(self.limit)
        if k is None or k < self.offset or (k - self.offset) % self.stride:
            return None
        i = (k - self.offset) // self.stride
        return i if self.point(i) == point else None

    def with_limit(self, flag=True):
        return replace(self, include_limit=flag)

    def pieces(self):
        if not self.include_limit:
            return (self,)
        return (self.with_limit(False), FinSet((self.limit,)))

    def contains(self, point):
        if point == self.limit:
            return self.include_limit
        return self.index_of(point) is not None

    def clopen_count(self, sentence, block_id=None):
        if satisfies(self.limit, sentence):
            return Trichotomy.infinite(block_id)
        # past max_index every t_i agrees with the limit on the sentence
        members = (self.point(i) for i in self.indices_through(sentence.max_index()))
        return Trichotomy.finite(p for p in members if satisfies(p, sentence))

    def acc(self):
        return (FinSet((self.limit,)),)

    def separation_depth(self, point):
        if point == self.limit:
            return None
        k = point.first_difference(self.limit)
        depth = k + 1
        for i in self.indices_through(k):
            other = self.point(i)
            if other != point:
                depth = max(depth, point.first_difference(other) + 1)
        return depth

    def sample(self, count):
        head = (self.limit,) if self.include_limit else ()
        return (head + tuple(self.point(i) for i in range(count)))[:count]

    def words(self):
        return (self.limit,)

    def scale(self):
        return self.offset + len(self.dev)

    def cycle(self):
        return self.stride

    def sort_key(self):
        return (self.RANK, str(self.limit), self.offset, self.stride, self.dev, self.include_limit)

    def to_dsl(self):
        text = f"fan(limit={self.limit}, stride={self.stride}, offset={self.offset}, dev={self.dev}"
        return text + (", withlimit)" if self.include_limit else ")")


@dataclass(frozen=True)
class Cube(Block):
    """All points consistent with ``mask``; a nonempty perfect set."""

    mask: Mask

    RANK = 2

    def __post_init__(self):
        _check('cube', mask=self.mask)

    def contains(self, point):
        return self.mask.consistent(point)

    def clopen_count(self, sentence, block_id=None):
        if satisfiable_under(sentence, self.mask.fixed_bit):
            return Trichotomy.infinite(block_id)
        return Trichotomy.empty()

    def acc(self):
        return (self,)

    def separation_depth(self, point):
        found, _ = self.mask.violations(point)
        return found[0] + 1 if found else None

    def sample(self, count):
        base = self.mask.zero_fill()
        width = len(self.mask.prefix) + count * len(self.mask.period)
        flips = tuple(base.flip(i) for i in self.mask.free_positions_below(width))
        return ((base,) + flips)[:count]

    def words(self):
        return (self.mask,)

    def to_dsl(self):
        return f"cube(mask={self.mask})"


def enumerate_mask_points(mask: Mask, free, template_prefix, tail, block=None):
    """Points built from ``template_prefix`` with every assignment of the ``free`` positions."""
    if len(free) > ENUMERATION_CAP_BITS:
        raise EnumerationLimit(block, len(free), ENUMERATION_CAP_BITS)
    logger.debug("enumerating %d points over mask %s", 2 ** len(free), mask)
    points = []
    for bits in itertools.product("01", repeat=len(free)):
        word = list(template_prefix)
        for position, bit in zip(free, bits):
            word[position] = bit
        points.append(TheoryPoint("".join(word), tail))
    return points


def finite_mask_points(mask: Mask, block=None):
    """All points of a mask whose free coordinates all lie in its prefix."""
    free = mask.free_positions_below(len(mask.prefix))
    return enumerate_mask_points(mask, free, mask.prefix.replace("F", "0"), mask.period, block)


@dataclass(frozen=True)
class FanArray(Block):
    """Fans attached to a dense subset of the cube over ``base``.

    Coding positions are the fixed base positions g >= start with
    (g - start) % step == 0. The array points at g are the base points whose
    free coordinates beyond g are 0, with bit g flipped; each converges to
    nothing but base points, so the closure adds exactly the base cube.
    """

    base: Mask
    start: int = 1
    step: int = 1
    include_base: bool = False

    RANK = 3

    def __post_init__(self):
        _check('fanarray', mask=self.base, start=self.start, step=self.step)
        # equal coding sets get equal parameters
        finite, progressions = self.coding_set.progressions()
        if not finite and len(progressions) == 1:
            start, step = progressions[0]
            object.__setattr__(self, "start", start)
            object.__setattr__(self, "step", step)

    @cached_property
    def coding_set(self) -> IndexSet:
        threshold = max(self.start, len(self.base.prefix))
        period = lcm(self.step, len(self.base.period))
        return IndexSet.from_predicate(
            lambda g: g >= self.start and (g - self.start) % self.step == 0 and not self.base.is_free(g),
            threshold, period)

    def cube(self) -> Cube:
        return Cube(self.base)

    def with_base(self, flag=True):
        return replace(self, include_base=flag)

    def cell_at(self, g) -> Mask:
        """The array points coded at ``g`` as one finite mask: free below ``g``, fixed beyond."""
        width = max(g + 1, len(self.base.prefix))
        word = list(self.base.expand(width))
        for i in range(g + 1, width):
            if word[i] == "F":
                word[i] = "0"
        word[g] = "1" if self.base.at(g) == "0" else "0"
        tail = self.base.window(width, width + len(self.base.period)).replace("F", "0")
        return Mask("".join(word), tail)

    def points_at(self, g):
        """Array points whose single base violation sits at coding position ``g``."""
        if g not in self.coding_set:
            return []
        cell = self.cell_at(g)
        free = cell.prefix.count("F")
        if free > ENUMERATION_CAP_BITS:
            raise EnumerationLimit(self, free, ENUMERATION_CAP_BITS)
        logger.debug("enumerating %d array points at %d", 2 ** free, g)
        return list(cell.members())

    def satisfying_cells(self, g, sentence):
        """Sub-masks of ``cell_at(g)`` covering exactly its members that satisfy ``sentence``."""
        cell = self.cell_at(g)
        mentioned = sorted(i for i in sentence.atoms() if cell.is_free(i))
        for bits in itertools.product("01", repeat=len(mentioned)):
            word = list(cell.prefix)
            for position, bit in zip(mentioned, bits):
                word[position] = bit
            sub = Mask("".join(word), cell.period)
            if satisfies(sub.zero_fill(), sentence):
                yield sub

    def gap_of(self, point) -> Optional[int]:
        """The coding position of an array point, None for anything else."""
        found, infinite = self.base.violations(point)
        if infinite or len(found) != 1:
            return None
        g = found[0]
        if g not in self.coding_set:
            return None
        start, period = PeriodicWord.horizon(self.base, point)
        for i in range(g + 1, start + period):
            if self.base.is_free(i) and point.bit(i):
                return None
        return g

    def pieces(self):
        if not self.include_base:
            return (self,)
        return (self.with_base(False), self.cube())

    def contains(self, point):
        if self.include_base and self.base.consistent(point):
            return True
        return self.gap_of(point) is not None

    def clopen_count(self, sentence, block_id=None):
        # array points accumulate at every base point, so a satisfiable
        # base makes the array part infinite on its own
        if satisfiable_under(sentence, self.base.fixed_bit):
            return Trichotomy.infinite(block_id)
        positions = IndexSet.of(range(sentence.max_index() + 1)) & self.coding_set
        cells = [cell for g in positions.elements() for cell in self.satisfying_cells(g, sentence)]
        return Trichotomy.finite(cells=cells)

    def acc(self):
        return (self.cube(),)

    def separation_depth(self, point):
        found, _ = self.base.violations(point)
        if not found:
            return None
        if len(found) >= 2:
            return found[1] + 1
        v = found[0]
        if v not in self.coding_set:
            return v + 1
        start, period = PeriodicWord.horizon(self.base, point)
        for f in range(v + 1, start + period):
            if self.base.is_free(f) and point.bit(f):
                return f + 1
        return v + 1

    def sample(self, count):
        found = list(self.cube().sample(count)) if self.include_base else []
        for g in self.coding_set.first(count):
            if len(found) >= count:
                break
            found.extend(self.points_at(g)[:count - len(found)])
        return tuple(found[:count])

    def words(self):
        return (self.base,)

    def scale(self):
        return self.start

    def cycle(self):
        return self.step

    def sort_key(self):
        return (self.RANK, str(self.base), self.start, self.step, self.include_base)

    def to_dsl(self):
        text = f"fanarray(base=cube(mask={self.base}), c={self.start}, step={self.step}"
        return text + (", withbase)" if self.include_base else ")")
