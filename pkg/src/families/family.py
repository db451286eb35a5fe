"""Families of theories: finite unions of blocks kept in normal form"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

from src.core.errors import UnsupportedComparison, UnsupportedIntersection
from src.core.trichotomy import Trichotomy
from .blocks import Block, Cube, Fan, FanArray, FinSet
from .calculus import piece_difference, piece_intersect, piece_subset

logger = logging.getLogger(__name__)


def _unique(items):
    seen = []
    for item in items:
        if item not in seen:
            seen.append(item)
    return seen


def normalize(blocks):
    """Normal form of a union of blocks.

    Point lists are merged, a listed fan limit becomes the include-limit flag
    of every fan converging to it, a cube equal to an array's base becomes its
    include-base flag, and points already covered by another block are dropped.
    """
    points, fans, cubes, arrays = set(), [], [], []
    for block in blocks:
        for piece in block.pieces():
            if isinstance(piece, FinSet):
                points.update(piece.points)
            elif isinstance(piece, Fan):
                fans.append(piece)
            elif isinstance(piece, Cube):
                cubes.append(piece)
            elif isinstance(piece, FanArray):
                arrays.append(piece)
            else:
                raise TypeError(f"not a block: {piece!r}")

    masks = {c.mask for c in cubes}
    bases = {a.base for a in arrays}
    arrays = _unique(a.with_base(a.base in masks) for a in arrays)
    cubes = _unique(c for c in cubes if c.mask not in bases)
    fans = _unique(f.with_limit(f.limit in points) for f in fans)
    points -= {f.limit for f in fans}

    infinite = fans + cubes + arrays
    points = {p for p in points if not any(b.contains(p) for b in infinite)}
    result = sorted(infinite, key=lambda b: b.sort_key())
    if points:
        result.insert(0, FinSet(tuple(points)))
    return tuple(result)


@dataclass(frozen=True)
class Family:
    blocks: Tuple[Block, ...] = ()
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "blocks", normalize(self.blocks))

    @classmethod
    def of(cls, *blocks, name=None):
        return cls(tuple(blocks), name)

    @classmethod
    def empty(cls, name=None):
        return cls((), name)

    def named(self, name):
        return Family(self.blocks, name)

    def pieces(self):
        return [piece for block in self.blocks for piece in block.pieces()]

    def member(self, point):
        return any(block.contains(point) for block in self.blocks)

    def count(self, sentence) -> Trichotomy:
        result = Trichotomy.empty()
        for block_id, block in enumerate(self.blocks):
            result = result.merge(block.clopen_count(sentence, block_id))
            if result.is_infinite:
                break
        return result

    @property
    def is_empty(self):
        return not self.blocks

    @property
    def is_finite(self):
        return all(isinstance(b, FinSet) for b in self.blocks)

    def points(self):
        """Members of a finite family."""
        if not self.is_finite:
            raise ValueError(f"family {self.label()} is infinite")
        return tuple(p for b in self.blocks for p in b.points)

    def label(self):
        return self.name or self.to_dsl()

    def to_dsl(self):
        """DSL text for the family as nested binary unions."""
        if not self.blocks:
            return "fin{}"
        text = self.blocks[-1].to_dsl()
        for block in reversed(self.blocks[:-1]):
            text = f"union({block.to_dsl()}, {text})"
        return text

    def describe(self):
        kinds = {}
        for block in self.blocks:
            kinds[type(block).__name__] = kinds.get(type(block).__name__, 0) + 1
        summary = ", ".join(f"{n} {k}" for k, n in kinds.items()) or "empty"
        return f"{self.name or 'family'} [{summary}]"

    def __str__(self):
        return self.label()


def member(family: Family, point) -> bool:
    return family.member(point)


def clopen_count(block: Block, sentence, block_id=None) -> Trichotomy:
    return block.clopen_count(sentence, block_id)


def family_count(family: Family, sentence) -> Trichotomy:
    return family.count(sentence)


def union(*families) -> Family:
    return Family(tuple(b for f in families for b in f.blocks))


def intersect(left: Family, right: Family) -> Family:
    pieces = []
    for a in left.pieces():
        for b in right.pieces():
            pieces.extend(piece_intersect(a, b))
    result = Family(tuple(pieces))
    logger.debug("intersect: %d x %d pieces -> %d blocks",
                 len(left.pieces()), len(right.pieces()), len(result.blocks))
    return result


def difference(left: Family, right: Family) -> Family:
    others = right.pieces()
    pieces = []
    for piece in left.pieces():
        pieces.extend(piece_difference(piece, others))
    return Family(tuple(pieces))


def family_subset(left: Family, right: Family) -> bool:
    others = right.pieces()
    try:
        return all(piece_subset(piece, others) for piece in left.pieces())
    except UnsupportedIntersection as exc:
        raise UnsupportedComparison(str(exc)) from exc


def family_eq(left: Family, right: Family) -> bool:
    if left.blocks == right.blocks:
        return True
    return family_subset(left, right) and family_subset(right, left)
