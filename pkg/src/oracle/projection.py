"""Finite-depth oracle: families projected onto their first n coordinates

Cells are counted straight from the block descriptions (flip positions below
the depth, mask consistency of words, explicit array points) and never
through ``clopen_count``, so the oracle can falsify the symbolic engine.
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict

from config.settings import ENUMERATION_CAP_BITS
from src.core.errors import DepthTooLarge
from src.core.sentences import prefix_sentence
from src.core.trichotomy import Trichotomy
from src.core.words import TheoryPoint
from src.families.blocks import Cube, Fan, FanArray, FinSet
from src.utils.validators import validate_depth

logger = logging.getLogger(__name__)


class OracleVerdict(str, Enum):
    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"


def _check_depth(depth):
    valid, msg = validate_depth(depth)
    if not valid:
        raise DepthTooLarge(msg)


def _word_fits(mask, word):
    return all(mask.allows(i, int(b)) for i, b in enumerate(word))


def _consistent_words(mask, depth, block):
    free = mask.free_positions_below(depth)
    if len(free) > ENUMERATION_CAP_BITS:
        raise DepthTooLarge(f"{block} spreads over 2^{len(free)} cells at depth {depth}")
    template = list(mask.expand(depth))
    for bits in itertools.product("01", repeat=len(free)):
        for position, bit in zip(free, bits):
            template[position] = bit
        yield "".join(template)


def _array_point(array: FanArray, word):
    """The single array point that can start with ``word``, if any."""
    found = [i for i, b in enumerate(word) if not array.base.allows(i, int(b))]
    if len(found) != 1 or found[0] not in array.coding_set:
        return None
    g = found[0]
    width = max(g + 1, len(array.base.prefix))
    bits = list(array.base.expand(width).replace("F", "0"))
    for i in range(g):
        bits[i] = word[i]
    bits[g] = word[g]
    tail = array.base.window(width, width + len(array.base.period)).replace("F", "0")
    point = TheoryPoint("".join(bits), tail)
    return point if point.expand(len(word)) == word else None


def _block_cell(block, word) -> Trichotomy:
    n = len(word)
    if isinstance(block, FinSet):
        return Trichotomy.finite(p for p in block.points if p.expand(n) == word)
    if isinstance(block, Fan):
        if block.limit.expand(n) == word:
            return Trichotomy.infinite()
        members = (block.point(i) for i in block.indices_through(n - 1))
        return Trichotomy.finite(p for p in members if p.expand(n) == word)
    if isinstance(block, Cube):
        return Trichotomy.infinite() if _word_fits(block.mask, word) else Trichotomy.empty()
    if isinstance(block, FanArray):
        if _word_fits(block.base, word):
            return Trichotomy.infinite()
        point = _array_point(block, word)
        return Trichotomy.finite([point] if point is not None else [])
    raise TypeError(f"not a block: {block!r}")


def project_cell(family, word) -> Trichotomy:
    """Members of ``family`` starting with ``word``."""
    result = Trichotomy.empty()
    for block_id, block in enumerate(family.blocks):
        cell = _block_cell(block, word)
        if cell.is_infinite:
            return Trichotomy.infinite(block_id)
        result = result.merge(cell)
    return result


def _block_cells(block, depth):
    """(word, Trichotomy) for every cell of ``block`` that is not empty."""
    if isinstance(block, FinSet):
        for p in block.points:
            yield p.expand(depth), Trichotomy.finite([p])
    elif isinstance(block, Fan):
        yield block.limit.expand(depth), Trichotomy.infinite()
        for i in block.indices_through(depth - 1):
            p = block.point(i)
            yield p.expand(depth), Trichotomy.finite([p])
    elif isinstance(block, Cube):
        for word in _consistent_words(block.mask, depth, block):
            yield word, Trichotomy.infinite()
    elif isinstance(block, FanArray):
        for word in _consistent_words(block.base, depth, block):
            yield word, Trichotomy.infinite()
        for g in block.coding_set.first(depth):
            if g >= depth:
                break
            for p in block.points_at(g):
                yield p.expand(depth), Trichotomy.finite([p])
    else:
        raise TypeError(f"not a block: {block!r}")


@dataclass
class DepthProjection:
    depth: int
    cells: Dict[str, Trichotomy] = field(default_factory=dict)  # reachable cells only

    def cell(self, word) -> Trichotomy:
        return self.cells.get(word, Trichotomy.empty())

    @property
    def is_empty(self):
        return not self.cells

    def dump(self):
        return "\n".join(f"{word}\t{self.cells[word].label()}" for word in sorted(self.cells))


def project(family, depth) -> DepthProjection:
    _check_depth(depth)
    projection = DepthProjection(depth)
    for block_id, block in enumerate(family.blocks):
        for word, cell in _block_cells(block, depth):
            if cell.is_infinite:
                cell = Trichotomy.infinite(block_id)
            current = projection.cells.get(word)
            projection.cells[word] = cell if current is None else current.merge(cell)
    logger.debug("projected %s at depth %d: %d cells", family.label(), depth, len(projection.cells))
    return projection


@dataclass(frozen=True)
class OracleAnswer:
    verdict: OracleVerdict
    depth: int  # shortest prefix length deciding the verdict, or the full depth

    def __str__(self):
        return f"{self.verdict.value} at depth {self.depth}"


def oracle_in_closure(point, family, depth) -> OracleAnswer:
    _check_depth(depth)
    for k in range(depth + 1):
        cell = project_cell(family, point.expand(k))
        if cell.is_infinite:
            continue
        if point in cell.points:
            return OracleAnswer(OracleVerdict.YES, k)
        return OracleAnswer(OracleVerdict.NO, k)
    return OracleAnswer(OracleVerdict.INCONCLUSIVE, depth)


def oracle_isolated(family, depth):
    """[(point, shortest isolating prefix)] visible up to ``depth``."""
    _check_depth(depth)
    found = {}
    for k in range(depth + 1):
        for word, cell in project(family, k).cells.items():
            if not cell.is_infinite and len(cell.points) == 1 and cell.points[0] not in found:
                found[cell.points[0]] = word
    return sorted(found.items())


def compare_with_engine(family, depth, exhaustive=None):
    """Cells where the oracle and ``family_count`` disagree, as (word, oracle, engine)."""
    _check_depth(depth)
    if exhaustive is None:
        exhaustive = depth <= 10
    if exhaustive:
        words = ("".join(bits) for bits in itertools.product("01", repeat=depth))
    else:
        words = sorted(project(family, depth).cells)
    mismatches = []
    for word in words:
        oracle = project_cell(family, word)
        engine = family.count(prefix_sentence(word))
        if not oracle.same_as(engine):
            mismatches.append((word, oracle, engine))
    if mismatches:
        logger.error("oracle and engine disagree on %d cells of %s", len(mismatches), family.label())
    return mismatches
