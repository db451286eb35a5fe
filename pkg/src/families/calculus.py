"""Exact set calculus on flag-free pieces

Fans are handled through the index set of their members lying in another
piece; that set is ultimately periodic, so sampling it across a generous
horizon recovers it exactly. Cubes compare through mask merges, and arrays
through the coding positions they share with the other piece. Pairs the
table cannot settle exactly raise instead of approximating.
"""

import itertools
import logging
from math import ceil, lcm

from config.settings import ENUMERATION_CAP_BITS
from src.core.errors import EnumerationLimit, UnsupportedComparison, UnsupportedIntersection
from src.core.words import PeriodicWord
from .blocks import Cube, Fan, FanArray, FinSet, finite_mask_points
from .indexset import IndexSet

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------- fans

def fan_hits(fan: Fan, piece) -> IndexSet:
    """Indices i whose fan member t_i lies in ``piece``."""
    if isinstance(piece, FinSet):
        return IndexSet.of(i for i in map(fan.index_of, piece.points) if i is not None)
    start, period = PeriodicWord.horizon(fan.limit, *piece.words())
    horizon = 2 * (start + len(fan.dev) + piece.scale() + 2 * period) + 4
    cycle = lcm(period, piece.cycle())
    threshold = max(0, ceil((horizon - fan.offset) / fan.stride))
    return IndexSet.from_predicate(lambda i: piece.contains(fan.point(i)), threshold, cycle)


def fan_restrict(fan: Fan, indices: IndexSet):
    """The fan members with index in ``indices``, as pieces."""
    finite, progressions = indices.progressions()
    pieces = [Fan(fan.limit, fan.stride * step, fan.flip_position(start), fan.dev)
              for start, step in progressions]
    if finite:
        pieces.append(FinSet(tuple(fan.point(i) for i in finite)))
    return pieces


# ---------------------------------------------------------------- cubes

def cube_meet(left: Cube, right: Cube):
    merged = left.mask.merge(right.mask)
    if merged is None:
        return []
    if merged.has_infinite_free():
        return [Cube(merged)]
    return [FinSet(tuple(finite_mask_points(merged, left)))]


def _extra_positions(mask, cube_mask):
    """Positions fixed in ``mask`` but free in ``cube_mask``, or None when infinitely many."""
    start, period = PeriodicWord.horizon(mask, cube_mask)
    extra = [i for i in range(start + period) if cube_mask.is_free(i) and not mask.is_free(i)]
    if any(i >= start for i in extra):
        return None
    return extra


def cube_covered(cube: Cube, cubes) -> bool:
    """Is ``cube`` contained in the union of ``cubes``?

    Only pieces fixing finitely many of the cube's free coordinates can
    cover an open part of it; the others are nowhere dense inside it.
    """
    usable = []
    for other in cubes:
        merged = cube.mask.merge(other.mask)
        if merged is None:
            continue
        extra = _extra_positions(merged, cube.mask)
        if extra is None:
            continue
        if not extra:
            return True
        usable.append((merged, extra))
    if not usable:
        return False
    positions = sorted(set().union(*(extra for _, extra in usable)))
    if len(positions) > ENUMERATION_CAP_BITS:
        raise EnumerationLimit(cube, len(positions), ENUMERATION_CAP_BITS)
    for bits in itertools.product((0, 1), repeat=len(positions)):
        chosen = dict(zip(positions, bits))
        if not any(all(merged.fixed_bit(i) == chosen[i] for i in extra) for merged, extra in usable):
            return False
    return True


# ---------------------------------------------------------------- arrays

def array_pieces(array: FanArray, positions: IndexSet):
    """The array points coded at ``positions``, as pieces."""
    positions = positions & array.coding_set
    finite, progressions = positions.progressions()
    pieces = []
    points = []
    for start, step in progressions:
        candidate = IndexSet.progression(start, step) & array.coding_set
        if candidate.is_finite:
            finite.extend(candidate.elements())
        else:
            pieces.append(FanArray(array.base, start, step))
    for g in finite:
        points.extend(array.points_at(g))
    if points:
        pieces.append(FinSet(tuple(points)))
    return pieces


def remove_points(pieces, removed):
    """Drop finitely many points from a list of pieces."""
    removed = set(removed)
    if not removed:
        return list(pieces)
    result = []
    for piece in pieces:
        if isinstance(piece, FinSet):
            kept = tuple(p for p in piece.points if p not in removed)
            if kept:
                result.append(FinSet(kept))
        elif isinstance(piece, Fan):
            gone = [i for i in map(piece.index_of, removed) if i is not None]
            if gone:
                result.extend(fan_restrict(piece, IndexSet.of(gone).complement()))
            else:
                result.append(piece)
        elif isinstance(piece, FanArray):
            gaps = [g for g in map(piece.gap_of, removed) if g is not None]
            if not gaps:
                result.append(piece)
                continue
            # restart the progression past the last punctured position
            last = max(gaps)
            skip = (last + 1 - piece.start + piece.step - 1) // piece.step
            tail_start = piece.start + max(skip, 0) * piece.step
            head = IndexSet.progression(piece.start, piece.step) - IndexSet.progression(tail_start, piece.step)
            result.extend(array_pieces(FanArray(piece.base, tail_start, piece.step),
                                       IndexSet.progression(tail_start, piece.step)))
            head_points = [p for g in (head & piece.coding_set).elements()
                           for p in piece.points_at(g) if p not in removed]
            if head_points:
                result.append(FinSet(tuple(head_points)))
        else:
            raise UnsupportedComparison(f"cannot puncture {piece} at finitely many points")
    return result


def _cube_profile(array: FanArray, cube: Cube):
    """Classify coding positions g as fully, partly or not covered by a compatible cube."""
    base, mask = array.base, cube.mask
    start, period = PeriodicWord.horizon(base, mask)

    def covers_nothing(g):
        if mask.fixed_bit(g) == base.fixed_bit(g):
            return True
        # free coordinates beyond g are 0 in array points
        return any(base.is_free(p) and mask.at(p) == "1"
                   for p in range(g + 1, max(g + 1, start) + period))

    def covers_all(g):
        return not covers_nothing(g) and not any(
            base.is_free(p) and not mask.is_free(p) for p in range(g))

    threshold = max(array.start, start) + period
    cycle = lcm(period, array.step)
    coding = array.coding_set
    full = IndexSet.from_predicate(lambda g: g in coding and covers_all(g), threshold, cycle)
    partial = IndexSet.from_predicate(
        lambda g: g in coding and not covers_nothing(g) and not covers_all(g), threshold, cycle)
    return full, partial


def array_cover(array: FanArray, piece):
    """(positions whose array points all lie in ``piece``, further array points in ``piece``)."""
    if isinstance(piece, FinSet):
        return IndexSet.empty(), {p for p in piece.points if array.gap_of(p) is not None}

    if isinstance(piece, Fan):
        hits = fan_hits(piece, array)
        if not hits.is_finite:
            raise UnsupportedIntersection(array, piece, "fan members run through the array")
        return IndexSet.empty(), {piece.point(i) for i in hits.elements()}

    if isinstance(piece, Cube):
        conflicts, infinite = array.base.conflicts(piece.mask)
        if conflicts:
            if infinite or len(conflicts) > 1:
                return IndexSet.empty(), set()
            g = conflicts[0]
            return IndexSet.empty(), {p for p in array.points_at(g) if piece.contains(p)}
        full, partial = _cube_profile(array, piece)
        if not partial.is_finite:
            raise UnsupportedIntersection(array, piece, "cube cuts infinitely many coding positions")
        points = {p for g in partial.elements() for p in array.points_at(g) if piece.contains(p)}
        return full, points

    if isinstance(piece, FanArray):
        if piece.base == array.base:
            return array.coding_set & piece.coding_set, set()
        conflicts, infinite = array.base.conflicts(piece.base)
        if not conflicts:
            raise UnsupportedIntersection(array, piece, "bases overlap without being identical")
        if infinite or len(conflicts) > 2:
            return IndexSet.empty(), set()
        points = set()
        for g in conflicts:
            points |= {p for p in array.points_at(g) if piece.contains(p)}
            points |= {p for p in piece.points_at(g) if array.contains(p)}
        return IndexSet.empty(), points

    raise UnsupportedIntersection(array, piece)


# ---------------------------------------------------------------- table

def piece_intersect(left, right):
    """Exact intersection of two pieces as a list of pieces."""
    if isinstance(left, FinSet):
        return [FinSet(tuple(p for p in left.points if right.contains(p)))]
    if isinstance(right, FinSet):
        return piece_intersect(right, left)
    if isinstance(left, Fan):
        return fan_restrict(left, fan_hits(left, right))
    if isinstance(right, Fan):
        return fan_restrict(right, fan_hits(right, left))
    if isinstance(left, Cube) and isinstance(right, Cube):
        return cube_meet(left, right)
    if isinstance(right, FanArray) and not isinstance(left, FanArray):
        left, right = right, left
    full, points = array_cover(left, right)
    return array_pieces(left, full) + [FinSet(tuple(points))]


def piece_difference(piece, others):
    """``piece`` minus the union of ``others``, as a list of pieces."""
    if isinstance(piece, FinSet):
        return [FinSet(tuple(p for p in piece.points if not any(o.contains(p) for o in others)))]

    if isinstance(piece, Fan):
        hits = IndexSet.empty()
        for other in others:
            hits = hits | fan_hits(piece, other)
        return fan_restrict(piece, hits.complement())

    if isinstance(piece, Cube):
        if cube_covered(piece, [o for o in others if isinstance(o, Cube)]):
            return []
        meets = [o for o in others if any(not is_empty_piece(q) for q in piece_intersect(piece, o))]
        if meets:
            raise UnsupportedComparison(f"{piece} minus {meets[0]} is not a finite union of blocks")
        return [piece]

    full, points = IndexSet.empty(), set()
    for other in others:
        covered, extra = array_cover(piece, other)
        full, points = full | covered, points | extra
    rest = piece.coding_set - full
    return remove_points(array_pieces(piece, rest), points)


def is_empty_piece(piece):
    return isinstance(piece, FinSet) and not piece.points


def piece_subset(piece, others) -> bool:
    """Is ``piece`` contained in the union of ``others``?"""
    if isinstance(piece, FinSet):
        return all(any(o.contains(p) for o in others) for p in piece.points)

    if isinstance(piece, Fan):
        hits = IndexSet.empty()
        for other in others:
            hits = hits | fan_hits(piece, other)
        return hits.is_full

    if isinstance(piece, Cube):
        return cube_covered(piece, [o for o in others if isinstance(o, Cube)])

    full = IndexSet.empty()
    for other in others:
        try:
            covered, _ = array_cover(piece, other)
        except UnsupportedIntersection:
            continue
        full = full | covered
    rest = piece.coding_set - full
    if rest.is_finite:
        return all(any(o.contains(p) for o in others)
                   for g in rest.elements() for p in piece.points_at(g))
    for g in rest.first(3):
        if not all(any(o.contains(p) for o in others) for p in piece.points_at(g)):
            return False
    raise UnsupportedComparison(f"cannot decide whether {piece} is covered")
