"""Exact size classification of a neighbourhood's intersection with a family

A finite result always knows its exact size. Up to ``LISTED_MEMBER_CAP``
members it lists them; beyond that it keeps them as finite masks (cells),
which still support exact union and intersection counts.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from config.settings import LISTED_MEMBER_CAP
from .words import Mask

EMPTY = "empty"
FINITE = "finite"
INFINITE = "infinite"


def union_size(cells) -> int:
    """Number of points in a union of finite masks."""
    cells = list(cells)
    if all(cell.finite_size() == 1 for cell in cells):
        return len(set(cells))
    total = 0
    for i, cell in enumerate(cells):
        overlaps = [m for m in (cell.merge(other) for other in cells[i + 1:]) if m is not None]
        total += cell.finite_size() - union_size(overlaps)
    return total


@dataclass(frozen=True)
class Trichotomy:
    kind: str
    points: Tuple = ()
    witness: Optional[int] = None  # id of a block certifying infinitude
    size: int = 0
    cells: Tuple = ()  # set only when the members are too many to list

    @classmethod
    def empty(cls):
        return cls(EMPTY)

    @classmethod
    def finite(cls, points=(), cells=()):
        cells = set(cells) | {Mask.of_point(p) for p in points}
        size = union_size(cells)
        if not size:
            return cls(EMPTY)
        if size <= LISTED_MEMBER_CAP:
            listed = {p for cell in cells for p in cell.members()}
            return cls(FINITE, tuple(sorted(listed)), size=size)
        return cls(FINITE, (), size=size, cells=tuple(sorted(cells)))

    @classmethod
    def infinite(cls, witness=None):
        return cls(INFINITE, (), witness)

    @property
    def is_empty(self):
        return self.kind == EMPTY

    @property
    def is_finite(self):
        return self.kind != INFINITE

    @property
    def is_infinite(self):
        return self.kind == INFINITE

    @property
    def is_listed(self):
        return not self.cells

    def _cells(self):
        return self.cells + tuple(Mask.of_point(p) for p in self.points)

    def merge(self, other: "Trichotomy") -> "Trichotomy":
        if self.is_infinite:
            return self
        if other.is_infinite:
            return other
        return Trichotomy.finite(self.points + other.points, self.cells + other.cells)

    def same_as(self, other: "Trichotomy") -> bool:
        """Equality ignoring which block witnesses infinitude."""
        if self.is_infinite or other.is_infinite:
            return self.is_infinite and other.is_infinite
        if self.size != other.size:
            return False
        if self.is_listed and other.is_listed:
            return self.points == other.points
        # equal sizes: the sets agree iff their intersection is as large
        shared = [m for a in self._cells() for b in other._cells()
                  for m in (a.merge(b),) if m is not None]
        return union_size(shared) == self.size

    def label(self):
        if self.is_infinite:
            return "INF"
        if self.is_empty:
            return "EMPTY"
        return f"FINITE:{self.size}"

    def __str__(self):
        if self.kind == FINITE and self.is_listed:
            return f"Finite([{', '.join(str(p) for p in self.points)}])"
        if self.kind == FINITE:
            return f"Finite({self.size} members)"
        return self.kind.capitalize()
