"""Ultimately periodic words: theory points and cube masks

A word is stored as ``prefix`` followed by ``period`` repeated forever. Every
instance is kept in canonical form (primitive period, shortest prefix), so two
instances denote the same infinite word exactly when they compare equal.
"""

import itertools
from dataclasses import dataclass
from math import lcm
from typing import ClassVar, Optional, Tuple

from .errors import MalformedMask, MalformedPoint


def primitive_root(period):
    """Shortest word whose power is ``period``."""
    n = len(period)
    for size in range(1, n + 1):
        if n % size == 0 and period[:size] * (n // size) == period:
            return period[:size]
    return period


def canonical_word(prefix, period):
    period = primitive_root(period)
    # absorb trailing prefix symbols into a rotated period
    while prefix and prefix[-1] == period[-1]:
        prefix = prefix[:-1]
        period = period[-1] + period[:-1]
    return prefix, period


@dataclass(frozen=True, order=True)
class PeriodicWord:
    prefix: str
    period: str

    ALPHABET: ClassVar[str] = "01"
    ERROR: ClassVar[type] = MalformedPoint

    def __post_init__(self):
        if not self.period:
            raise self.ERROR(f"empty period in {self.prefix!r}~")
        bad = set(self.prefix + self.period) - set(self.ALPHABET)
        if bad:
            raise self.ERROR(f"symbols {sorted(bad)} not in alphabet {self.ALPHABET!r}")
        prefix, period = canonical_word(self.prefix, self.period)
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "period", period)

    def at(self, i):
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def expand(self, n):
        """First ``n`` symbols."""
        if n <= len(self.prefix):
            return self.prefix[:n]
        rest = n - len(self.prefix)
        reps = rest // len(self.period) + 1
        return self.prefix + (self.period * reps)[:rest]

    def window(self, start, stop):
        return "".join(self.at(i) for i in range(start, stop))

    @staticmethod
    def horizon(*words):
        """(start, period) beyond which all ``words`` are jointly periodic."""
        start = max((len(w.prefix) for w in words), default=0)
        period = lcm(*(len(w.period) for w in words)) if words else 1
        return start, period

    def first_difference(self, other) -> Optional[int]:
        start, period = PeriodicWord.horizon(self, other)
        for i in range(start + period):
            if self.at(i) != other.at(i):
                return i
        return None

    def __str__(self):
        return f"{self.prefix}~{self.period}"


@dataclass(frozen=True, order=True)
class TheoryPoint(PeriodicWord):
    """A complete theory: bit i says whether basis sentence P_i belongs to it."""

    def bit(self, i):
        return int(self.at(i))

    def flip(self, i):
        """The point differing from this one exactly at coordinate ``i``."""
        start = max(len(self.prefix), i + 1)
        word = self.expand(start)
        word = word[:i] + ("1" if word[i] == "0" else "0") + word[i + 1:]
        return TheoryPoint(word, self.window(start, start + len(self.period)))


def normalize_point(prefix, period) -> TheoryPoint:
    return TheoryPoint(prefix, period)


def bit_at(point: TheoryPoint, i) -> int:
    return point.bit(i)


@dataclass(frozen=True)
class Equal:
    def __str__(self):
        return "Equal"


@dataclass(frozen=True)
class FirstDifference:
    index: int

    def __str__(self):
        return f"FirstDifference({self.index})"


def point_compare(p: TheoryPoint, q: TheoryPoint):
    index = p.first_difference(q)
    return Equal() if index is None else FirstDifference(index)


def parse_point(text) -> TheoryPoint:
    text = text.strip()
    if text.count("~") != 1:
        raise MalformedPoint(f"point {text!r} must look like prefix~period")
    prefix, period = text.split("~")
    return TheoryPoint(prefix, period)


def format_point(point) -> str:
    return str(point)


@dataclass(frozen=True, order=True)
class Mask(PeriodicWord):
    """Per-coordinate constraint: F (free), 0 or 1 (fixed)."""

    ALPHABET: ClassVar[str] = "F01"
    ERROR: ClassVar[type] = MalformedMask

    def is_free(self, i):
        return self.at(i) == "F"

    def fixed_bit(self, i) -> Optional[int]:
        symbol = self.at(i)
        return None if symbol == "F" else int(symbol)

    def allows(self, i, bit):
        symbol = self.at(i)
        return symbol == "F" or int(symbol) == bit

    def has_infinite_free(self):
        return "F" in self.period

    def free_positions_below(self, n):
        return [i for i in range(n) if self.is_free(i)]

    def violations(self, point: TheoryPoint) -> Tuple[list, bool]:
        """Violating positions through two joint periods, and whether there are infinitely many.

        When the set is infinite at least two positions are listed.
        """
        start, period = PeriodicWord.horizon(self, point)
        found = [i for i in range(start + 2 * period) if not self.allows(i, point.bit(i))]
        infinite = any(i >= start for i in found)
        return found, infinite

    def consistent(self, point: TheoryPoint):
        start, period = PeriodicWord.horizon(self, point)
        return all(self.allows(i, point.bit(i)) for i in range(start + period))

    def merge(self, other: "Mask") -> Optional["Mask"]:
        """Coordinatewise conjunction, or None when the masks conflict somewhere."""
        start, period = PeriodicWord.horizon(self, other)
        merged = []
        for i in range(start + period):
            a, b = self.at(i), other.at(i)
            if a == "F":
                merged.append(b)
            elif b == "F" or a == b:
                merged.append(a)
            else:
                return None
        return Mask("".join(merged[:start]), "".join(merged[start:]))

    def conflicts(self, other: "Mask") -> Tuple[list, bool]:
        """Positions fixed differently in the two masks (listed below the horizon)."""
        start, period = PeriodicWord.horizon(self, other)
        found = []
        for i in range(start + period):
            a, b = self.at(i), other.at(i)
            if a != "F" and b != "F" and a != b:
                found.append(i)
        return found, any(i >= start for i in found)

    def zero_fill(self) -> TheoryPoint:
        """The point setting every free coordinate to 0."""
        return TheoryPoint(self.prefix.replace("F", "0"), self.period.replace("F", "0"))

    @classmethod
    def of_point(cls, point: TheoryPoint) -> "Mask":
        return cls(point.prefix, point.period)

    def finite_size(self):
        """Number of points allowed by a mask whose period has no free coordinate."""
        return 2 ** self.prefix.count("F")

    def members(self):
        """The points allowed by a mask whose period has no free coordinate."""
        free = [i for i, symbol in enumerate(self.prefix) if symbol == "F"]
        for bits in itertools.product("01", repeat=len(free)):
            word = list(self.prefix)
            for position, bit in zip(free, bits):
                word[position] = bit
            yield TheoryPoint("".join(word), self.period)


def parse_mask(text) -> Mask:
    text = text.strip()
    if text.count("~") != 1:
        raise MalformedMask(f"mask {text!r} must look like prefix~period")
    prefix, period = text.split("~")
    return Mask(prefix, period)
