"""Ultimately periodic subsets of the natural numbers

Fan indices, flip positions and fan-array coding positions all range over such
sets; storing them as canonical periodic bit words makes equality structural
and the boolean operations exact.
"""

from dataclasses import dataclass
from typing import ClassVar

from src.core.errors import MalformedBlock
from src.core.words import PeriodicWord


@dataclass(frozen=True, order=True)
class IndexSet(PeriodicWord):
    ERROR: ClassVar[type] = MalformedBlock

    @classmethod
    def from_predicate(cls, predicate, threshold, period):
        """Sample ``predicate`` knowing it is periodic from ``threshold`` on."""
        head = "".join("1" if predicate(i) else "0" for i in range(threshold))
        cycle = "".join("1" if predicate(i) else "0" for i in range(threshold, threshold + period))
        return cls(head, cycle)

    @classmethod
    def empty(cls):
        return cls("", "0")

    @classmethod
    def full(cls):
        return cls("", "1")

    @classmethod
    def of(cls, members):
        members = sorted(set(members))
        if not members:
            return cls.empty()
        head = ["0"] * (members[-1] + 1)
        for i in members:
            head[i] = "1"
        return cls("".join(head), "0")

    @classmethod
    def progression(cls, start, step):
        cycle = "1" + "0" * (step - 1)
        return cls("0" * start, cycle)

    def __contains__(self, i):
        return i >= 0 and self.at(i) == "1"

    def _combine(self, other, op):
        start, period = PeriodicWord.horizon(self, other)
        bits = ["1" if op(self.at(i) == "1", other.at(i) == "1") else "0"
                for i in range(start + period)]
        return IndexSet("".join(bits[:start]), "".join(bits[start:]))

    def __or__(self, other):
        return self._combine(other, lambda a, b: a or b)

    def __and__(self, other):
        return self._combine(other, lambda a, b: a and b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a and not b)

    def complement(self):
        flip = str.maketrans("01", "10")
        return IndexSet(self.prefix.translate(flip), self.period.translate(flip))

    @property
    def is_empty(self):
        return "1" not in self.prefix and "1" not in self.period

    @property
    def is_finite(self):
        return "1" not in self.period

    @property
    def is_full(self):
        return "0" not in self.prefix and "0" not in self.period

    def elements(self):
        """Members of a finite set, ascending."""
        if not self.is_finite:
            raise ValueError("infinite index set has no finite element list")
        return [i for i, b in enumerate(self.prefix) if b == "1"]

    def first(self, count):
        found, i = [], 0
        if self.is_empty:
            return found
        while len(found) < count:
            if i in self:
                found.append(i)
            elif self.is_finite and i >= len(self.prefix):
                break
            i += 1
        return found

    def progressions(self):
        """Split into (finite members, [(start, step), ...]) covering the set exactly."""
        threshold, step = len(self.prefix), len(self.period)
        finite = {i for i, b in enumerate(self.prefix) if b == "1"}
        progs = []
        for r, b in enumerate(self.period):
            if b != "1":
                continue
            start = threshold + r
            while start - step >= 0 and (start - step) in finite:
                start -= step
                finite.discard(start)
            progs.append((start, step))
        return sorted(finite), progs
