"""Closed families as lattice elements"""

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from src.closure.engine import is_closed, least_generating_set
from src.closure.reports import GenSetReport
from src.core.errors import NotClosed
from src.families.family import Family, family_eq


@dataclass(eq=False)
class LatticeElement:
    family: Family
    name: Optional[str] = None

    def __post_init__(self):
        if not is_closed(self.family):
            raise NotClosed(f"lattice elements must be closed: {self.family.label()}")

    @cached_property
    def lgs(self) -> GenSetReport:
        return least_generating_set(self.family, with_witnesses=False)

    @property
    def has_lgs(self):
        return self.lgs.has_least

    @property
    def generators(self) -> Optional[Family]:
        return self.lgs.least_gen_set

    def same_as(self, other: "LatticeElement"):
        return family_eq(self.family, other.family)

    def label(self):
        return self.name or self.family.to_dsl()

    def __str__(self):
        return self.label()
