"""Cantor-Bendixson derivative chains of families"""

from dataclasses import dataclass
from typing import List, Optional

from config.settings import CB_MAX_STEPS
from src.closure.engine import acc_points
from src.core.errors import CapExceeded
from src.families.family import Family, family_eq


@dataclass
class CBProfile:
    chain: List[Family]
    rank: Optional[int]  # index of the first entry equal to its own derivative

    @property
    def kernel(self) -> Family:
        return self.chain[-1]

    @property
    def kernel_empty(self):
        return self.kernel.is_empty

    def to_json(self):
        return {"chain": [f.to_dsl() for f in self.chain], "rank": self.rank,
                "kernelEmpty": self.kernel_empty}


def cb_profile(family: Family, max_steps=CB_MAX_STEPS) -> CBProfile:
    chain = [family]
    while True:
        current = chain[-1]
        derived = acc_points(current)
        if family_eq(derived, current):
            if derived.is_empty:
                return CBProfile(chain, len(chain) - 1)
            chain.append(derived)
            return CBProfile(chain, len(chain) - 2)
        if len(chain) > max_steps:
            raise CapExceeded(f"derivative chain did not stabilize in {max_steps} steps",
                              partial=CBProfile(chain, None))
        chain.append(derived)
