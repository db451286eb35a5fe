"""Result records of the closure engine"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from src.core.sentences import SentenceExpr
from src.core.words import TheoryPoint
from src.families.family import Family

MEMBER = "member"
ACCUMULATION = "accumulation"
SEPARATED = "separated"


@dataclass(frozen=True)
class ClosureCertificate:
    """Why a point is or is not in the closure of a family."""

    point: TheoryPoint
    in_closure: bool
    reason: str
    sentence: Optional[SentenceExpr] = None  # set when separated

    def __bool__(self):
        return self.in_closure

    def to_json(self):
        return {
            "point": str(self.point),
            "inClosure": self.in_closure,
            "reason": self.reason,
            "sentence": str(self.sentence) if self.sentence is not None else None,
        }


@dataclass(frozen=True)
class GeneratingConditions:
    """The four equivalent characterizations of a least generating set."""

    least: bool
    minimal: bool
    isolated_in_generator: bool
    isolated_in_family: bool

    @property
    def agree(self):
        return self.least == self.minimal == self.isolated_in_generator == self.isolated_in_family

    def to_json(self):
        return {
            "least": self.least,
            "minimal": self.minimal,
            "isolatedInGenerator": self.isolated_in_generator,
            "isolatedInFamily": self.isolated_in_family,
            "agree": self.agree,
        }


@dataclass
class GenSetReport:
    family: Family
    isolated: Family
    has_least: bool
    least_gen_set: Optional[Family]
    witnesses: List[Tuple[TheoryPoint, SentenceExpr]] = field(default_factory=list)
    conditions: Optional[GeneratingConditions] = None

    def to_json(self):
        data = {
            "isolated": self.isolated.to_dsl(),
            "hasLeast": self.has_least,
            "leastGenSet": self.least_gen_set.to_dsl() if self.least_gen_set is not None else None,
            "witnesses": [{"point": str(p), "sentence": str(s)} for p, s in self.witnesses],
        }
        if self.conditions is not None:
            data["conditionFlags"] = self.conditions.to_json()
        return data
