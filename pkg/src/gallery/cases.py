"""Named gallery cases

Each case bundles a few families with the verdicts the engine is expected to
produce on them. ``check`` recomputes every verdict live, together with the
oracle confirmations at the gallery depth.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict

from config.settings import GALLERY_ORACLE_DEPTH
from src.algebra.cantor_bendixson import cb_profile
from src.closure.engine import acc_points, closure, least_generating_set
from src.core.errors import UndefinedName
from src.core.words import Mask, TheoryPoint
from src.families.blocks import Cube, Fan, FanArray, FinSet
from src.families.family import Family, family_eq, intersect, union
from src.lattice.elements import LatticeElement
from src.lattice.operations import meet, meet_prime
from src.oracle.projection import OracleVerdict, oracle_in_closure, oracle_isolated

logger = logging.getLogger(__name__)

ZERO = TheoryPoint("", "0")
ONE_THEN_ZERO = TheoryPoint("1", "0")

FAN0 = Fan(ZERO)                 # t_i = 0^i 1 0~
FAN_B = Fan(ZERO, dev="1")       # s_i = 0^i 1 1 0~
FAN1 = Fan(TheoryPoint("", "1"), offset=2, dev="11")  # 1^(i+2) 0 1 1 0~, far from FAN0
CUBE0_MASK = Mask("", "F0")      # even coordinates free, odd fixed to 0
CUBE0 = Cube(CUBE0_MASK)


@dataclass
class GalleryCase:
    name: str
    summary: str
    families: Dict[str, Family]
    expected: Dict[str, object]
    live_checks: Dict[str, Callable[[int], object]] = field(default_factory=dict, repr=False)

    def family(self, name):
        try:
            return self.families[name]
        except KeyError:
            raise UndefinedName(f"gallery case {self.name!r} has no family {name!r}") from None

    def check(self, depth=GALLERY_ORACLE_DEPTH):
        """{verdict name: (expected, live, matches)}"""
        results = {}
        for key, expected in self.expected.items():
            live = self.live_checks[key](depth)
            results[key] = (expected, live, live == expected)
            if live != expected:
                logger.error("gallery %s: %s expected %r, got %r", self.name, key, expected, live)
        return results

    def passed(self, depth=GALLERY_ORACLE_DEPTH):
        return all(match for _, _, match in self.check(depth).values())


def _has_lgs(family):
    return least_generating_set(family, with_witnesses=False).has_least


def make_basic_case() -> GalleryCase:
    fan_closed = closure(Family.of(FAN0))
    families = {
        "fan0": Family.of(FAN0, name="fan0"),
        "fan0_closed": fan_closed.named("fan0_closed"),
        "cube0": Family.of(CUBE0, name="cube0"),
        "pair": Family.of(FinSet((ZERO, ONE_THEN_ZERO)), name="pair"),
        "two_fans": union(fan_closed, closure(Family.of(FAN1))).named("two_fans"),
    }
    live_checks = {
        "accFan0": lambda d: family_eq(acc_points(families["fan0"]), Family.of(FinSet((ZERO,)))),
        "fanHasLgs": lambda d: _has_lgs(fan_closed),
        "twoFansHasLgs": lambda d: _has_lgs(families["two_fans"]),
        "cubeHasLgs": lambda d: _has_lgs(families["cube0"]),
        "fanRank": lambda d: cb_profile(fan_closed).rank,
        "cubeKernelEmpty": lambda d: cb_profile(families["cube0"]).kernel_empty,
        "oracleCubeIsolated": lambda d: len(oracle_isolated(families["cube0"], d)),
        "oracleLimitInClosure": lambda d: oracle_in_closure(ZERO, families["fan0"], d).verdict
        != OracleVerdict.NO,
    }
    expected = {
        "accFan0": True,
        "fanHasLgs": True,
        "twoFansHasLgs": True,
        "cubeHasLgs": False,
        "fanRank": 2,
        "cubeKernelEmpty": False,
        "oracleCubeIsolated": 0,
        "oracleLimitInClosure": True,
    }
    return GalleryCase("basic", "a fan, its closure, the cube and a finite set",
                       families, expected, live_checks)


def make_fan_pair() -> GalleryCase:
    """Two fans with a common limit and no common members."""
    first = closure(Family.of(FAN0)).named("first")
    second = closure(Family.of(FAN_B)).named("second")
    limit = Family.of(FinSet((ZERO,)))
    a, b = LatticeElement(first, "first"), LatticeElement(second, "second")
    live_checks = {
        "meetPrime": lambda d: family_eq(meet_prime(a, b).family, limit),
        "generatorsMeet": lambda d: intersect(a.generators, b.generators).is_empty,
        "meet": lambda d: family_eq(intersect(first, second), limit),
        "oracleMeetLimit": lambda d: oracle_in_closure(ZERO, intersect(first, second), d).verdict
        == OracleVerdict.YES,
    }
    expected = {"meetPrime": True, "generatorsMeet": True, "meet": True, "oracleMeetLimit": True}
    return GalleryCase("fan-pair", "meet-prime keeps the shared limit the generators miss",
                       {"first": first, "second": second, "limit": limit.named("limit")},
                       expected, live_checks)


def make_intersection_counterexample() -> GalleryCase:
    """Two arrays over the same cube whose closures meet in the cube alone."""
    first = closure(Family.of(FanArray(CUBE0_MASK, start=1, step=4))).named("first")
    second = closure(Family.of(FanArray(CUBE0_MASK, start=3, step=4))).named("second")
    a, b = LatticeElement(first, "first"), LatticeElement(second, "second")
    live_checks = {
        "firstHasLgs": lambda d: a.has_lgs,
        "secondHasLgs": lambda d: b.has_lgs,
        "meetIsBase": lambda d: family_eq(meet(a, b).family, Family.of(CUBE0)),
        "meetHasLgs": lambda d: meet(a, b).has_lgs,
        "oracleMeetIsolated": lambda d: len(oracle_isolated(meet(a, b).family, d)),
    }
    expected = {"firstHasLgs": True, "secondHasLgs": True, "meetIsBase": True,
                "meetHasLgs": False, "oracleMeetIsolated": 0}
    return GalleryCase("array-meet", "closed families with generators whose meet has none",
                       {"first": first, "second": second, "base": Family.of(CUBE0, name="base")},
                       expected, live_checks)


def make_singleton_union_case(count=5) -> GalleryCase:
    """Singletons from the cube: every finite join has generators, their limit family has none."""
    points = CUBE0.sample(count)
    singletons = {f"s{k}": Family.of(FinSet((p,)), name=f"s{k}") for k, p in enumerate(points)}
    joined = union(*singletons.values())
    live_checks = {
        "singletonsHaveLgs": lambda d: all(_has_lgs(f) for f in singletons.values()),
        "joinSize": lambda d: len(joined.points()),
        "joinHasLgs": lambda d: _has_lgs(joined),
        "cubeHasLgs": lambda d: _has_lgs(Family.of(CUBE0)),
    }
    expected = {"singletonsHaveLgs": True, "joinSize": count, "joinHasLgs": True, "cubeHasLgs": False}
    families = dict(singletons, join=joined.named("join"), cube0=Family.of(CUBE0, name="cube0"))
    return GalleryCase("singleton-union", "finite joins of singletons cannot reach the cube",
                       families, expected, live_checks)


CASES = {
    "basic": make_basic_case,
    "fan-pair": make_fan_pair,
    "array-meet": make_intersection_counterexample,
    "singleton-union": make_singleton_union_case,
}


def get_case(name) -> GalleryCase:
    if name not in CASES:
        raise UndefinedName(f"unknown gallery case {name!r}; choose from {sorted(CASES)}")
    return CASES[name]()


def all_cases():
    return [factory() for factory in CASES.values()]
