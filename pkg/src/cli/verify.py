"""Property suites over gallery and seeded random instances

Each suite checks one group of results (closure additivity, least generating
sets, the semilattice and lattice of closed families, distributivity, the
Boolean algebra of generated subsets, and agreement with the depth oracle).
Instances the engine cannot decide exactly are counted as skipped, never as
failures.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import pandas as pd

from config.settings import (
    DEFAULT_BASE_SEED, EXIT_OK, EXIT_VIOLATION, GALLERY_ORACLE_DEPTH, VERIFY_EXHAUSTIVE_DEPTH,
    VERIFY_LATTICE_CAP, VERIFY_ORACLE_DEPTH, VERIFY_PAIR_OFFSET, VERIFY_SUITES,
)
from src.algebra.boolean import build_algebra, iso_check
from src.closure.engine import (
    acc_points, check_generating_conditions, closure, is_closed, is_in_closure,
    least_generating_set,
)
from src.closure.reports import ACCUMULATION
from src.core.errors import (
    CapExceeded, TheoriaError, UnknownSuite, UnsupportedComparison, UnsupportedIntersection,
)
from src.core.trichotomy import Trichotomy
from src.families.blocks import FanArray, FinSet
from src.families.family import Family, family_eq, family_subset, union
from src.gallery.cases import CUBE0_MASK, FAN0, FAN1, all_cases, get_case
from src.gallery.random_families import (
    make_random_family, make_random_lgs_family, make_random_points,
)
from src.lattice.elements import LatticeElement
from src.lattice.generate import check_lattice_laws, generate_lattice
from src.lattice.operations import (
    check_distributivity, check_finite_extension, check_generation_neighbourhoods,
    check_join_has_lgs, check_order_coherence, decompose, join, leq,
)
from src.oracle.projection import OracleVerdict, compare_with_engine, oracle_in_closure
from src.utils.history import save_verify_run

logger = logging.getLogger(__name__)

SKIPPABLE = (UnsupportedIntersection, UnsupportedComparison, CapExceeded)


@dataclass
class SuiteResult:
    suite: str
    instances: int = 0
    skipped: int = 0
    failures: List[Tuple[str, str]] = field(default_factory=list)  # (instance, message)

    @property
    def passed(self):
        return not self.failures

    def run(self, instance, check: Callable[[], List[str]]):
        self.instances += 1
        try:
            problems = check()
        except SKIPPABLE as exc:
            self.skipped += 1
            logger.info("%s: %s skipped: %s", self.suite, instance, exc)
            return
        except TheoriaError as exc:
            problems = [f"{type(exc).__name__}: {exc}"]
        for problem in problems:
            logger.error("%s: %s: %s", self.suite, instance, problem)
            self.failures.append((instance, problem))


def _gallery_families():
    return [(f"{case.name}/{name}", family)
            for case in all_cases() for name, family in case.families.items()]


def _seeds(count, base_seed):
    return range(base_seed, base_seed + count)


# closure

def _closure_problems(a: Family, b: Family):
    problems = []
    ca, cb = closure(a), closure(b)
    if not family_subset(a, ca):
        problems.append("closure does not contain the family")
    if not is_closed(ca):
        problems.append("closure is not closed")
    if not family_eq(closure(ca), ca):
        problems.append("closure is not idempotent")
    if not family_eq(closure(union(a, b)), union(ca, cb)):
        problems.append("closure does not distribute over the union")
    return problems


def suite_closure(count, base_seed):
    result = SuiteResult("closure")
    gallery = _gallery_families()
    for (label, a), (_, b) in zip(gallery, gallery[1:] + gallery[:1]):
        result.run(f"gallery {label}", lambda a=a, b=b: _closure_problems(a, b))
    for seed in _seeds(count, base_seed):
        result.run(f"seed {seed}", lambda seed=seed: _closure_problems(
            make_random_family(seed), make_random_family(seed + VERIFY_PAIR_OFFSET)))
    return result


# least generating sets

def _lgs_problems(family: Family, expect_least: Optional[bool] = None):
    problems = []
    report = least_generating_set(family)
    for point, sentence in report.witnesses:
        if not family.count(sentence).same_as(Trichotomy.finite([point])):
            problems.append(f"witness {sentence} does not isolate {point}")
    if expect_least is not None and report.has_least != expect_least:
        problems.append(f"hasLeast is {report.has_least}, expected {expect_least}")
    if not report.has_least:
        return problems

    flags = check_generating_conditions(family, report.least_gen_set)
    if not (flags.agree and flags.least):
        problems.append(f"least generating set fails its own conditions: {flags.to_json()}")
    acc = acc_points(family)
    if not acc.is_empty:
        extra = acc.blocks[0].sample(1)[0]
        padded = union(report.least_gen_set, Family.of(FinSet((extra,))))
        flags = check_generating_conditions(family, padded)
        if not flags.agree or flags.least:
            problems.append(f"padding with {extra} gives {flags.to_json()}")
    return problems


def suite_lgs(count, base_seed):
    result = SuiteResult("lgs")
    for label, family in _gallery_families():
        if is_closed(family):
            result.run(f"gallery {label}", lambda family=family: _lgs_problems(family))
    for seed in _seeds(count, base_seed):
        result.run(f"seed {seed}", lambda seed=seed: _lgs_problems(closure(make_random_family(seed))))
        result.run(f"lgs seed {seed}",
                   lambda seed=seed: _lgs_problems(make_random_lgs_family(seed), expect_least=True))
        result.run(f"array seed {seed}", lambda seed=seed: _lgs_problems(
            make_random_lgs_family(seed, kinds=("fin", "fan", "array"))))
    return result


# semilattice of closed families with generators

def _semilattice_problems(a: LatticeElement, b: LatticeElement, extra_seed):
    problems = []
    if not check_join_has_lgs(a, b):
        problems.append("join has no least generating set inside the union of generators")
    joined = join(a, b)
    if not leq(a, joined):
        problems.append("an element is not below its join")
    coherence = check_order_coherence(a, joined)
    if not coherence["coherent"]:
        problems.append(f"order is incoherent: {coherence}")
    parts = decompose(a, joined)
    failing = [k for k, v in parts.conditions(a.generators, joined.generators).items() if not v]
    if failing:
        problems.append(f"decomposition breaks {failing}")
    if not check_generation_neighbourhoods(a, joined):
        problems.append("a lost generator has a finite neighbourhood in the used part")
    finite = LatticeElement(Family.of(FinSet(tuple(make_random_points(extra_seed, 3)))))
    if not check_finite_extension(a, join(a, finite)):
        problems.append("adding finitely many generators is not a finite extension")
    return problems


def _lattice_pairs():
    fan_pair = get_case("fan-pair")
    first = LatticeElement(fan_pair.family("first"), "first")
    second = LatticeElement(fan_pair.family("second"), "second")
    limit = LatticeElement(fan_pair.family("limit"), "limit")
    return [("fan-pair", first, second), ("fan-pair limit", limit, first)]


def suite_semilattice(count, base_seed):
    result = SuiteResult("semilattice")
    for label, a, b in _lattice_pairs():
        result.run(f"gallery {label}", lambda a=a, b=b: _semilattice_problems(a, b, base_seed))
    for seed in _seeds(count, base_seed):
        def check(seed=seed):
            a = LatticeElement(make_random_lgs_family(seed))
            b = LatticeElement(make_random_lgs_family(seed + VERIFY_PAIR_OFFSET))
            return _semilattice_problems(a, b, seed)
        result.run(f"seed {seed}", check)
    return result


# generated lattices

def _lattice_problems(elements):
    lattice = generate_lattice(elements, cap=VERIFY_LATTICE_CAP)
    return check_lattice_laws(lattice)


def suite_lattice(count, base_seed):
    result = SuiteResult("lattice")
    for label, a, b in _lattice_pairs():
        result.run(f"gallery {label}", lambda a=a, b=b: _lattice_problems([a, b]))
    for seed in _seeds(count, base_seed):
        result.run(f"seed {seed}", lambda seed=seed: _lattice_problems(
            [LatticeElement(make_random_lgs_family(seed + k * VERIFY_PAIR_OFFSET)) for k in range(3)]))
    return result


# distributivity of join and meet-prime

def _distributivity_problems(a, b, c):
    report = check_distributivity(a, b, c)
    return [] if report.holds else [f"distributivity fails: {report.sides}"]


def suite_distributivity(count, base_seed):
    result = SuiteResult("distributivity")
    _, first, second = _lattice_pairs()[0]
    limit = _lattice_pairs()[1][1]
    for order in ((first, second, limit), (limit, first, second), (second, limit, first)):
        label = ", ".join(e.label() for e in order)
        result.run(f"gallery {label}", lambda order=order: _distributivity_problems(*order))
    for seed in _seeds(count, base_seed):
        result.run(f"seed {seed}", lambda seed=seed: _distributivity_problems(
            *[LatticeElement(make_random_lgs_family(seed + k * VERIFY_PAIR_OFFSET)) for k in range(3)]))
    return result


# Boolean algebra of generated subsets

def _algebra_problems(family, generators=None, cap=3, seed=DEFAULT_BASE_SEED):
    algebra = build_algebra(family, generators, cap=cap)
    problems = []
    if algebra.size != 2 ** len(algebra.generators):
        problems.append(f"{algebra.size} elements over {len(algebra.generators)} generators")
    report = iso_check(algebra, seed)
    return problems + report.failures


def _algebra_instances():
    fan0 = closure(Family.of(FAN0))
    two_fans = union(fan0, closure(Family.of(FAN1)))
    array = closure(Family.of(FanArray(CUBE0_MASK, start=1, step=4)))
    finite = Family.of(FinSet(FAN0.sample(5)))
    return [
        ("fan0 singletons", lambda: _algebra_problems(fan0, cap=4)),
        ("fan0 ten members", lambda: _algebra_problems(fan0, cap=10)),
        ("finite set", lambda: _algebra_problems(finite, cap=5)),
        ("two fans", lambda: _algebra_problems(
            two_fans, [Family.of(FAN0), Family.of(FAN1)], cap=2)),
        ("array singletons", lambda: _algebra_problems(array, cap=5)),
    ]


def suite_boolean(count, base_seed):
    result = SuiteResult("boolean")
    for label, check in _algebra_instances():
        result.run(f"gallery {label}", check)
    for seed in _seeds(count, base_seed):
        result.run(f"seed {seed}", lambda seed=seed: _algebra_problems(
            make_random_lgs_family(seed), cap=3, seed=seed))
    return result


# oracle agreement

def _checked_points(family, seed):
    points = list(make_random_points(seed, 4))
    for block in family.blocks + acc_points(family).blocks:
        points.extend(block.sample(2))
    return points + [p.flip(k) for p in points[4:] for k in (0, 3)]


def _oracle_problems(family, seed, depth=VERIFY_ORACLE_DEPTH):
    problems = [f"cell {word}: oracle {oracle.label()}, engine {engine.label()}"
                for word, oracle, engine in compare_with_engine(family, VERIFY_EXHAUSTIVE_DEPTH)]
    for point in _checked_points(family, seed):
        certificate = is_in_closure(point, family)
        answer = oracle_in_closure(point, family, depth)
        if certificate.in_closure and answer.verdict == OracleVerdict.NO:
            problems.append(f"{point} is in the closure but the oracle separates it at {answer.depth}")
        if certificate.reason == ACCUMULATION and answer.verdict != OracleVerdict.INCONCLUSIVE:
            problems.append(f"accumulation point {point} got {answer}")
        if (not certificate.in_closure and certificate.sentence.max_index() < depth
                and answer.verdict != OracleVerdict.NO):
            problems.append(f"{point} is separated by {certificate.sentence} but the oracle says {answer}")
    return problems


def suite_oracle(count, base_seed):
    result = SuiteResult("oracle")
    for label, family in _gallery_families():
        result.run(f"gallery {label}", lambda family=family: [
            f"cell {word}: oracle {o.label()}, engine {e.label()}"
            for word, o, e in compare_with_engine(family, GALLERY_ORACLE_DEPTH)])
    for seed in _seeds(count, base_seed):
        result.run(f"seed {seed}", lambda seed=seed: _oracle_problems(make_random_family(seed), seed))
    return result


SUITES: Dict[str, Callable[[int, int], SuiteResult]] = {
    "closure": suite_closure,
    "lgs": suite_lgs,
    "semilattice": suite_semilattice,
    "lattice": suite_lattice,
    "distributivity": suite_distributivity,
    "boolean": suite_boolean,
    "oracle": suite_oracle,
}


@dataclass
class VerifyReport:
    suite: str
    seeds: Optional[int]
    base_seed: int
    results: List[SuiteResult] = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    @property
    def exit_code(self):
        return EXIT_OK if self.passed else EXIT_VIOLATION

    @property
    def failures(self):
        return [(r.suite, instance, message) for r in self.results for instance, message in r.failures]

    def to_frame(self) -> pd.DataFrame:
        rows = [{"suite": r.suite, "instances": r.instances, "skipped": r.skipped,
                 "failures": len(r.failures), "passed": r.passed} for r in self.results]
        return pd.DataFrame(rows, columns=["suite", "instances", "skipped", "failures", "passed"])

    def to_json(self):
        return {
            "suite": self.suite,
            "seeds": self.seeds,
            "baseSeed": self.base_seed,
            "passed": self.passed,
            "suites": self.to_frame().to_dict(orient="records"),
            "failures": [{"suite": s, "instance": i, "message": m} for s, i, m in self.failures],
        }

    def history_entry(self):
        return {
            "suite": self.suite,
            "seeds": self.seeds,
            "base_seed": self.base_seed,
            "passed": self.passed,
            "instances": sum(r.instances for r in self.results),
            "failures": len(self.failures),
            "failed_instances": [{"suite": s, "instance": i} for s, i, _ in self.failures],
        }


def run_verify(suite, seeds=None, base_seed=DEFAULT_BASE_SEED, record=True) -> VerifyReport:
    """Run one suite, or every suite for ``all``; ``seeds`` overrides the per-suite seed counts."""
    if suite != "all" and suite not in SUITES:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    names = list(SUITES) if suite == "all" else [suite]
    report = VerifyReport(suite, seeds, base_seed)
    for name in names:
        count = VERIFY_SUITES[name] if seeds is None else seeds
        logger.info("running %s over %d seeds from %d", name, count, base_seed)
        report.results.append(SUITES[name](count, base_seed))
    if record:
        save_verify_run(report.history_entry())
    return report
