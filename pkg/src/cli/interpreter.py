"""Session interpreter: evaluates definitions and runs commands of a parsed script"""

import json
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from config.settings import (
    ALGEBRA_GENERATOR_CAP, DEFAULT_BASE_SEED, DEFAULT_LATTICE_OPS, DEFAULT_ORACLE_DEPTH,
    EXIT_OK, EXIT_USAGE, EXIT_VIOLATION,
)
from src.algebra.boolean import build_algebra, iso_check
from src.algebra.cantor_bendixson import cb_profile
from src.closure.engine import (
    acc_points, check_generating_conditions, closure, isolated_points, least_generating_set,
)
from src.core.errors import ParseError, TheoriaError
from src.families.family import Family, difference, intersect, union
from src.gallery.cases import get_case
from src.lattice.elements import LatticeElement
from src.lattice.generate import OPERATIONS, check_lattice_laws, generate_lattice
from src.lattice.operations import decompose, join, leq, meet, meet_prime
from src.oracle.projection import compare_with_engine, oracle_isolated
from src.utils.utils import format_frame, format_table, status_mark
from .parser import Apply, Command, Definition, GalleryRef, Literal, Ref, SessionScript, export_family
from .verify import run_verify

logger = logging.getLogger(__name__)


@dataclass
class Outcome:
    """What one command produced: a JSON payload, its text rendering and whether checks held."""

    payload: dict
    text: str
    ok: bool = True


@dataclass
class Session:
    as_json: bool = False
    echo: Callable[[str], None] = print
    env: Dict[str, Family] = field(default_factory=dict)
    outcomes: List[Outcome] = field(default_factory=list)

    # expressions

    def evaluate(self, expr) -> Family:
        if isinstance(expr, Literal):
            return expr.family
        if isinstance(expr, Ref):
            return self.env[expr.name]
        if isinstance(expr, GalleryRef):
            case = get_case(expr.case)
            name = expr.member or next(iter(case.families))
            return case.family(name)
        if isinstance(expr, Apply):
            args = [self.evaluate(a) for a in expr.args]
            return self._apply(expr.func, args)
        raise TypeError(f"not an expression: {expr!r}")

    def _apply(self, func, args):
        if func == "closure":
            return closure(args[0])
        if func == "acc":
            return acc_points(args[0])
        if func == "isolated":
            return isolated_points(args[0])
        if func == "union":
            return union(*args)
        if func == "intersect":
            return intersect(*args)
        if func == "difference":
            return difference(*args)
        return meet_prime(LatticeElement(args[0]), LatticeElement(args[1])).family

    def element(self, expr) -> LatticeElement:
        name = expr.name if isinstance(expr, Ref) else None
        return LatticeElement(self.evaluate(expr), name)

    # commands

    def run(self, script: SessionScript) -> int:
        for statement in script.statements:
            try:
                if isinstance(statement, Definition):
                    self.define(statement)
                    continue
                self.run_command(statement)
            except TheoriaError as exc:
                logger.error("line %d: %s failed: %s", statement.line, statement.name, exc)
                self.echo(f"❌ line {statement.line}: {statement.name}: {exc}")
                return EXIT_USAGE
        return EXIT_OK if all(o.ok for o in self.outcomes) else EXIT_VIOLATION

    def run_command(self, command: Command) -> int:
        outcome = self.execute(command)
        self.outcomes.append(outcome)
        self.emit(command, outcome)
        return EXIT_OK if outcome.ok else EXIT_VIOLATION

    def define(self, definition: Definition):
        family = self.evaluate(definition.expr).named(definition.name)
        self.env[definition.name] = family
        logger.debug("defined %s = %s", definition.name, family.describe())

    def emit(self, command: Command, outcome: Outcome):
        # the lgs report is always printed as JSON
        if self.as_json or command.options.get("json") or command.name == "lgs":
            self.echo(json.dumps(outcome.payload, indent=2))
        else:
            self.echo(outcome.text)

    def execute(self, command: Command) -> Outcome:
        handler = getattr(self, "cmd_" + command.name.replace("-", "_"))
        return handler(command)

    def _family_outcome(self, command, family):
        payload = {"command": command.name, "family": export_family(family)}
        return Outcome(payload, format_table(command.name, [("family", export_family(family))]))

    def cmd_closure(self, command):
        return self._family_outcome(command, closure(self.evaluate(command.args[0])))

    def cmd_acc(self, command):
        return self._family_outcome(command, acc_points(self.evaluate(command.args[0])))

    def cmd_isolated(self, command):
        return self._family_outcome(command, isolated_points(self.evaluate(command.args[0])))

    def cmd_lgs(self, command):
        family = self.evaluate(command.args[0])
        report = least_generating_set(family)
        if report.has_least:
            report.conditions = check_generating_conditions(family, report.least_gen_set)
        ok = report.conditions is None or report.conditions.agree
        return Outcome(report.to_json(), json.dumps(report.to_json(), indent=2), ok)

    def _binary(self, command, operation):
        a, b = (self.element(e) for e in command.args)
        result = operation(a, b)
        payload = {"command": command.name, "family": export_family(result.family),
                   "hasLgs": result.has_lgs}
        rows = [("family", payload["family"]), ("has lgs", status_mark(result.has_lgs))]
        return Outcome(payload, format_table(f"{command.name} {a.label()} {b.label()}", rows))

    def cmd_meet(self, command):
        return self._binary(command, meet)

    def cmd_join(self, command):
        return self._binary(command, join)

    def cmd_meetprime(self, command):
        return self._binary(command, meet_prime)

    def cmd_leq(self, command):
        a, b = (self.element(e) for e in command.args)
        below = leq(a, b)
        return Outcome({"command": "leq", "leq": below},
                       format_table(f"leq {a.label()} {b.label()}", [("leq", below)]))

    def cmd_decompose(self, command):
        a, b = (self.element(e) for e in command.args)
        parts = decompose(a, b)
        conditions = parts.conditions(a.generators, b.generators)
        payload = dict(parts.to_json(), conditions=conditions)
        rows = [("shared", payload["shared"]), ("used", payload["used"]),
                ("unused", payload["unused"])]
        rows += [(name, status_mark(ok)) for name, ok in conditions.items()]
        return Outcome(payload, format_table(f"decompose {a.label()} {b.label()}", rows),
                       all(conditions.values()))

    def cmd_lattice(self, command):
        elements = [self.element(e) for e in command.args]
        ops = command.options.get("ops", DEFAULT_LATTICE_OPS)
        ops = (ops,) if isinstance(ops, str) else ops
        unknown = set(ops) - set(OPERATIONS)
        if unknown:
            raise ParseError(f"unknown lattice operation(s) {sorted(unknown)}", command.line)
        lattice = generate_lattice(elements, ops)
        failures = check_lattice_laws(lattice) if {"join", "meet_prime"} <= set(ops) else []
        payload = dict(lattice.to_json(), lawFailures=failures)
        fmt = command.options.get("format", "table")
        if fmt == "dot":
            text = lattice.to_dot()
        elif fmt == "json":
            text = lattice.dumps()
        else:
            rows = [("elements", len(lattice)), ("operations", ", ".join(ops)),
                    ("laws", status_mark(not failures))]
            rows += [(lattice.label(i), e.family.to_dsl()) for i, e in enumerate(lattice.elements)]
            text = "\n".join([format_table("lattice", rows)]
                             + [format_frame(op, lattice.op_table(op)) for op in ops])
        return Outcome(payload, text, not failures)

    def cmd_algebra(self, command):
        family = self.evaluate(command.args[0])
        cap = command.options.get("generators", ALGEBRA_GENERATOR_CAP)
        algebra = build_algebra(family, cap=cap)
        report = iso_check(algebra, command.options.get("seed", DEFAULT_BASE_SEED))
        payload = {"command": "algebra", "size": algebra.size,
                   "generators": [g.to_dsl() for g in algebra.generators],
                   "elements": algebra.to_json(),
                   "iso": {"pairsChecked": report.pairs_checked, "exhaustive": report.exhaustive,
                           "failures": report.failures}}
        rows = [("elements", algebra.size), ("generators", len(algebra.generators)),
                ("pairs checked", report.pairs_checked), ("isomorphism", status_mark(report.ok))]
        return Outcome(payload, format_table("algebra", rows), report.ok)

    def cmd_cbrank(self, command):
        profile = cb_profile(self.evaluate(command.args[0]))
        rows = [("rank", profile.rank), ("kernel empty", profile.kernel_empty)]
        rows += [(f"step {k}", f.to_dsl()) for k, f in enumerate(profile.chain)]
        return Outcome(dict(profile.to_json(), command="cbrank"), format_table("cbrank", rows))

    def cmd_oracle_check(self, command):
        family = self.evaluate(command.args[0])
        depth = command.options.get("depth", DEFAULT_ORACLE_DEPTH)
        mismatches = compare_with_engine(family, depth)
        isolated = oracle_isolated(family, depth)
        payload = {
            "command": "oracle-check",
            "depth": depth,
            "mismatches": [{"prefix": w, "oracle": o.label(), "engine": e.label()}
                           for w, o, e in mismatches],
            "isolated": [{"point": str(p), "prefix": w} for p, w in isolated],
        }
        rows = [("depth", depth), ("agreement", status_mark(not mismatches)),
                ("isolated seen", len(isolated))]
        rows += [(str(p), w) for p, w in isolated]
        return Outcome(payload, format_table("oracle-check", rows), not mismatches)

    def cmd_verify(self, command):
        report = run_verify(command.options.get("suite", "all"),
                            command.options.get("seeds"),
                            command.options.get("base-seed", DEFAULT_BASE_SEED))
        text = format_frame(f"verify {report.suite}", report.to_frame())
        if report.failures:
            text += "\n" + "\n".join(f"❌ {s} {i}: {m}" for s, i, m in report.failures)
        return Outcome(report.to_json(), text, report.passed)

    def cmd_export(self, command):
        family = self.evaluate(command.args[0])
        fmt = command.options.get("format", "dsl")
        payload = {"name": family.name, "dsl": export_family(family),
                   "blocks": [b.to_dsl() for b in family.blocks]}
        if fmt == "json":
            text = json.dumps(payload, indent=2)
        elif fmt == "dot":
            text = derivative_dot(family)
        elif fmt == "dsl":
            text = export_family(family)
        else:
            raise ParseError(f"unknown export format {fmt!r}", command.line)
        return Outcome(payload, text)


def derivative_dot(family: Family):
    """DOT graph of the derivative chain: each family points to its accumulation points."""
    chain = cb_profile(family).chain
    lines = ["digraph derivatives {", "\trankdir = BT;"]
    for k, step in enumerate(chain):
        label = step.to_dsl().replace('"', "'")
        lines.append(f'\t"{k}" [label="{label}"];')
    for k in range(1, len(chain)):
        lines.append(f'\t"{k}" -> "{k - 1}";')
    lines.append("}")
    return "\n".join(lines)


def run_script(script: SessionScript, as_json=False, echo=print) -> int:
    return Session(as_json=as_json, echo=echo).run(script)
