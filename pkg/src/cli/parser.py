"""Session script grammar and parser

A script is a sequence of lines, each either a definition
``let NAME = <family-expr>`` or a command such as ``lgs closure(A)`` or
``oracle-check A --depth 8``. ``#`` starts a comment.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Union

import lark
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from src.core.errors import ParseError, TheoriaError, UndefinedName
from src.core.words import parse_mask, parse_point
from src.families.blocks import Cube, Fan, FanArray, FinSet
from src.families.family import Family

GRAMMAR = r"""
start: _NL? (statement (_NL statement)* _NL?)?

?statement: definition | command

definition: "let" NAME "=" expr
command: cmd (expr ("," expr)*)? option*
!cmd: "closure" | "acc" | "isolated" | "lgs" | "meet" | "join" | "meetprime"
    | "leq" | "decompose" | "lattice" | "algebra" | "cbrank" | "oracle-check"
    | "verify" | "export"
option: "--" NAME optval?
optval: INT | NAME ("," NAME)*

?expr: fin | fan | cube | fanarray | apply | gallery | ref

fin: "fin" "{" (WORD ("," WORD)*)? "}"
fan: "fan" "(" fan_arg ("," fan_arg)* ")"
?fan_arg: "limit" "=" WORD      -> limit_arg
        | "stride" "=" INT      -> stride_arg
        | "offset" "=" INT      -> offset_arg
        | "dev" "=" BITS?       -> dev_arg
        | "withlimit"           -> withlimit_arg
cube: "cube" "(" "mask" "=" WORD ")"
fanarray: "fanarray" "(" array_arg ("," array_arg)* ")"
?array_arg: "base" "=" (cube | WORD) -> base_arg
          | "c" "=" INT              -> start_arg
          | "step" "=" INT           -> step_arg
          | "withbase"               -> withbase_arg
apply: func "(" expr ("," expr)* ")"
!func: "closure" | "acc" | "isolated" | "union" | "intersect" | "difference" | "meetprime"
gallery: "gallery" "(" NAME ("," NAME)? ")"
ref: NAME

WORD: /[F01]*~[F01]+/
BITS: /[01]+/
NAME: /[A-Za-z_][A-Za-z0-9_.\-]*/
COMMENT: /#[^\n]*/
_NL: /(\r?\n[\t ]*(#[^\n]*)?)+/

%import common.INT
%import common.WS_INLINE
%ignore WS_INLINE
%ignore COMMENT
"""

# accepted arguments per command: (fewest, most); None means unbounded
ARITY = {
    "closure": (1, 1), "acc": (1, 1), "isolated": (1, 1), "lgs": (1, 1),
    "cbrank": (1, 1), "algebra": (1, 1), "oracle-check": (1, 1), "export": (1, 1),
    "meet": (2, 2), "join": (2, 2), "meetprime": (2, 2), "leq": (2, 2), "decompose": (2, 2),
    "lattice": (1, None), "verify": (0, 0),
}

OPTIONS = {
    "lattice": {"ops", "format"},
    "algebra": {"generators", "seed"},
    "oracle-check": {"depth"},
    "verify": {"suite", "seeds", "base-seed"},
    "export": {"format"},
}
COMMON_OPTIONS = {"json"}

FUNCTION_ARITY = {
    "closure": (1, 1), "acc": (1, 1), "isolated": (1, 1), "union": (1, None),
    "intersect": (2, 2), "difference": (2, 2), "meetprime": (2, 2),
}


@dataclass
class Literal:
    family: Family


@dataclass
class Ref:
    name: str
    line: int = 0
    column: int = 0


@dataclass
class Apply:
    func: str
    args: List["Expr"]


@dataclass
class GalleryRef:
    case: str
    member: Optional[str] = None


Expr = Union[Literal, Ref, Apply, GalleryRef]


@dataclass
class Definition:
    name: str
    expr: Expr
    line: int = 0


@dataclass
class Command:
    name: str
    args: List[Expr]
    options: Dict[str, object] = field(default_factory=dict)
    line: int = 0


@dataclass
class SessionScript:
    statements: List[Union[Definition, Command]]

    @property
    def definitions(self) -> Dict[str, Expr]:
        return {s.name: s.expr for s in self.statements if isinstance(s, Definition)}

    @property
    def commands(self) -> List[Command]:
        return [s for s in self.statements if isinstance(s, Command)]


def _within(count, bounds):
    low, high = bounds
    return count >= low and (high is None or count <= high)


@lark.v_args(meta=True)
class ScriptBuilder(lark.Transformer):
    """Builds the script AST; block literals are constructed (and validated) here."""

    def start(self, meta, children):
        return SessionScript(list(children))

    def definition(self, meta, children):
        name, expr = children
        return Definition(str(name), expr, meta.line)

    def command(self, meta, children):
        name = children[0]
        args = [c for c in children[1:] if not isinstance(c, tuple)]
        options = dict(c for c in children[1:] if isinstance(c, tuple))
        if not _within(len(args), ARITY[name]):
            raise ParseError(f"{name} takes {_describe(ARITY[name])} argument(s), got {len(args)}",
                             meta.line, meta.column)
        unknown = set(options) - OPTIONS.get(name, set()) - COMMON_OPTIONS
        if unknown:
            raise ParseError(f"{name} has no option(s) {', '.join(sorted(unknown))}",
                             meta.line, meta.column)
        return Command(name, args, options, meta.line)

    def cmd(self, meta, children):
        return str(children[0])

    def func(self, meta, children):
        return str(children[0])

    def option(self, meta, children):
        name = str(children[0])
        return (name, children[1] if len(children) > 1 else True)

    def optval(self, meta, children):
        if len(children) == 1:
            token = children[0]
            return int(token) if token.type == "INT" else str(token)
        return tuple(str(c) for c in children)

    def fin(self, meta, children):
        points = tuple(parse_point(str(w)) for w in children)
        return Literal(Family.of(FinSet(points)) if points else Family.empty())

    def fan(self, meta, children):
        params = dict(children)
        if "limit" not in params:
            raise ParseError("fan needs a limit", meta.line, meta.column)
        return Literal(Family.of(Fan(**params)))

    def limit_arg(self, meta, children):
        return ("limit", parse_point(str(children[0])))

    def stride_arg(self, meta, children):
        return ("stride", int(children[0]))

    def offset_arg(self, meta, children):
        return ("offset", int(children[0]))

    def dev_arg(self, meta, children):
        return ("dev", str(children[0]) if children else "")

    def withlimit_arg(self, meta, children):
        return ("include_limit", True)

    def cube(self, meta, children):
        return Literal(Family.of(Cube(parse_mask(str(children[0])))))

    def fanarray(self, meta, children):
        params = dict(children)
        if "base" not in params:
            raise ParseError("fanarray needs a base", meta.line, meta.column)
        return Literal(Family.of(FanArray(**params)))

    def base_arg(self, meta, children):
        value = children[0]
        if isinstance(value, Literal):
            return ("base", value.family.blocks[0].mask)
        return ("base", parse_mask(str(value)))

    def start_arg(self, meta, children):
        return ("start", int(children[0]))

    def step_arg(self, meta, children):
        return ("step", int(children[0]))

    def withbase_arg(self, meta, children):
        return ("include_base", True)

    def apply(self, meta, children):
        func, args = children[0], list(children[1:])
        if not _within(len(args), FUNCTION_ARITY[func]):
            raise ParseError(f"{func} takes {_describe(FUNCTION_ARITY[func])} argument(s)",
                             meta.line, meta.column)
        return Apply(func, args)

    def gallery(self, meta, children):
        return GalleryRef(str(children[0]), str(children[1]) if len(children) > 1 else None)

    def ref(self, meta, children):
        return Ref(str(children[0]), meta.line, meta.column)


def _describe(bounds):
    low, high = bounds
    if high is None:
        return f"at least {low}"
    return str(low) if low == high else f"{low} to {high}"


_PARSER = lark.Lark(GRAMMAR, parser="lalr", propagate_positions=True)


def _refs(expr):
    if isinstance(expr, Ref):
        yield expr
    elif isinstance(expr, Apply):
        for arg in expr.args:
            yield from _refs(arg)


def _check_names(script: SessionScript):
    defined = set()
    for statement in script.statements:
        exprs = [statement.expr] if isinstance(statement, Definition) else statement.args
        for expr in exprs:
            for ref in _refs(expr):
                if ref.name not in defined:
                    raise UndefinedName(
                        f"{ref.name!r} is used before it is defined (line {ref.line}, column {ref.column})")
        if isinstance(statement, Definition):
            defined.add(statement.name)


def _location(exc: UnexpectedInput, text):
    line, column = getattr(exc, "line", -1), getattr(exc, "column", -1)
    if isinstance(exc, UnexpectedEOF) or line is None or line < 1:
        lines = text.splitlines() or [""]
        return len(lines), len(lines[-1]) + 1
    return line, column


def parse_script(text) -> SessionScript:
    try:
        tree = _PARSER.parse(text)
    except UnexpectedInput as exc:
        line, column = _location(exc, text)
        raise ParseError("unexpected input", line, column) from None
    try:
        script = ScriptBuilder().transform(tree)
    except VisitError as exc:
        if isinstance(exc.orig_exc, ParseError):
            raise exc.orig_exc from None
        if isinstance(exc.orig_exc, TheoriaError):
            meta = getattr(exc.obj, "meta", None)
            line = getattr(meta, "line", None)
            column = getattr(meta, "column", None)
            raise ParseError(str(exc.orig_exc), line, column) from exc.orig_exc
        raise
    _check_names(script)
    return script


def parse_expression(text) -> Expr:
    """Parse a single family expression, as written after ``let X =``."""
    script = parse_script(f"let _ = {text}")
    return script.statements[0].expr


def export_family(family: Family) -> str:
    """DSL text that parses back to an equal family."""
    return family.to_dsl()
