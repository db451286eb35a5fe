"""Sentence expressions over the basis atoms P_i

A sentence is a finite boolean combination of atoms; it denotes a clopen set
of theory points that depends only on coordinates up to ``max_index``.
"""

from dataclasses import dataclass
from typing import Callable, Optional, Tuple


class SentenceExpr:
    def evaluate(self, valuation: Callable[[int], int]) -> bool:
        raise NotImplementedError

    def max_index(self) -> int:
        """Largest atom index, -1 for a constant sentence."""
        raise NotImplementedError

    def atoms(self) -> frozenset:
        raise NotImplementedError

    def substitute(self, fixed: Callable[[int], Optional[int]]) -> "SentenceExpr":
        """Partially evaluate with the atoms ``fixed`` knows about."""
        raise NotImplementedError

    def __and__(self, other):
        return And((self, other))

    def __or__(self, other):
        return Or((self, other))

    def __invert__(self):
        return Not(self)


@dataclass(frozen=True)
class Const(SentenceExpr):
    value: bool

    def evaluate(self, valuation):
        return self.value

    def max_index(self):
        return -1

    def atoms(self):
        return frozenset()

    def substitute(self, fixed):
        return self

    def __str__(self):
        return "TRUE" if self.value else "FALSE"


TRUE = Const(True)
FALSE = Const(False)


@dataclass(frozen=True)
class Atom(SentenceExpr):
    index: int

    def evaluate(self, valuation):
        return bool(valuation(self.index))

    def max_index(self):
        return self.index

    def atoms(self):
        return frozenset((self.index,))

    def substitute(self, fixed):
        bit = fixed(self.index)
        return self if bit is None else Const(bool(bit))

    def __str__(self):
        return f"P_{self.index}"


@dataclass(frozen=True)
class Not(SentenceExpr):
    arg: SentenceExpr

    def evaluate(self, valuation):
        return not self.arg.evaluate(valuation)

    def max_index(self):
        return self.arg.max_index()

    def atoms(self):
        return self.arg.atoms()

    def substitute(self, fixed):
        inner = self.arg.substitute(fixed)
        if isinstance(inner, Const):
            return Const(not inner.value)
        return Not(inner)

    def __str__(self):
        return f"NOT {self.arg}" if isinstance(self.arg, (Atom, Const)) else f"NOT ({self.arg})"


@dataclass(frozen=True)
class And(SentenceExpr):
    args: Tuple[SentenceExpr, ...]

    def evaluate(self, valuation):
        return all(a.evaluate(valuation) for a in self.args)

    def max_index(self):
        return max((a.max_index() for a in self.args), default=-1)

    def atoms(self):
        return frozenset().union(*(a.atoms() for a in self.args))

    def substitute(self, fixed):
        kept = []
        for a in self.args:
            a = a.substitute(fixed)
            if a == FALSE:
                return FALSE
            if a != TRUE:
                kept.append(a)
        if not kept:
            return TRUE
        return kept[0] if len(kept) == 1 else And(tuple(kept))

    def __str__(self):
        if not self.args:
            return "TRUE"
        return " AND ".join(_wrap(a) for a in self.args)


@dataclass(frozen=True)
class Or(SentenceExpr):
    args: Tuple[SentenceExpr, ...]

    def evaluate(self, valuation):
        return any(a.evaluate(valuation) for a in self.args)

    def max_index(self):
        return max((a.max_index() for a in self.args), default=-1)

    def atoms(self):
        return frozenset().union(*(a.atoms() for a in self.args))

    def substitute(self, fixed):
        kept = []
        for a in self.args:
            a = a.substitute(fixed)
            if a == TRUE:
                return TRUE
            if a != FALSE:
                kept.append(a)
        if not kept:
            return FALSE
        return kept[0] if len(kept) == 1 else Or(tuple(kept))

    def __str__(self):
        if not self.args:
            return "FALSE"
        return " OR ".join(_wrap(a) for a in self.args)


def _wrap(expr):
    return f"({expr})" if isinstance(expr, (And, Or)) else str(expr)


def literal(index, bit) -> SentenceExpr:
    return Atom(index) if bit else Not(Atom(index))


def prefix_sentence(word) -> SentenceExpr:
    """Conjunction of literals fixing the first len(word) coordinates."""
    if not word:
        return TRUE
    lits = tuple(literal(i, int(b)) for i, b in enumerate(word))
    return lits[0] if len(lits) == 1 else And(lits)


def satisfies(point, sentence: SentenceExpr) -> bool:
    return sentence.evaluate(point.bit)


def satisfiable_under(sentence: SentenceExpr, fixed: Callable[[int], Optional[int]]) -> bool:
    """Is ``sentence`` true for some assignment agreeing with ``fixed``?

    ``fixed(i)`` returns the forced bit of atom i or None when it is free.
    """
    expr = sentence.substitute(fixed)
    if isinstance(expr, Const):
        return expr.value
    index = min(expr.atoms())
    for bit in (0, 1):
        branch = expr.substitute(lambda i, _b=bit: _b if i == index else None)
        if satisfiable_under(branch, lambda i: None):
            return True
    return False
