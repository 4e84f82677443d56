"""Formulas (terms) over variables, tau, the constants 0 and 1 and the connectives.

Text syntax: atoms ``p0 p1 ... tau 0 1``; unary ``-`` (negation) and ``~`` (tilde); binary
``&``, ``|`` and ``->`` binding in that order, ``->`` to the right; ``a <-> b`` abbreviates
``(a -> b) & (b -> a)``.
"""

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Mapping, Set, Tuple

from .errors import FormulaSyntaxError


class Formula:
    """Base class of formula nodes."""

    def __str__(self) -> str:
        return render(self)

    def children(self) -> Tuple["Formula", ...]:
        return ()

    @cached_property
    def degree(self) -> int:
        """Number of ~ occurrences."""
        own = 1 if isinstance(self, Tilde) else 0
        return own + sum(child.degree for child in self.children())

    @cached_property
    def depth(self) -> int:
        return 1 + max((child.depth for child in self.children()), default=-1)

    @cached_property
    def size(self) -> int:
        return 1 + sum(child.size for child in self.children())

    @property
    def is_tilde_free(self) -> bool:
        return self.degree == 0

    def variables(self) -> Set[int]:
        found: Set[int] = set()
        for node in self.subformulas():
            if isinstance(node, Var):
                found.add(node.index)
        return found

    def subformulas(self) -> Iterator["Formula"]:
        """All subformula occurrences, pre-order."""
        stack: List[Formula] = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children()))

    def contains(self, other: "Formula") -> bool:
        return any(node == other for node in self.subformulas())

    def uses_tau(self) -> bool:
        return any(isinstance(node, Tau) for node in self.subformulas())


@dataclass(frozen=True)
class Var(Formula):
    index: int


@dataclass(frozen=True)
class Tau(Formula):
    pass


@dataclass(frozen=True)
class Zero(Formula):
    pass


@dataclass(frozen=True)
class One(Formula):
    pass


@dataclass(frozen=True)
class Neg(Formula):
    body: Formula

    def children(self) -> Tuple[Formula, ...]:
        return (self.body,)


@dataclass(frozen=True)
class Tilde(Formula):
    body: Formula

    def children(self) -> Tuple[Formula, ...]:
        return (self.body,)


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def children(self) -> Tuple[Formula, ...]:
        return (self.left, self.right)


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

    def children(self) -> Tuple[Formula, ...]:
        return (self.left, self.right)


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula

    def children(self) -> Tuple[Formula, ...]:
        return (self.left, self.right)


BINARY = (And, Or, Imp)
UNARY = (Neg, Tilde)

P0, P1, P2 = Var(0), Var(1), Var(2)
TAU = Tau()
TOP = Imp(P0, P0)


def iff(left: Formula, right: Formula) -> Formula:
    return And(Imp(left, right), Imp(right, left))


def conjunction(parts: List[Formula]) -> Formula:
    """Right-nested conjunction; ``TOP`` when empty."""
    if not parts:
        return TOP
    result = parts[-1]
    for part in reversed(parts[:-1]):
        result = And(part, result)
    return result


def rebuild(node: Formula, children: Tuple[Formula, ...]) -> Formula:
    if isinstance(node, UNARY):
        return type(node)(children[0])
    if isinstance(node, BINARY):
        return type(node)(children[0], children[1])
    return node


def substitute(formula: Formula, mapping: Mapping[int, Formula]) -> Formula:
    """Simultaneous substitution of variables."""
    if isinstance(formula, Var):
        return mapping.get(formula.index, formula)
    kids = formula.children()
    if not kids:
        return formula
    return rebuild(formula, tuple(substitute(kid, mapping) for kid in kids))


def replace(alpha: Formula, beta: Formula, gamma: Formula) -> Formula:
    """alpha[beta : gamma]: every occurrence of beta replaced by gamma, outermost first."""
    if alpha == beta:
        return gamma
    kids = alpha.children()
    if not kids:
        return alpha
    return rebuild(alpha, tuple(replace(kid, beta, gamma) for kid in kids))


def outer_tildes(formula: Formula) -> Iterator[Formula]:
    """~-subformulas with an occurrence not in the scope of another ~, left to right."""
    stack = [formula]
    while stack:
        node = stack.pop()
        if isinstance(node, Tilde):
            yield node
            continue
        stack.extend(reversed(node.children()))


_PRECEDENCE = {Imp: 1, Or: 2, And: 3}
_SYMBOL = {Imp: "->", Or: "|", And: "&"}


def render(formula: Formula) -> str:
    """Canonical text; binary subformulas of compound formulas are parenthesized."""

    def inner(node: Formula) -> str:
        text = render(node)
        return f"({text})" if isinstance(node, BINARY) else text

    if isinstance(formula, Var):
        return f"p{formula.index}"
    if isinstance(formula, Tau):
        return "tau"
    if isinstance(formula, Zero):
        return "0"
    if isinstance(formula, One):
        return "1"
    if isinstance(formula, Neg):
        return "-" + inner(formula.body)
    if isinstance(formula, Tilde):
        return "~" + inner(formula.body)
    if isinstance(formula, BINARY):
        return f"{inner(formula.left)} {_SYMBOL[type(formula)]} {inner(formula.right)}"
    raise TypeError(f"not a formula: {formula!r}")


_TOKEN = re.compile(r"\s*(<->|->|&|\||-|~|\(|\)|p\d+|tau|0|1)")


def _tokenize(text: str) -> List[Tuple[str, int]]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if not match:
            offset = len(text[position:]) - len(text[position:].lstrip())
            raise FormulaSyntaxError("unexpected character", position + offset, text)
        tokens.append((match.group(1), match.start(1)))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.position = 0

    def peek(self) -> str:
        return self.tokens[self.position][0] if self.position < len(self.tokens) else ""

    def offset(self) -> int:
        if self.position < len(self.tokens):
            return self.tokens[self.position][1]
        return len(self.text)

    def error(self, message: str) -> FormulaSyntaxError:
        return FormulaSyntaxError(message, self.offset(), self.text)

    def take(self, expected: str = "") -> str:
        token = self.peek()
        if not token or (expected and token != expected):
            raise self.error(f"expected {expected or 'a token'}")
        self.position += 1
        return token

    def parse(self) -> Formula:
        if not self.tokens:
            raise self.error("empty formula")
        result = self.equivalence()
        if self.position != len(self.tokens):
            raise self.error(f"unexpected {self.peek()!r}")
        return result

    def equivalence(self) -> Formula:
        left = self.implication()
        if self.peek() == "<->":
            self.take()
            return iff(left, self.equivalence())
        return left

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.peek() == "->":
            self.take()
            return Imp(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        result = self.conjunction()
        while self.peek() == "|":
            self.take()
            result = Or(result, self.conjunction())
        return result

    def conjunction(self) -> Formula:
        result = self.unary()
        while self.peek() == "&":
            self.take()
            result = And(result, self.unary())
        return result

    def unary(self) -> Formula:
        token = self.peek()
        if token == "-":
            self.take()
            return Neg(self.unary())
        if token == "~":
            self.take()
            return Tilde(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        token = self.peek()
        if token == "(":
            self.take()
            result = self.equivalence()
            self.take(")")
            return result
        if token == "tau":
            self.take()
            return TAU
        if token == "0":
            self.take()
            return Zero()
        if token == "1":
            self.take()
            return One()
        if token.startswith("p"):
            self.take()
            return Var(int(token[1:]))
        raise self.error("expected an atom")


def parse_formula(text: str) -> Formula:
    """Parse formula text.

    Raises:
        FormulaSyntaxError: With the offending position
    """
    return _Parser(text).parse()
