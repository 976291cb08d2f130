"""Bracket-term syntax: AST, recursive-descent parser, printer, evaluator.

Grammar (whitespace ignored everywhere):

    term     := atom | term "+" atom | term "-" atom
    atom     := factor | rational "*" atom
    factor   := gen | "[" term "," term "]" | "(" term ")"
    gen      := "g" digits
    rational := integer | integer "/" positive-integer

"*" binds tighter than "+"/"-"; brackets take two full terms, so there is
no precedence ambiguity inside "[ , ]".  Scalars appear only as prefixes
("1/2*[g1,g2]"), never as standalone summands.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .errors import TermSyntaxError


@dataclass(frozen=True)
class Generator:
    index: int


@dataclass(frozen=True)
class Bracket:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Scale:
    coeff: Fraction
    term: "Term"


@dataclass(frozen=True)
class Sum:
    terms: tuple["Term", ...]


@dataclass(frozen=True)
class Diff:
    left: "Term"
    right: "Term"


Term = Union[Generator, Bracket, Scale, Sum, Diff]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        raise TermSyntaxError(message, (self.pos if pos is None else pos) + 1)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self) -> Term:
        self.skip_ws()
        t = self.term()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return t

    def term(self) -> Term:
        left = self.atom()
        while True:
            self.skip_ws()
            op = self.peek()
            if op == "+":
                self.pos += 1
                left = Sum((left, self.atom()))
            elif op == "-":
                self.pos += 1
                left = Diff(left, self.atom())
            else:
                return left

    def atom(self) -> Term:
        self.skip_ws()
        ch = self.peek()
        if ch.isdigit() or (ch == "-" and self.pos + 1 < len(self.text) and self.text[self.pos + 1].isdigit()):
            coeff = self.rational()
            self.skip_ws()
            if self.peek() != "*":
                self.error("expected '*' after scalar")
            self.pos += 1
            return Scale(coeff, self.atom())
        return self.factor()

    def factor(self) -> Term:
        self.skip_ws()
        ch = self.peek()
        if ch == "g":
            return self.generator()
        if ch == "[":
            self.pos += 1
            left = self.term()
            self.expect(",")
            right = self.term()
            self.expect("]")
            return Bracket(left, right)
        if ch == "(":
            self.pos += 1
            inner = self.term()
            self.expect(")")
            return inner
        self.error("expected generator, '[' or '('")

    def generator(self) -> Generator:
        start = self.pos
        self.pos += 1  # past 'g'
        digits = self.digits("generator index")
        index = int(digits)
        if index < 1:
            self.error("generator index must be >= 1", start)
        return Generator(index)

    def digits(self, what: str) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error(f"expected {what}")
        return self.text[start:self.pos]

    def rational(self) -> Fraction:
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        num = int(self.text[start:self.pos] + self.digits("integer"))
        self.skip_ws()
        if self.peek() != "/":
            return Fraction(num)
        self.pos += 1
        self.skip_ws()
        den_start = self.pos
        den = int(self.digits("denominator"))
        if den == 0:
            self.error("zero denominator", den_start)
        return Fraction(num, den)


def parse_term(text: str) -> Term:
    return _Parser(text).parse()


def format_term(term: Term) -> str:
    """Canonical text form; reparsing yields an identical tree."""
    if isinstance(term, Generator):
        return f"g{term.index}"
    if isinstance(term, Bracket):
        return f"[{format_term(term.left)},{format_term(term.right)}]"
    if isinstance(term, Scale):
        return f"{term.coeff}*{_operand(term.term)}"
    if isinstance(term, Sum):
        first, *rest = term.terms
        return " + ".join([format_term(first)] + [_operand(t) for t in rest])
    if isinstance(term, Diff):
        return f"{format_term(term.left)} - {_operand(term.right)}"
    raise TypeError(f"not a term: {term!r}")


def _operand(term: Term) -> str:
    # Sum/Diff under a binary operator or a scalar need explicit parens.
    if isinstance(term, (Sum, Diff)):
        return f"({format_term(term)})"
    return format_term(term)


def evaluate(term: Term, generator: Callable, bracket: Callable):
    """Homomorphic evaluation into any algebra with LinComb-style values."""
    if isinstance(term, Generator):
        return generator(term.index)
    if isinstance(term, Bracket):
        return bracket(evaluate(term.left, generator, bracket), evaluate(term.right, generator, bracket))
    if isinstance(term, Scale):
        return evaluate(term.term, generator, bracket).scale(term.coeff)
    if isinstance(term, Sum):
        values = [evaluate(t, generator, bracket) for t in term.terms]
        out = values[0]
        for v in values[1:]:
            out = out + v
        return out
    if isinstance(term, Diff):
        return evaluate(term.left, generator, bracket) - evaluate(term.right, generator, bracket)
    raise TypeError(f"not a term: {term!r}")
