"""Ideal expression parsing, canonical rendering, and JSON reports.

Grammar (whitespace insignificant):

    expr     := product (('&' | '∩') product)*
    product  := atom ('*' atom)*
    atom     := gens ('^' INT)?
    gens     := '(' monomial (',' monomial)* ')'
    monomial := '0' | '1' | term (['*'] term)*
    term     := NAME ('^' INT)?

Variables are auto-declared in order of first appearance unless an
explicit declaration is supplied.  '1' is the unit generator and '0'
contributes no generator, so "(0)" is the zero ideal.  Monomial exponents
must be positive; ideal powers may be 0.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Sequence

from ._version import __version__
from .monomials import Monomial, MonomialIdeal, VariableContext, minimalize


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class _Token:
    kind: str  # "name" | "int" | "sym" | "end"
    text: str
    pos: int


_TOKEN_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*|\d+|[(),^*&]|∩")


def _location(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    column = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, column


def _error(text: str, pos: int, message: str) -> ParseError:
    return ParseError(message, *_location(text, pos))


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise _error(text, pos, f"unexpected character {text[pos]!r}")
        lexeme = match.group()
        if lexeme[0].isdigit():
            kind = "int"
        elif lexeme[0].isalpha() or lexeme[0] == "_":
            kind = "name"
        else:
            kind = "sym"
        tokens.append(_Token(kind, lexeme, pos))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


# Terms are (name, exponent) pairs; a monomial is a tuple of terms, with
# the empty tuple standing for 1.  A gens node drops '0' entries, so an
# empty monomial tuple is the zero ideal.
_Terms = tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class _Gens:
    monomials: tuple[_Terms, ...]


@dataclass(frozen=True)
class _Power:
    base: object
    k: int


@dataclass(frozen=True)
class _Product:
    parts: tuple[object, ...]


@dataclass(frozen=True)
class _Intersect:
    parts: tuple[object, ...]


class _Parser:
    def __init__(self, text: str, declared: tuple[str, ...] | None):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0
        self.declared = declared
        self.seen: dict[str, None] = {}

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def fail(self, token: _Token, message: str) -> ParseError:
        return _error(self.text, token.pos, message)

    def expect_sym(self, text: str) -> _Token:
        token = self.advance()
        if token.kind != "sym" or token.text != text:
            raise self.fail(token, f"expected {text!r}")
        return token

    def expr(self) -> object:
        parts = [self.product()]
        while self.peek().kind == "sym" and self.peek().text in ("&", "∩"):
            self.advance()
            parts.append(self.product())
        return parts[0] if len(parts) == 1 else _Intersect(tuple(parts))

    def product(self) -> object:
        parts = [self.atom()]
        while self.peek().kind == "sym" and self.peek().text == "*":
            self.advance()
            parts.append(self.atom())
        return parts[0] if len(parts) == 1 else _Product(tuple(parts))

    def atom(self) -> object:
        gens = self.gens()
        if self.peek().kind == "sym" and self.peek().text == "^":
            self.advance()
            token = self.advance()
            if token.kind != "int":
                raise self.fail(token, "expected an integer exponent")
            return _Power(gens, int(token.text))
        return gens

    def gens(self) -> _Gens:
        self.expect_sym("(")
        monomials = [self.monomial()]
        while self.peek().kind == "sym" and self.peek().text == ",":
            self.advance()
            monomials.append(self.monomial())
        self.expect_sym(")")
        return _Gens(tuple(m for m in monomials if m is not None))

    def monomial(self) -> _Terms | None:
        token = self.peek()
        if token.kind == "int":
            self.advance()
            if token.text == "1":
                return ()
            if token.text == "0":
                return None
            raise self.fail(token, f"unexpected integer {token.text!r} (only 0 and 1 stand alone)")
        if token.kind != "name":
            raise self.fail(token, "expected a monomial")
        terms = [self.term()]
        while True:
            nxt = self.peek()
            if nxt.kind == "sym" and nxt.text == "*":
                self.advance()
                terms.append(self.term())
            elif nxt.kind == "name":
                terms.append(self.term())
            else:
                return tuple(terms)

    def term(self) -> tuple[str, int]:
        token = self.advance()
        if token.kind != "name":
            raise self.fail(token, "expected a variable")
        name = token.text
        if self.declared is not None:
            if name not in self.declared:
                raise self.fail(token, f"unknown variable {name!r}")
        else:
            self.seen.setdefault(name)
        exponent = 1
        if self.peek().kind == "sym" and self.peek().text == "^":
            self.advance()
            exp_token = self.advance()
            if exp_token.kind != "int":
                raise self.fail(exp_token, "expected an integer exponent")
            exponent = int(exp_token.text)
            if exponent == 0:
                raise self.fail(exp_token, "zero exponent")
        return (name, exponent)


@dataclass(frozen=True)
class IdealExpression:
    """Parsed expression together with its resolved variable context."""

    context: VariableContext
    tree: object = field(repr=False)

    def evaluate(self) -> MonomialIdeal:
        return _evaluate(self.tree, self.context)


def _monomial_from_terms(terms: _Terms, ctx: VariableContext) -> Monomial:
    exps = [0] * ctx.n
    for name, e in terms:
        exps[ctx.index(name)] += e
    return ctx.monomial(exps)


def _evaluate(node: object, ctx: VariableContext) -> MonomialIdeal:
    if isinstance(node, _Gens):
        gens = [_monomial_from_terms(terms, ctx) for terms in node.monomials]
        return minimalize(gens, ctx)
    if isinstance(node, _Power):
        return _evaluate(node.base, ctx).power(node.k)
    if isinstance(node, _Product):
        result = _evaluate(node.parts[0], ctx)
        for part in node.parts[1:]:
            result = result * _evaluate(part, ctx)
        return result
    if isinstance(node, _Intersect):
        result = _evaluate(node.parts[0], ctx)
        for part in node.parts[1:]:
            result = result.intersect(_evaluate(part, ctx))
        return result
    raise TypeError(f"unknown expression node {node!r}")


def _normalize_variables(variables) -> tuple[str, ...] | None:
    if variables is None:
        return None
    if isinstance(variables, VariableContext):
        return variables.names
    if isinstance(variables, str):
        return tuple(name.strip() for name in variables.split(",") if name.strip())
    return tuple(variables)


def parse_ideal(text: str, variables=None) -> IdealExpression:
    """Parse an ideal expression.

    ``variables`` fixes the context (a comma-separated string, a sequence
    of names, or a VariableContext); otherwise variables are auto-declared
    in first-appearance order.
    """
    if not text.strip():
        raise ParseError("empty expression", 1, 1)
    declared = _normalize_variables(variables)
    parser = _Parser(text, declared)
    tree = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise parser.fail(trailing, f"unexpected {trailing.text!r} after expression")
    names = declared if declared is not None else tuple(parser.seen)
    if not names:
        raise _error(text, 0, "expression declares no variables; pass an explicit variable list")
    return IdealExpression(VariableContext(names), tree)


def parse_monomial(text: str, context: VariableContext) -> Monomial:
    """Parse a single monomial such as ``a^2*b`` against a fixed context."""
    parser = _Parser(text, context.names)
    terms = parser.monomial()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise parser.fail(trailing, f"unexpected {trailing.text!r} after monomial")
    if terms is None:
        raise _error(text, 0, "0 is not a monomial")
    return _monomial_from_terms(terms, context)


def render_monomial(monomial: Monomial) -> str:
    return str(monomial)


def render_ideal(ideal: MonomialIdeal) -> str:
    """Canonical parenthesized generator list; parses back to the ideal."""
    return str(ideal)


@dataclass
class ReportDocument:
    """A structured result record: input echo, context, and a JSON-ready
    result mapping (ints, strings, lists, bools, None only)."""

    command: str
    input_text: str
    variables: tuple[str, ...]
    result: dict
    version: str = __version__

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "input": self.input_text,
            "variables": list(self.variables),
            "result": self.result,
            "tool": "sil",
            "version": self.version,
        }

    @classmethod
    def from_dict(cls, data: dict) -> ReportDocument:
        return cls(
            command=data["command"],
            input_text=data["input"],
            variables=tuple(data["variables"]),
            result=data["result"],
            version=data["version"],
        )


def emit_json(document: ReportDocument) -> bytes:
    """Byte-deterministic JSON: sorted keys, two-space indent, no floats."""
    return (json.dumps(document.to_dict(), sort_keys=True, indent=2) + "\n").encode("utf-8")
