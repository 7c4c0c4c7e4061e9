"""
Recursive descent parser for algebra expressions.

Grammar::

    expr    := term (("+" | "-") term)*
    term    := ["+" | "-"] factor ("*" factor)*
    factor  := atom ["^" nat]
    atom    := rational | symbol | "(" expr ")"
    symbol  := label "[" nat "]" | "1[" nat "]"
             | ("x" | "u" | "y" | "v" | "c") (nat | "(" nat ")")

Tokens on strands are written ``label[i]``; the generator families are
``x_i``, ``u_i`` (nilHecke) and ``c_i``, ``y_i``, ``v_i`` (odd nilHecke).
Strand indices are checked against n while parsing.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, NamedTuple, Optional, Tuple, Union

from frobnil.algebra.relations import Gen
from frobnil.exceptions import ExprSyntaxError, StrandOutOfRange, UnknownSymbol

__all__ = [
    "ParseContext", "Number", "Symbol", "Power", "Product", "Sum", "ExprAST",
    "tokenize", "parse",
]

GENERATOR_FAMILIES = ("x", "u", "y", "v", "c")
CROSSING_FAMILIES = ("u", "v")


class ParseContext(NamedTuple):
    """Strand count and the basis labels a token may use."""
    n: int
    labels: Tuple[str, ...]


@dataclass(frozen=True)
class Number:
    value: Fraction


@dataclass(frozen=True)
class Symbol:
    gen: Gen


@dataclass(frozen=True)
class Power:
    base: "ExprAST"
    exponent: int


@dataclass(frozen=True)
class Product:
    factors: Tuple["ExprAST", ...]


@dataclass(frozen=True)
class Sum:
    terms: Tuple[Tuple[int, "ExprAST"], ...]    # (sign, term)


ExprAST = Union[Number, Symbol, Power, Product, Sum]


class Token(NamedTuple):
    kind: str       # "number", "ident", "op", "eof"
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"(?P<space>[ \t]+)|(?P<newline>\n)|(?P<number>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)"
    r"|(?P<op>[-+*/^()\[\]])"
)


def tokenize(source: str) -> Iterator[Token]:
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        match = _TOKEN_RE.match(source, pos)
        column = pos - line_start + 1
        if match is None:
            raise ExprSyntaxError(f"unexpected character {source[pos]!r}", line, column)
        kind = match.lastgroup
        if kind == "newline":
            line += 1
            line_start = match.end()
        elif kind != "space":
            yield Token(kind, match.group(), line, column)
        pos = match.end()
    yield Token("eof", "", line, pos - line_start + 1)


class Parser:
    def __init__(self, source: str, context: ParseContext):
        self.tokens: List[Token] = list(tokenize(source))
        self.pos = 0
        self.context = context

    # token helpers

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.current
        if token.kind != "eof":
            self.pos += 1
        return token

    def at(self, text: str) -> bool:
        return self.current.kind == "op" and self.current.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(f"expected {text!r}")
        return self.advance()

    def fail(self, message: str, token: Optional[Token] = None):
        token = token or self.current
        found = "end of input" if token.kind == "eof" else repr(token.text)
        raise ExprSyntaxError(f"{message}, found {found}", token.line, token.column)

    def nat(self) -> Tuple[int, Token]:
        token = self.current
        if token.kind != "number":
            self.fail("expected a natural number")
        self.advance()
        return int(token.text), token

    # grammar

    def parse(self) -> ExprAST:
        tree = self.expr()
        if self.current.kind != "eof":
            self.fail("unexpected trailing input")
        return tree

    def expr(self) -> ExprAST:
        terms = [self.term()]
        while self.at("+") or self.at("-"):
            s = 1 if self.advance().text == "+" else -1
            inner_sign, body = self.term()
            terms.append((s * inner_sign, body))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self) -> Tuple[int, ExprAST]:
        s = 1
        if self.at("+") or self.at("-"):
            s = 1 if self.advance().text == "+" else -1
        factors = [self.factor()]
        while self.at("*"):
            self.advance()
            factors.append(self.factor())
        return s, factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> ExprAST:
        base = self.atom()
        if self.at("^"):
            self.advance()
            exponent, _ = self.nat()
            return Power(base, exponent)
        return base

    def atom(self) -> ExprAST:
        token = self.current
        if self.at("("):
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if token.kind == "number":
            if self.peek().kind == "op" and self.peek().text == "[":
                self.advance()
                return self.token_symbol(token.text, token)
            return self.rational()
        if token.kind == "ident":
            self.advance()
            if self.at("["):
                return self.token_symbol(token.text, token)
            return self.generator_symbol(token)
        self.fail("expected a number, a symbol or '('")

    def rational(self) -> Number:
        numerator, _ = self.nat()
        if self.at("/"):
            self.advance()
            denominator, token = self.nat()
            if denominator == 0:
                raise ExprSyntaxError("zero denominator", token.line, token.column)
            return Number(Fraction(numerator, denominator))
        return Number(Fraction(numerator))

    def token_symbol(self, label: str, token: Token) -> Symbol:
        self.expect("[")
        strand, index_token = self.nat()
        self.expect("]")
        if label not in self.context.labels:
            raise UnknownSymbol(f"unknown basis label {label!r}", token.line, token.column)
        self.check_strand(strand, index_token, crossing=False)
        return Symbol(Gen("a", strand, label))

    def generator_symbol(self, token: Token) -> Symbol:
        match = re.fullmatch(r"([a-z])(\d+)", token.text)
        if match and match.group(1) in GENERATOR_FAMILIES:
            family, index = match.group(1), int(match.group(2))
            index_token = token
        elif token.text in GENERATOR_FAMILIES and self.at("("):
            self.advance()
            family = token.text
            index, index_token = self.nat()
            self.expect(")")
        else:
            raise UnknownSymbol(f"unknown symbol {token.text!r}", token.line, token.column)
        self.check_strand(index, index_token, crossing=family in CROSSING_FAMILIES)
        return Symbol(Gen(family, index))

    def check_strand(self, index: int, token: Token, crossing: bool) -> None:
        top = self.context.n - 1 if crossing else self.context.n
        if not 1 <= index <= top:
            raise StrandOutOfRange(f"index {index} is outside 1..{top}", token.line, token.column)


def parse(source: str, context: ParseContext) -> ExprAST:
    """Parse source text into an expression tree.

    >>> parse("x2", ParseContext(2, ("1",)))
    Symbol(gen=Gen(kind='x', index=2, label=''))
    >>> parse("-1/2*c[1]", ParseContext(2, ("1", "c"))).terms[0][0]
    -1
    """
    return Parser(source, context).parse()

