"""
Plain-text ideal files.

    # @name: two squares
    ring: x, y
    x^2
    y^2 - 3/2*x*y   # trailing comments are fine

The first non-blank, non-comment line declares the variables (greatest
first). Every following non-blank line is one generator. Comments start
with `#`; full-line comments of the form `# @key: value` become metadata.
See IDEAL_FILE_FORMAT.md for the grammar.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional, Sequence

from sympy import QQ

from .ring import Polynomial, VariableContext
from .validators import ParseError, ValidationError

MODULE = "cli-io"

_METADATA = re.compile(r"#\s*@([A-Za-z_][\w-]*)\s*:\s*(.*?)\s*$")
_TOKEN = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<number>\d+(?:/\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[+\-*^()])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # number | ident | op | end
    text: str
    column: int


def tokenize(text: str, line: int, offset: int = 0) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ParseError(
                f"Unexpected character {text[pos]!r}", module=MODULE, line=line, column=offset + pos + 1
            )
        kind = match.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, match.group(), offset + pos + 1))
        pos = match.end()
    tokens.append(Token("end", "", offset + len(text) + 1))
    return tokens


class _Parser:
    """Recursive descent over one generator line."""

    def __init__(self, ctx: VariableContext, tokens: list[Token], line: int) -> None:
        self.ctx = ctx
        self.tokens = tokens
        self.pos = 0
        self.line = line

    def error(self, message: str, token: Optional[Token] = None) -> ParseError:
        token = token or self.peek()
        return ParseError(message, module=MODULE, line=self.line, column=token.column)

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def at_op(self, *ops: str) -> bool:
        token = self.peek()
        return token.kind == "op" and token.text in ops

    def parse(self) -> Polynomial:
        if self.peek().kind == "end":
            raise self.error("Empty expression")
        poly = self.expr()
        if self.peek().kind != "end":
            raise self.error(f"Unexpected {self.peek().text!r}")
        return poly

    def expr(self) -> Polynomial:
        poly = self.term()
        while self.at_op("+", "-"):
            op = self.advance().text
            rhs = self.term()
            poly = poly + rhs if op == "+" else poly - rhs
        return poly

    def term(self) -> Polynomial:
        poly = self.factor()
        while True:
            if self.at_op("*"):
                self.advance()
                poly = poly * self.factor()
            elif self.peek().kind in ("number", "ident") or self.at_op("("):
                raise self.error("Implicit multiplication is not allowed; write '*'")
            else:
                return poly

    def factor(self) -> Polynomial:
        if self.at_op("-"):
            self.advance()
            return -self.factor()
        if self.at_op("+"):
            self.advance()
            return self.factor()
        base = self.atom()
        if self.at_op("^"):
            caret = self.advance()
            exponent = self.peek()
            if exponent.kind != "number" or "/" in exponent.text:
                raise self.error(
                    "Malformed exponent: expected a non-negative integer",
                    caret if exponent.kind == "end" else exponent,
                )
            self.advance()
            base = base ** int(exponent.text)
            if self.at_op("^"):
                raise self.error("Malformed exponent: chained '^' needs parentheses")
        return base

    def atom(self) -> Polynomial:
        token = self.peek()
        if token.kind == "number":
            self.advance()
            num, _, den = token.text.partition("/")
            if den and int(den) == 0:
                raise self.error("Division by zero in rational literal", token)
            value = QQ(int(num), int(den)) if den else QQ(int(num))
            return Polynomial.constant(self.ctx, value)
        if token.kind == "ident":
            self.advance()
            if token.text not in self.ctx.names:
                raise self.error(f"Undeclared variable {token.text}", token)
            return Polynomial.variable(self.ctx, token.text)
        if self.at_op("("):
            self.advance()
            inner = self.expr()
            if not self.at_op(")"):
                raise self.error("Expected ')'")
            self.advance()
            return inner
        if token.kind == "end":
            raise self.error("Unexpected end of expression", token)
        raise self.error(f"Unexpected {token.text!r}", token)


def parse_polynomial(ctx: VariableContext, text: str, line: int = 1, offset: int = 0) -> Polynomial:
    return _Parser(ctx, tokenize(text, line, offset), line).parse()


@dataclass(frozen=True)
class IdealFile:
    ctx: VariableContext
    generators: tuple[Polynomial, ...]
    metadata: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.generators:
            raise ValidationError("An ideal file needs at least one generator.", module=MODULE)

    def is_monomial(self) -> bool:
        """True when every nonzero generator is a single term."""
        return all(p.is_zero() or p.is_monomial() for p in self.generators)

    def monomials(self) -> list[tuple[int, ...]]:
        return [p.leading_monomial() for p in self.generators if not p.is_zero()]

    def to_text(self) -> str:
        return format_ideal(self.ctx, self.generators, self.metadata)


def _split_comment(raw: str) -> tuple[str, str]:
    body, hash_, comment = raw.partition("#")
    return body, hash_ + comment


def _lines(text: str) -> Iterator[tuple[int, str, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        body, comment = _split_comment(raw)
        yield number, body, comment


def parse_ideal_file(text: str) -> IdealFile:
    ctx: Optional[VariableContext] = None
    generators: list[Polynomial] = []
    metadata: dict[str, str] = {}
    last_line = 0

    for number, body, comment in _lines(text):
        last_line = number
        if not body.strip():
            match = _METADATA.match(comment.strip())
            if match:
                metadata[match.group(1)] = match.group(2)
            continue
        if ctx is None:
            head, colon, names = body.partition(":")
            if head.strip() != "ring" or not colon:
                column = len(body) - len(body.lstrip()) + 1
                raise ParseError("Expected a 'ring: x, y, ...' header", module=MODULE, line=number, column=column)
            parts = [n.strip() for n in names.split(",")]
            try:
                ctx = VariableContext(tuple(parts))
            except ValidationError as e:
                raise ParseError(e.message, module=MODULE, line=number, column=len(head) + 2) from e
            continue
        generators.append(parse_polynomial(ctx, body, line=number))

    if ctx is None:
        raise ParseError("Missing 'ring:' header", module=MODULE, line=max(last_line, 1), column=1)
    if not generators:
        raise ParseError("Empty generator list", module=MODULE, line=max(last_line, 1), column=1)
    return IdealFile(ctx=ctx, generators=tuple(generators), metadata=metadata)


def parse_ideal(text: str) -> tuple[VariableContext, list[Polynomial]]:
    parsed = parse_ideal_file(text)
    return parsed.ctx, list(parsed.generators)


def format_ideal(
    ctx: VariableContext, generators: Sequence[Polynomial], metadata: Optional[Mapping[str, str]] = None
) -> str:
    lines = [f"# @{key}: {value}" for key, value in (metadata or {}).items()]
    lines.append("ring: " + ", ".join(ctx.names))
    lines.extend(p.to_string() for p in generators)
    return "\n".join(lines) + "\n"

