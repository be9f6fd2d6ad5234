"""Parsing for the polynomial expression grammar.

Grammar (whitespace insignificant, ^ binds tightest, * explicit):

    expr    := term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := '-' factor | power
    power   := atom ['^' INT]
    atom    := INT ['/' INT] | IDENT | '(' expr ')'

Identifiers match [a-zA-Z][a-zA-Z0-9_]*; INT is a nonnegative integer and
INT '/' INT is a rational literal. There is no division operator: a '/'
is only consumed between two integer literals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .context import VarContext
from .errors import ParseError, UnknownVariableError
from .poly import Polynomial
from .ratfunc import RationalFunction


@dataclass(frozen=True)
class _Token:
    kind: str  # INT | IDENT | OP | END
    value: str
    pos: int


_OPS = set("+-*^/()")


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("IDENT", text[i:j], i))
            i = j
            continue
        if ch in _OPS:
            tokens.append(_Token("OP", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", text, i)
    tokens.append(_Token("END", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: VarContext):
        self.text = text
        self.ctx = ctx
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at_op(self, *chars) -> bool:
        tok = self.peek()
        return tok.kind == "OP" and tok.value in chars

    def expect_op(self, char):
        tok = self.advance()
        if tok.kind != "OP" or tok.value != char:
            raise ParseError(f"expected {char!r}", self.text, tok.pos)
        return tok

    def fail(self, message):
        raise ParseError(message, self.text, self.peek().pos)

    # -- grammar rules ---------------------------------------------------

    def expr(self) -> Polynomial:
        total = self.term()
        while self.at_op("+", "-"):
            op = self.advance().value
            rhs = self.term()
            total = total + rhs if op == "+" else total - rhs
        return total

    def term(self) -> Polynomial:
        total = self.factor()
        while self.at_op("*"):
            self.advance()
            total = total * self.factor()
        return total

    def term_factors(self) -> list[Polynomial]:
        """Like term(), but keeps the top-level product structure."""
        factors = [self.factor()]
        while self.at_op("*"):
            self.advance()
            factors.append(self.factor())
        return factors

    def factor(self) -> Polynomial:
        if self.at_op("-"):
            self.advance()
            return -self.factor()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.at_op("^"):
            self.advance()
            tok = self.advance()
            if tok.kind != "INT":
                raise ParseError("expected an integer exponent", self.text, tok.pos)
            return base ** int(tok.value)
        return base

    def atom(self) -> Polynomial:
        tok = self.advance()
        if tok.kind == "INT":
            value = Fraction(int(tok.value))
            if self.at_op("/") and self.tokens[self.i + 1].kind == "INT":
                self.advance()
                den = int(self.advance().value)
                if den == 0:
                    raise ParseError("zero denominator in rational literal", self.text, tok.pos)
                value = Fraction(int(tok.value), den)
            return Polynomial.constant(self.ctx, value)
        if tok.kind == "IDENT":
            if tok.value not in self.ctx:
                raise UnknownVariableError(
                    f"unknown variable {tok.value!r}", self.text, tok.pos
                )
            return Polynomial.variable(self.ctx, tok.value)
        if tok.kind == "OP" and tok.value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(
            f"unexpected {tok.value!r}" if tok.kind != "END" else "unexpected end of input",
            self.text,
            tok.pos,
        )


def infer_context(text: str) -> VarContext:
    """Context from the identifiers of text, in order of first appearance."""
    names = []
    for tok in _tokenize(text):
        if tok.kind == "IDENT" and tok.value not in names:
            names.append(tok.value)
    return VarContext(names)


def parse_polynomial(text: str, ctx: VarContext | None = None) -> Polynomial:
    """Parse text to a canonical Polynomial.

    With ctx=None the variable context is inferred from the order of first
    appearance in the text.
    """
    if ctx is None:
        ctx = infer_context(text)
    parser = _Parser(text, ctx)
    poly = parser.expr()
    end = parser.advance()
    if end.kind != "END":
        raise ParseError(f"unexpected {end.value!r}", text, end.pos)
    return poly


def parse_summands(text: str, ctx: VarContext) -> list[list[Polynomial]]:
    """Top-level summands of text as signed factor lists.

    Each summand keeps its written product structure; a leading minus is
    folded into the first factor.
    """
    parser = _Parser(text, ctx)
    summands = []
    sign = 1
    if parser.at_op("-"):
        parser.advance()
        sign = -1
    while True:
        factors = parser.term_factors()
        if sign < 0:
            factors[0] = -factors[0]
        summands.append(factors)
        if parser.at_op("+", "-"):
            sign = 1 if parser.advance().value == "+" else -1
            continue
        break
    end = parser.advance()
    if end.kind != "END":
        raise ParseError(f"unexpected {end.value!r}", text, end.pos)
    return summands


def parse_rational_function(text: str, ctx: VarContext) -> RationalFunction:
    """Parse a canonical rational-function string "num/den" (den omitted when 1)."""
    try:
        return RationalFunction.from_value(ctx, parse_polynomial(text, ctx))
    except UnknownVariableError:
        raise
    except ParseError:
        pass
    depth = 0
    split_at = None
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            if split_at is not None:
                raise ParseError("more than one top-level '/'", text, i)
            split_at = i
    if split_at is None:
        # re-raise the original polynomial parse error
        parse_polynomial(text, ctx)
        raise AssertionError("unreachable")
    num = parse_polynomial(text[:split_at], ctx)
    den_text = text[split_at + 1 :]
    den = parse_polynomial(den_text, ctx)
    if den.is_zero:
        raise ParseError("zero denominator", text, split_at + 1)
    return RationalFunction(num, den)
