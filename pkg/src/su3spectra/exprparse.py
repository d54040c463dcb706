"""Parser for the operator expression literal syntax.

Grammar (whitespace-insensitive except inside complex literals):

    expr    := ['+'|'-'] product (('+'|'-') product)*
    product := power ('*' power)*
    power   := atom ('^' INT)*
    atom    := NUMBER | NUMBERi | COMPLEX | GENERATOR | '(' expr ')'

Generators are S12, S13, S21, S23, S31, S32, T3, H2.  `*` is the
non-commutative left-to-right product, `^` repeats a factor.  Numbers are
decimal and parsed exactly; `2i` is imaginary, and a coefficient written
without spaces such as `1+2i` lexes as a single complex literal, so
`(1+2i)*T3` and `1+2i*T3` both mean the complex multiple of T3 while
`1 + 2i*T3` is a sum.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import GENERATORS, CRational, GeneratorExpr
from .errors import ConfigError

_NUM = r"(?:\d+(?:\.\d+)?|\.\d+)"

_TOKEN_RE = re.compile(
    rf"""\s*(?:
      (?P<complex>{_NUM}[+-]{_NUM}?i)
    | (?P<imag>{_NUM}?i)
    | (?P<number>{_NUM})
    | (?P<gen>S[0-9][0-9]|T3|H2)
    | (?P<op>[+\-*^()])
    )""",
    re.VERBOSE,
)

_COMPLEX_RE = re.compile(rf"(?P<re>{_NUM})(?P<sign>[+-])(?P<im>{_NUM})?i")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise ConfigError(f"cannot parse expression at ...{rest[:20]!r}")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


def _number(text: str) -> Fraction:
    # Fraction("0.1") is the exact decimal 1/10
    return Fraction(text)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ConfigError(f"unexpected end of expression {self.text!r}")
        self.pos += 1
        return tok

    def expect_op(self, symbol: str):
        tok = self.take()
        if tok[0] != "op" or tok[1] != symbol:
            raise ConfigError(f"expected {symbol!r} at position {tok[2]} in {self.text!r}")

    def parse(self) -> GeneratorExpr:
        expr = self.sum()
        tok = self.peek()
        if tok is not None:
            raise ConfigError(f"trailing input at position {tok[2]} in {self.text!r}")
        return expr

    def sum(self) -> GeneratorExpr:
        expr = self.product()
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] not in "+-":
                return expr
            self.take()
            rhs = self.product()
            expr = expr + rhs if tok[1] == "+" else expr - rhs

    def product(self) -> GeneratorExpr:
        sign = 1
        tok = self.peek()
        while tok is not None and tok[0] == "op" and tok[1] in "+-":
            if tok[1] == "-":
                sign = -sign
            self.take()
            tok = self.peek()
        expr = self.power()
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] != "*":
                break
            self.take()
            expr = expr * self.power()
        return expr if sign > 0 else -expr

    def power(self) -> GeneratorExpr:
        expr = self.atom()
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] != "^":
                return expr
            self.take()
            exp_tok = self.take()
            if exp_tok[0] != "number" or "." in exp_tok[1]:
                raise ConfigError(
                    f"exponent must be a non-negative integer at position {exp_tok[2]}"
                )
            expr = expr ** int(exp_tok[1])

    def atom(self) -> GeneratorExpr:
        kind, text, where = self.take()
        if kind == "number":
            return GeneratorExpr.scalar(_number(text))
        if kind == "imag":
            value = _number(text[:-1]) if len(text) > 1 else Fraction(1)
            return GeneratorExpr({(): CRational(0, value)})
        if kind == "complex":
            m = _COMPLEX_RE.fullmatch(text)
            re_part = _number(m.group("re"))
            im_part = _number(m.group("im")) if m.group("im") else Fraction(1)
            if m.group("sign") == "-":
                im_part = -im_part
            return GeneratorExpr({(): CRational(re_part, im_part)})
        if kind == "gen":
            if text not in GENERATORS:
                raise ConfigError(
                    f"unknown generator {text!r} at position {where}; "
                    f"S indices must be distinct and in 1..3"
                )
            return GeneratorExpr.word((text,))
        if kind == "op" and text == "(":
            expr = self.sum()
            self.expect_op(")")
            return expr
        raise ConfigError(f"unexpected {text!r} at position {where} in {self.text!r}")


def parse_expr(text: str) -> GeneratorExpr:
    """Parse the CLI expression syntax into a GeneratorExpr."""
    if not isinstance(text, str) or not text.strip():
        raise ConfigError("empty operator expression")
    return _Parser(text).parse()
