"""The ``.mid`` script language: lexer, parser, canonical printer and evaluator.

Grammar::

    script    := statement*
    statement := "ring" INT ";" | ID "=" expr ";" | COMMAND arg* ";"
    expr      := term ("+" term)*
    term      := power ("*" power)*
    power     := atom ("^" INT)?
    atom      := "ideal" "(" [mono ("," mono)*] ")" | ID | "(" expr ")"
               | "intersect" "(" expr ("," expr)+ ")" | "colon" "(" expr "," expr ")"
               | "sat" "(" expr "," expr ")" | "trunc" "(" expr "," INT ")"
    mono      := "1" | VAR ("^" INT)? ("*" VAR ("^" INT)?)*

Variables are ``x<int>`` and are reserved, as are the keywords and command names.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .ideal import (
    MonomialIdeal,
    colon_ideal,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    saturate_ideal,
    truncation,
)
from .ring import Monomial, RingContext

COMMANDS = ("isborel", "reg", "regcheck", "stable", "decompose", "ass", "betti", "eq", "randborel")
FUNCTIONS = ("intersect", "colon", "sat", "trunc")
KEYWORDS = frozenset(("ring", "ideal") + FUNCTIONS + COMMANDS)
RANDBOREL_KEYS = ("q", "seed", "maxexp", "sizes", "maxdeg")


class ScriptError(Exception):
    """Lex/parse/binding error with a 1-based source position."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message = message
        self.line = line
        self.col = col
        where = f"{line}:{col}: " if line else ""
        super().__init__(where + message)


# --- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class Literal:
    monomials: tuple[Monomial, ...]


@dataclass(frozen=True)
class Name:
    ident: str


@dataclass(frozen=True)
class Sum:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Product:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Power:
    base: "Expr"
    k: int


@dataclass(frozen=True)
class Intersect:
    args: tuple["Expr", ...]


@dataclass(frozen=True)
class Colon:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sat:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Trunc:
    arg: "Expr"
    e: int


Expr = Union[Literal, Name, Sum, Product, Power, Intersect, Colon, Sat, Trunc]


@dataclass(frozen=True)
class RingDecl:
    n: int


@dataclass(frozen=True)
class Let:
    name: str
    expr: Expr


@dataclass(frozen=True)
class Command:
    name: str
    args: tuple  # exprs and ints in order; randborel gets (key, value) pairs
    line: int = field(default=0, compare=False)


Statement = Union[RingDecl, Let, Command]


@dataclass(frozen=True)
class Script:
    statements: tuple[Statement, ...]

    @property
    def ring(self) -> RingContext | None:
        for s in self.statements:
            if isinstance(s, RingDecl):
                return RingContext(s.n)
        return None


# --- lexer -----------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+|\#[^\n]*)
  | (?P<nl>\n)
  | (?P<int>\d+)
  | (?P<id>[A-Za-z][A-Za-z0-9_]*)
  | (?P<op>[;=+*^(),])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "id", "op", "eof"
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ScriptError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


_VAR = re.compile(r"x([1-9]\d*)")


def is_variable(ident: str) -> bool:
    return _VAR.fullmatch(ident) is not None


# --- parser ----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0
        self.ctx: RingContext | None = None
        self.bound: set[str] = set()

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ScriptError(message, tok.line, tok.col)

    def advance(self) -> Token:
        tok = self.tok
        self.i += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.tok.kind in ("op", "id") and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind == "eof":
            self.fail(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    def expect_int(self) -> int:
        if self.tok.kind != "int":
            self.fail(f"expected an integer, found {self.tok.text or 'end of input'!r}")
        return int(self.advance().text)

    def script(self) -> Script:
        out = []
        while self.tok.kind != "eof":
            out.append(self.statement())
        return Script(tuple(out))

    def statement(self) -> Statement:
        tok = self.tok
        if tok.kind != "id":
            self.fail(f"expected a statement, found {tok.text!r}")
        if tok.text == "ring":
            self.advance()
            n = self.expect_int()
            if self.ctx is not None:
                self.fail("ring redeclared", tok)
            if n < 2:
                self.fail("ring needs at least 2 variables", tok)
            self.expect(";")
            self.ctx = RingContext(n)
            return RingDecl(n)
        if tok.text in COMMANDS:
            self.advance()
            args = self.randborel_args() if tok.text == "randborel" else self.command_args(tok)
            self.expect(";")
            return Command(tok.text, args, tok.line)
        if self.tokens[self.i + 1].text == "=":
            if tok.text in KEYWORDS or is_variable(tok.text):
                self.fail(f"{tok.text!r} is reserved and cannot be bound")
            self.advance()
            self.advance()
            expr = self.expr()
            self.expect(";")
            self.bound.add(tok.text)
            return Let(tok.text, expr)
        self.fail(f"unknown command {tok.text!r}")

    def command_args(self, tok: Token) -> tuple:
        self.require_ring(tok)
        if tok.text == "eq":
            return (self.expr(), self.expr())
        if tok.text == "stable":
            return (self.expr(), self.expect_int())
        return (self.expr(),)

    def randborel_args(self) -> tuple:
        self.require_ring(self.tokens[self.i - 1])
        args = []
        seen = set()
        while self.tok.kind == "id":
            key = self.advance()
            if key.text not in RANDBOREL_KEYS or key.text in seen:
                self.fail(f"bad randborel argument {key.text!r}", key)
            seen.add(key.text)
            self.expect("=")
            if key.text == "sizes":
                vals = [self.expect_int()]
                while self.accept(","):
                    vals.append(self.expect_int())
                args.append((key.text, tuple(vals)))
            else:
                args.append((key.text, self.expect_int()))
        return tuple(args)

    def require_ring(self, tok: Token):
        if self.ctx is None:
            self.fail("ring not declared", tok)

    def expr(self) -> Expr:
        node = self.term()
        while self.accept("+"):
            node = Sum(node, self.term())
        return node

    def term(self) -> Expr:
        node = self.power()
        while self.accept("*"):
            node = Product(node, self.power())
        return node

    def power(self) -> Expr:
        node = self.atom()
        if self.accept("^"):
            tok = self.tok
            k = self.expect_int()
            if k < 1:
                self.fail("ideal powers need k >= 1", tok)
            node = Power(node, k)
        return node

    def atom(self) -> Expr:
        tok = self.tok
        self.require_ring(tok)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind != "id":
            self.fail(f"expected an ideal expression, found {tok.text or 'end of input'!r}")
        self.advance()
        if tok.text == "ideal":
            return self.literal()
        if tok.text in FUNCTIONS:
            self.expect("(")
            first = self.expr()
            self.expect(",")
            if tok.text == "trunc":
                e = self.expect_int()
                self.expect(")")
                return Trunc(first, e)
            rest = [self.expr()]
            if tok.text == "intersect":
                while self.accept(","):
                    rest.append(self.expr())
            self.expect(")")
            if tok.text == "intersect":
                return Intersect((first, *rest))
            return (Colon if tok.text == "colon" else Sat)(first, rest[0])
        if tok.text in KEYWORDS or is_variable(tok.text):
            self.fail(f"{tok.text!r} cannot be used as an ideal", tok)
        if tok.text not in self.bound:
            self.fail(f"unbound identifier {tok.text!r}", tok)
        return Name(tok.text)

    def literal(self) -> Literal:
        self.expect("(")
        monos = []
        if not self.accept(")"):
            monos.append(self.monomial())
            while self.accept(","):
                monos.append(self.monomial())
            self.expect(")")
        return Literal(tuple(monos))

    def monomial(self) -> Monomial:
        n = self.ctx.n
        exps = [0] * n
        if self.tok.kind == "int":
            tok = self.advance()
            if tok.text != "1":
                self.fail("the only constant monomial is 1", tok)
            return Monomial(tuple(exps))
        while True:
            tok = self.tok
            m = _VAR.fullmatch(tok.text) if tok.kind == "id" else None
            if not m:
                self.fail(f"expected a variable, found {tok.text or 'end of input'!r}")
            i = int(m.group(1))
            if i > n:
                self.fail(f"variable {tok.text} is outside the ring of {n} variables", tok)
            self.advance()
            exps[i - 1] += self.expect_int() if self.accept("^") else 1
            if not self.accept("*"):
                return Monomial(tuple(exps))


def parse(text: str) -> Script:
    """Parse a whole script, checking ring declaration and bindings as it goes."""
    return _Parser(text).script()


# --- printer ---------------------------------------------------------------

def _prec(node) -> int:
    if isinstance(node, Sum):
        return 1
    if isinstance(node, Product):
        return 2
    if isinstance(node, Power):
        return 3
    return 4


def format_expr(node: Expr, ctx: RingContext) -> str:
    def wrap(child, minimum):
        s = format_expr(child, ctx)
        return f"({s})" if _prec(child) < minimum else s

    if isinstance(node, Literal):
        return "ideal(" + ", ".join(ctx.format(m) for m in node.monomials) + ")"
    if isinstance(node, Name):
        return node.ident
    if isinstance(node, Sum):
        return f"{wrap(node.left, 1)} + {wrap(node.right, 2)}"
    if isinstance(node, Product):
        return f"{wrap(node.left, 2)} * {wrap(node.right, 3)}"
    if isinstance(node, Power):
        return f"{wrap(node.base, 4)}^{node.k}"
    if isinstance(node, Intersect):
        return "intersect(" + ", ".join(format_expr(a, ctx) for a in node.args) + ")"
    if isinstance(node, (Colon, Sat)):
        fn = "colon" if isinstance(node, Colon) else "sat"
        return f"{fn}({format_expr(node.left, ctx)}, {format_expr(node.right, ctx)})"
    if isinstance(node, Trunc):
        return f"trunc({format_expr(node.arg, ctx)}, {node.e})"
    raise TypeError(f"not an expression node: {node!r}")


def format_statement(stmt: Statement, ctx: RingContext | None) -> str:
    if isinstance(stmt, RingDecl):
        return f"ring {stmt.n};"
    if isinstance(stmt, Let):
        return f"{stmt.name} = {format_expr(stmt.expr, ctx)};"
    parts = [stmt.name]
    for a in stmt.args:
        if isinstance(a, int):
            parts.append(str(a))
        elif isinstance(a, tuple):
            key, val = a
            parts.append(f"{key}=" + (",".join(map(str, val)) if isinstance(val, tuple) else str(val)))
        else:
            parts.append(format_expr(a, ctx))
    return " ".join(parts) + ";"


def format_script(script: Script) -> str:
    ctx = None
    lines = []
    for s in script.statements:
        if isinstance(s, RingDecl):
            ctx = RingContext(s.n)
        lines.append(format_statement(s, ctx))
    return "\n".join(lines) + "\n"


# --- evaluation ------------------------------------------------------------

def evaluate(node: Expr, ctx: RingContext, env: dict[str, MonomialIdeal]) -> MonomialIdeal:
    """Evaluate an expression to its canonical ideal."""
    ev = lambda x: evaluate(x, ctx, env)  # noqa: E731
    if isinstance(node, Literal):
        return MonomialIdeal(ctx, node.monomials)
    if isinstance(node, Name):
        return env[node.ident]
    if isinstance(node, Sum):
        return ideal_sum(ev(node.left), ev(node.right))
    if isinstance(node, Product):
        return ideal_product(ev(node.left), ev(node.right))
    if isinstance(node, Power):
        return ideal_power(ev(node.base), node.k)
    if isinstance(node, Intersect):
        result = ev(node.args[0])
        for a in node.args[1:]:
            result = ideal_intersection(result, ev(a))
        return result
    if isinstance(node, Colon):
        return colon_ideal(ev(node.left), ev(node.right))
    if isinstance(node, Sat):
        return saturate_ideal(ev(node.left), ev(node.right))
    if isinstance(node, Trunc):
        return truncation(ev(node.arg), node.e)
    raise TypeError(f"not an expression node: {node!r}")
