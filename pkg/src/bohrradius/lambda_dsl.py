"""Weight functions lambda(r): a tiny expression language over the variable r.

Grammar (whitespace is insignificant)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := base ('^' integer)?
    base   := number | 'r' | func '(' expr ')' | '(' expr ')'
    func   := 'exp' | 'sin' | 'ln'

Numbers are integer or decimal literals.  Exponents are non-negative integer
literals.  Expressions are immutable trees; :func:`to_source` prints one back
with the minimum parentheses needed to re-parse to the same tree.

>>> lam = parse_lambda("r*exp(r)/(1-r)^2")
>>> round(eval_lambda(lam, 0.5), 7)
3.2974425
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from decimal import Decimal
from typing import Union

import numpy as np

from .errors import DomainError, LambdaEvalError, LambdaSyntaxError
from .report import VerificationReport

FUNCTIONS = ("exp", "sin", "ln")


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, Var, Call, BinOp, Pow]


# --- tokenizer -------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>\d+(?:\.\d*)?|\.\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # number | name | op | end
    text: str
    pos: int


def _tokenize(source):
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise LambdaSyntaxError(f"unexpected character {source[pos]!r}", pos, source)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(_Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(_Token("end", "", len(source)))
    return tokens


# --- parser ----------------------------------------------------------------


class _Parser:
    def __init__(self, source):
        self.source = source
        self.tokens = _tokenize(source)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def error(self, message, tok=None):
        tok = tok or self.tok
        return LambdaSyntaxError(message, tok.pos, self.source)

    def advance(self):
        tok = self.tok
        self.i += 1
        return tok

    def expect(self, text):
        if self.tok.kind != "op" or self.tok.text != text:
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return self.advance()

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            if self.tok.text == ")":
                raise self.error("unbalanced ')'")
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self):
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.advance().text
            node = BinOp(op, node, self.factor())
        return node

    def factor(self):
        node = self.base()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            tok = self.tok
            if tok.kind != "number":
                raise self.error("exponent must be a non-negative integer literal")
            if not tok.text.isdigit():
                raise self.error(f"non-integer exponent {tok.text!r}")
            self.advance()
            node = Pow(node, int(tok.text))
        return node

    def base(self):
        tok = self.tok
        if tok.kind == "number":
            self.advance()
            return Num(float(tok.text))
        if tok.kind == "name":
            self.advance()
            if tok.text == "r":
                return Var()
            if tok.text in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                if self.tok.kind == "end":
                    raise self.error("unbalanced '(': missing ')'")
                self.expect(")")
                return Call(tok.text, arg)
            nxt = self.tok
            if nxt.kind == "op" and nxt.text == "(":
                raise self.error(f"unknown function {tok.text!r}", tok)
            raise self.error(f"unknown identifier {tok.text!r}", tok)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            node = self.expr()
            if self.tok.kind == "end":
                raise self.error("unbalanced '(': missing ')'")
            self.expect(")")
            return node
        if tok.kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {tok.text!r}")


def parse_lambda(source: str) -> Expr:
    """Parse weight-function source text into an expression tree.

    Raises :class:`LambdaSyntaxError` (carrying a character position) on
    any malformed input.
    """
    if not isinstance(source, str):
        raise TypeError(f"source must be str, not {type(source).__name__}")
    if not source.strip():
        raise LambdaSyntaxError("empty expression", 0, source)
    parser = _Parser(source)
    try:
        return parser.parse()
    except RecursionError:
        raise LambdaSyntaxError("expression nested too deeply", parser.tok.pos, source) from None


# --- printing --------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _prec(node):
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Pow):
        return 3
    return 4


def _format_number(x):
    if x < 0 or not math.isfinite(x):
        raise ValueError(f"cannot print number {x!r} in the lambda grammar")
    if x.is_integer():
        return format(Decimal(int(x)), "f")
    return format(Decimal(repr(x)), "f")


def to_source(node: Expr) -> str:
    """Print an expression tree in the grammar accepted by :func:`parse_lambda`."""
    if isinstance(node, Num):
        return _format_number(node.value)
    if isinstance(node, Var):
        return "r"
    if isinstance(node, Call):
        return f"{node.func}({to_source(node.arg)})"
    if isinstance(node, Pow):
        base = to_source(node.base)
        if _prec(node.base) <= 3:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    p = _PREC[node.op]
    left = to_source(node.left)
    right = to_source(node.right)
    if _prec(node.left) < p:
        left = f"({left})"
    # operators are left-associative, so an equal-precedence right child needs parens
    if _prec(node.right) <= p:
        right = f"({right})"
    return f"{left}{node.op}{right}"


# --- evaluation ------------------------------------------------------------


def _eval(node, r):
    if isinstance(node, Var):
        return r
    if isinstance(node, Num):
        return node.value
    if isinstance(node, BinOp):
        a = _eval(node.left, r)
        b = _eval(node.right, r)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if b == 0:
            raise LambdaEvalError("division by zero", r)
        return a / b
    if isinstance(node, Pow):
        return _eval(node.base, r) ** node.exponent
    x = _eval(node.arg, r)
    if node.func == "exp":
        try:
            return math.exp(x)
        except OverflowError:
            raise LambdaEvalError(f"exp overflow for argument {x!r}", r) from None
    if node.func == "sin":
        return math.sin(x)
    if x <= 0:
        raise LambdaEvalError(f"ln of non-positive argument {x!r}", r)
    return math.log(x)


def eval_lambda(expr: Expr, r: float) -> float:
    """Value of the weight function at r, for r in [0, 1)."""
    r = float(r)
    if not 0.0 <= r < 1.0:
        raise DomainError(f"lambda is evaluated on [0, 1), got r={r}")
    try:
        value = float(_eval(expr, r))
    except OverflowError:
        raise LambdaEvalError("floating-point overflow", r) from None
    if not math.isfinite(value):
        raise LambdaEvalError(f"non-finite value {value!r}", r)
    return value


def check_nonnegative(expr: Expr, grid_size: int = 100) -> VerificationReport:
    """Check lambda(r) >= 0 on the uniform grid {0, 1/n, ..., 1 - 1/n}.

    The report's value is the minimum found, its witness the argmin.
    """
    if grid_size < 2:
        raise DomainError(f"grid_size must be >= 2, got {grid_size}")
    grid = np.arange(grid_size) / grid_size
    values = [eval_lambda(expr, r) for r in grid]
    i = int(np.argmin(values))
    lo = values[i]
    return VerificationReport(
        claim="lambda_nonnegative",
        value=-lo,
        bound=0.0,
        slack=0.0,
        witness={"r": float(grid[i]), "min": lo, "lambda": to_source(expr)},
    )


def as_lambda(obj) -> Expr:
    """Accept either source text or an already-parsed tree."""
    if isinstance(obj, str):
        return parse_lambda(obj)
    if isinstance(obj, (Num, Var, Call, BinOp, Pow)):
        return obj
    raise TypeError(f"expected lambda source or expression, got {type(obj).__name__}")
