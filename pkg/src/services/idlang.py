"""
Identity DSL Service
Tokenizer, recursive-descent parser and exact evaluator for identities such as

    BF[n+1]*BF[n-1] - BF[n]^2 == 3*(-1)^n*(2*j + k)

Grammar:
    eqn      := expr "==" expr
    expr     := term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := atom ("^" exponent)? | "-" factor
    atom     := INT | "i" | "j" | "k" | seq | "(" expr ")"
    seq      := ("F" | "L" | "BF" | "BL") "[" intexp "]"
    exponent := "-" exponent | INT | VAR | "(" intexp ")"
    intexp   := linear integer expression over n, m, r
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from src.core.exceptions import (
    BindingOutOfDomainError,
    ExpressionSyntaxError,
    NegativePowerOfNonUnitError,
    NonLinearIndexError,
    UnknownSequenceKindError,
)
from src.models.bicomplex import I, J, K, ONE, Bicomplex, bc_from_scalar, bc_mul, bc_pow
from src.models.claim import ClaimReport, ClaimSpec, ParamGrid
from src.models.expr import (
    SEQUENCE_KINDS,
    UNITS,
    VARIABLES,
    Add,
    Expr,
    IndexExpr,
    IntLit,
    Mul,
    Neg,
    Paren,
    Pow,
    SeqTerm,
    Sub,
    UnitLit,
    free_variables,
)
from src.services.bifib import bf, bl
from src.services.identity_engine import verify_spec
from src.services.sequences import fib, lucas

logger = logging.getLogger(__name__)

INT = 'INT'
NAME = 'NAME'
OP = 'OP'
EOF = 'EOF'

_SINGLE_CHAR_OPS = '+-*^()[]'


def _is_ascii_digit(char: str) -> bool:
    # str.isdigit also accepts superscripts and other scripts' digits
    return '0' <= char <= '9'


_ATOM_START = ('INT', 'i', 'j', 'k', 'F[', 'L[', 'BF[', 'BL[', '(', '-')
_INDEX_START = ('INT', 'n', 'm', 'r', '(', '-')
_UNIT_VALUES = {'i': I, 'j': J, 'k': K}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text: str) -> List[Token]:
    """
    Split DSL text into tokens; offsets are UTF-8 byte offsets.

    Raises:
        ExpressionSyntaxError: On a character no token can start with
    """
    tokens = []
    pos = 0
    length = len(text)

    def byte_offset(index: int) -> int:
        return len(text[:index].encode('utf-8'))

    while pos < length:
        char = text[pos]
        if char.isspace():
            pos += 1
        elif _is_ascii_digit(char):
            start = pos
            while pos < length and _is_ascii_digit(text[pos]):
                pos += 1
            tokens.append(Token(INT, text[start:pos], byte_offset(start)))
        elif char.isalpha() or char == '_':
            start = pos
            while pos < length and (text[pos].isalnum() or text[pos] == '_'):
                pos += 1
            tokens.append(Token(NAME, text[start:pos], byte_offset(start)))
        elif text.startswith('==', pos):
            tokens.append(Token(OP, '==', byte_offset(pos)))
            pos += 2
        elif char in _SINGLE_CHAR_OPS:
            tokens.append(Token(OP, char, byte_offset(pos)))
            pos += 1
        else:
            raise ExpressionSyntaxError(f"unexpected character {char!r}", byte_offset(pos))
    tokens.append(Token(EOF, '', byte_offset(length)))
    return tokens


class Parser:
    """Recursive-descent parser over a token list."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    # --- token helpers ---------------------------------------------------

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind != EOF:
            self.pos += 1
        return token

    def at_op(self, symbol: str) -> bool:
        token = self.peek()
        return token.kind == OP and token.text == symbol

    def error(self, message: str, expected) -> ExpressionSyntaxError:
        token = self.peek()
        found = 'end of input' if token.kind == EOF else repr(token.text)
        return ExpressionSyntaxError(f"{message}, found {found}", token.offset, expected)

    def expect_op(self, symbol: str) -> Token:
        if not self.at_op(symbol):
            raise self.error(f"expected {symbol!r}", (symbol,))
        return self.advance()

    def expect_end(self):
        if self.peek().kind != EOF:
            raise self.error("unexpected trailing input", ('end of input', '+', '-', '*', '^'))

    # --- entry points ----------------------------------------------------

    def parse_expression(self) -> Expr:
        expr = self.expr()
        self.expect_end()
        return expr

    def parse_equation(self) -> Tuple[Expr, Expr]:
        lhs = self.expr()
        if not self.at_op('=='):
            raise self.error("expected '=='", ('==', '+', '-', '*', '^'))
        self.advance()
        rhs = self.expr()
        self.expect_end()
        return lhs, rhs

    # --- expressions -----------------------------------------------------

    def expr(self) -> Expr:
        node = self.term()
        while self.at_op('+') or self.at_op('-'):
            symbol = self.advance().text
            right = self.term()
            node = Add(node, right) if symbol == '+' else Sub(node, right)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.at_op('*'):
            self.advance()
            node = Mul(node, self.factor())
        return node

    def factor(self) -> Expr:
        if self.at_op('-'):
            self.advance()
            return Neg(self.factor())
        base = self.atom()
        if self.at_op('^'):
            self.advance()
            return Pow(base, self.exponent())
        return base

    def atom(self) -> Expr:
        token = self.peek()
        if token.kind == INT:
            self.advance()
            return IntLit(int(token.text))
        if token.kind == OP and token.text == '(':
            self.advance()
            inner = self.expr()
            self.expect_op(')')
            return Paren(inner)
        if token.kind == NAME:
            following = self.peek(1)
            opens_bracket = following.kind == OP and following.text == '['
            if token.text in UNITS and not opens_bracket:
                self.advance()
                return UnitLit(token.text)
            if opens_bracket:
                if token.text not in SEQUENCE_KINDS:
                    raise UnknownSequenceKindError(
                        f"unknown sequence {token.text!r}", token.offset, [f"{kind}[" for kind in SEQUENCE_KINDS]
                    )
                self.advance()
                self.advance()
                index = self.index_expr()
                self.expect_op(']')
                return SeqTerm(token.text, index)
            if token.text in VARIABLES:
                raise self.error(f"variable {token.text!r} may only appear inside an index or exponent", _ATOM_START)
        raise self.error("expected a term", _ATOM_START)

    # --- index expressions -----------------------------------------------

    def exponent(self) -> IndexExpr:
        if self.at_op('-'):
            self.advance()
            return self.exponent().negate()
        return self.index_atom()

    def index_expr(self) -> IndexExpr:
        value = self.index_term()
        while self.at_op('+') or self.at_op('-'):
            symbol = self.advance().text
            right = self.index_term()
            value = value.add(right) if symbol == '+' else value.subtract(right)
        return value

    def index_term(self) -> IndexExpr:
        value = self.index_unary()
        while self.at_op('*'):
            star = self.advance()
            right = self.index_unary()
            if value.is_constant():
                value = right.scale(value.const)
            elif right.is_constant():
                value = value.scale(right.const)
            else:
                raise NonLinearIndexError("product of two variable terms in an index", star.offset)
        return value

    def index_unary(self) -> IndexExpr:
        if self.at_op('-'):
            self.advance()
            return self.index_unary().negate()
        return self.index_atom()

    def index_atom(self) -> IndexExpr:
        token = self.peek()
        if token.kind == INT:
            self.advance()
            return IndexExpr.constant(int(token.text))
        if token.kind == NAME and token.text in VARIABLES:
            self.advance()
            return IndexExpr.variable(token.text)
        if token.kind == OP and token.text == '(':
            self.advance()
            value = self.index_expr()
            self.expect_op(')')
            return value
        raise self.error("expected an index", _INDEX_START)


def parse(text: str) -> Expr:
    """
    Parse one DSL expression.

    Raises:
        ExpressionSyntaxError: With byte offset and expected tokens
        UnknownSequenceKindError: For sequence names other than F, L, BF, BL
        NonLinearIndexError: For products of variables inside an index
    """
    return Parser(text).parse_expression()


def parse_equation(text: str) -> Tuple[Expr, Expr]:
    """Parse 'lhs == rhs' into its two sides."""
    return Parser(text).parse_equation()


def eval_expr(expr: Expr, bindings: Optional[Dict[str, int]] = None) -> Bicomplex[int]:
    """
    Evaluate exactly. Scalars embed as (s, 0, 0, 0); units are basis vectors.

    Raises:
        UnboundVariableError: If an index or exponent uses an unbound variable
        NegativePowerOfNonUnitError: For a negative exponent on a base other than +1/-1
    """
    bindings = bindings or {}
    if isinstance(expr, IntLit):
        return bc_from_scalar(expr.value)
    if isinstance(expr, UnitLit):
        return _UNIT_VALUES[expr.unit]
    if isinstance(expr, SeqTerm):
        index = expr.index.evaluate(bindings)
        if expr.kind == 'F':
            return bc_from_scalar(fib(index))
        if expr.kind == 'L':
            return bc_from_scalar(lucas(index))
        return bf(index) if expr.kind == 'BF' else bl(index)
    if isinstance(expr, Neg):
        return -eval_expr(expr.operand, bindings)
    if isinstance(expr, Add):
        return eval_expr(expr.left, bindings) + eval_expr(expr.right, bindings)
    if isinstance(expr, Sub):
        return eval_expr(expr.left, bindings) - eval_expr(expr.right, bindings)
    if isinstance(expr, Mul):
        return bc_mul(eval_expr(expr.left, bindings), eval_expr(expr.right, bindings))
    if isinstance(expr, Paren):
        return eval_expr(expr.inner, bindings)
    if isinstance(expr, Pow):
        exponent = expr.exponent.evaluate(bindings)
        base = eval_expr(expr.base, bindings)
        if exponent >= 0:
            return bc_pow(base, exponent)
        if base == ONE:
            return ONE
        if base == -ONE:
            return -ONE if exponent % 2 else ONE
        raise NegativePowerOfNonUnitError(f"negative exponent {exponent} on a base other than +1/-1")
    raise TypeError(f"not an expression node: {expr!r}")


def equation_claim(text: str) -> ClaimSpec:
    """Wrap 'lhs == rhs' as an ad hoc claim over its free variables."""
    lhs, rhs = parse_equation(text)
    params = free_variables(Add(lhs, rhs))
    return ClaimSpec(
        claim_id='DSL',
        citation=text,
        params=params,
        lower_bounds={},
        lhs=lambda b: eval_expr(lhs, b),
        rhs_forms=(lambda b: eval_expr(rhs, b),),
        domain_text='all integers',
    )


def check_equation(text: str, grid: ParamGrid) -> ClaimReport:
    """
    Verify an ad hoc 'lhs == rhs' over a grid, with the engine's semantics.

    Raises:
        ExpressionSyntaxError: If either side fails to parse
        BindingOutOfDomainError: If the grid misses a free variable
    """
    claim = equation_claim(text)
    missing = [name for name in claim.params if name not in grid.ranges]
    if missing:
        raise BindingOutOfDomainError(f"no range given for {', '.join(missing)}")
    logger.debug("checking %s over %s", text, grid.to_dict())
    return verify_spec(claim, grid.with_defaults(claim.params, {}))
