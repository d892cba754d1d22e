"""
Identity DSL Syntax Tree
AST nodes for expressions over F, L, BF, BL, the units i, j, k, integer
literals and (-1)^e style powers, plus the pretty-printer.

`render` prints parentheses exactly where Paren nodes are, so rendering a
parsed tree and parsing it again gives the same tree.
"""
from dataclasses import dataclass
from typing import Dict, Tuple, Union

from src.core.exceptions import UnboundVariableError
from src.models.claim import canonical_params

VARIABLES = ('n', 'm', 'r')
SEQUENCE_KINDS = ('F', 'L', 'BF', 'BL')
UNITS = ('i', 'j', 'k')


@dataclass(frozen=True)
class IndexExpr:
    """
    Linear form const + sum(coef * var) over the variables n, m, r.

    Attributes:
        const: Constant term
        coeffs: (variable, coefficient) pairs in canonical order, zeros dropped
    """
    const: int = 0
    coeffs: Tuple[Tuple[str, int], ...] = ()

    @staticmethod
    def constant(value: int) -> 'IndexExpr':
        return IndexExpr(value, ())

    @staticmethod
    def variable(name: str) -> 'IndexExpr':
        return IndexExpr(0, ((name, 1),))

    @staticmethod
    def _normalise(const: int, coeffs: Dict[str, int]) -> 'IndexExpr':
        names = canonical_params(name for name, coef in coeffs.items() if coef)
        return IndexExpr(const, tuple((name, coeffs[name]) for name in names))

    def is_constant(self) -> bool:
        return not self.coeffs

    def variables(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.coeffs)

    def add(self, other: 'IndexExpr') -> 'IndexExpr':
        coeffs = dict(self.coeffs)
        for name, coef in other.coeffs:
            coeffs[name] = coeffs.get(name, 0) + coef
        return IndexExpr._normalise(self.const + other.const, coeffs)

    def scale(self, factor: int) -> 'IndexExpr':
        return IndexExpr._normalise(self.const * factor, {name: coef * factor for name, coef in self.coeffs})

    def negate(self) -> 'IndexExpr':
        return self.scale(-1)

    def subtract(self, other: 'IndexExpr') -> 'IndexExpr':
        return self.add(other.negate())

    def evaluate(self, bindings: Dict[str, int]) -> int:
        """
        Raises:
            UnboundVariableError: If a variable has no binding
        """
        total = self.const
        for name, coef in self.coeffs:
            if name not in bindings:
                raise UnboundVariableError(name)
            total += coef * bindings[name]
        return total

    def render(self) -> str:
        parts = []
        for name, coef in self.coeffs:
            magnitude = abs(coef)
            body = name if magnitude == 1 else f"{magnitude}*{name}"
            if not parts:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if coef > 0 else f" - {body}")
        if not parts:
            return str(self.const)
        if self.const > 0:
            parts.append(f" + {self.const}")
        elif self.const < 0:
            parts.append(f" - {-self.const}")
        return ''.join(parts)

    def render_exponent(self) -> str:
        """Bare when it is a non-negative literal or a single variable, else parenthesised."""
        if self.is_constant() and self.const >= 0:
            return str(self.const)
        if self.const == 0 and len(self.coeffs) == 1 and self.coeffs[0][1] == 1:
            return self.coeffs[0][0]
        return f"({self.render()})"


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class UnitLit:
    unit: str


@dataclass(frozen=True)
class SeqTerm:
    kind: str
    index: IndexExpr


@dataclass(frozen=True)
class Neg:
    operand: 'Expr'


@dataclass(frozen=True)
class Add:
    left: 'Expr'
    right: 'Expr'


@dataclass(frozen=True)
class Sub:
    left: 'Expr'
    right: 'Expr'


@dataclass(frozen=True)
class Mul:
    left: 'Expr'
    right: 'Expr'


@dataclass(frozen=True)
class Pow:
    base: 'Expr'
    exponent: IndexExpr


@dataclass(frozen=True)
class Paren:
    inner: 'Expr'


Expr = Union[IntLit, UnitLit, SeqTerm, Neg, Add, Sub, Mul, Pow, Paren]

_BINARY_SYMBOLS = {Add: ' + ', Sub: ' - ', Mul: '*'}


def render(expr: Expr) -> str:
    """Print an expression back to DSL text."""
    if isinstance(expr, IntLit):
        return str(expr.value)
    if isinstance(expr, UnitLit):
        return expr.unit
    if isinstance(expr, SeqTerm):
        return f"{expr.kind}[{expr.index.render()}]"
    if isinstance(expr, Neg):
        return f"-{render(expr.operand)}"
    if isinstance(expr, (Add, Sub, Mul)):
        return f"{render(expr.left)}{_BINARY_SYMBOLS[type(expr)]}{render(expr.right)}"
    if isinstance(expr, Pow):
        return f"{render(expr.base)}^{expr.exponent.render_exponent()}"
    if isinstance(expr, Paren):
        return f"({render(expr.inner)})"
    raise TypeError(f"not an expression node: {expr!r}")


def _children(node: Expr) -> Tuple[Expr, ...]:
    if isinstance(node, Neg):
        return (node.operand,)
    if isinstance(node, Paren):
        return (node.inner,)
    if isinstance(node, Pow):
        return (node.base,)
    if isinstance(node, (Add, Sub, Mul)):
        return (node.left, node.right)
    return ()


def free_variables(expr: Expr) -> Tuple[str, ...]:
    """Variables referenced anywhere in the tree, in canonical order."""
    found = set()

    def walk(node: Expr):
        if isinstance(node, SeqTerm):
            found.update(node.index.variables())
        elif isinstance(node, Pow):
            found.update(node.exponent.variables())
        for child in _children(node):
            walk(child)

    walk(expr)
    return canonical_params(found)


def is_scalar_expr(expr: Expr) -> bool:
    """True when the tree uses no unit and no BF/BL term, so its value is an embedded integer."""
    if isinstance(expr, UnitLit):
        return False
    if isinstance(expr, SeqTerm):
        return expr.kind in ('F', 'L')
    return all(is_scalar_expr(child) for child in _children(expr))
