"""
Exact Quadratic Field Model
Rational and Q(sqrt 5) arithmetic with zero rounding error.

Rationals are `fractions.Fraction`, which keeps every value in canonical
form (positive denominator, numerator and denominator coprime), so equality
of two QuadElem values is a plain field-wise comparison.
"""
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Optional, Union

from src.core.exceptions import ZeroToNegativePowerError

Coercible = Union[int, Fraction, 'QuadElem']


@dataclass(frozen=True)
class QuadElem:
    """
    Exact element p + q*sqrt(5) of the quadratic field Q(sqrt 5).

    Attributes:
        p: Rational part
        q: Coefficient of sqrt(5)
    """
    p: Fraction = Fraction(0)
    q: Fraction = Fraction(0)

    def __post_init__(self):
        # Normalise ints (and other rationals) so equality stays field-wise
        object.__setattr__(self, 'p', Fraction(self.p))
        object.__setattr__(self, 'q', Fraction(self.q))

    @staticmethod
    def coerce(value: Coercible) -> 'QuadElem':
        """Lift an int or Fraction into the field."""
        if isinstance(value, QuadElem):
            return value
        if isinstance(value, (int, _RationalABC)):
            return QuadElem(Fraction(value), Fraction(0))
        raise TypeError(f"Cannot interpret {type(value).__name__} as an element of Q(sqrt 5)")

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def __eq__(self, other):
        # Compare against plain ints/fractions too, so 0 == QuadElem(0, 0)
        if isinstance(other, QuadElem):
            return self.p == other.p and self.q == other.q
        if isinstance(other, (int, _RationalABC)):
            return self.q == 0 and self.p == other
        return NotImplemented

    def __hash__(self):
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q))

    def conjugate(self) -> 'QuadElem':
        """Galois conjugate p - q*sqrt(5)."""
        return QuadElem(self.p, -self.q)

    def norm(self) -> Fraction:
        """Field norm p^2 - 5q^2 (zero only for the zero element)."""
        return self.p * self.p - 5 * self.q * self.q

    def inverse(self) -> 'QuadElem':
        return qf_inverse(self)

    def __add__(self, other):
        try:
            return qf_add(self, QuadElem.coerce(other))
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        try:
            return qf_sub(self, QuadElem.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        try:
            return qf_sub(QuadElem.coerce(other), self)
        except TypeError:
            return NotImplemented

    def __mul__(self, other):
        try:
            return qf_mul(self, QuadElem.coerce(other))
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            return qf_mul(self, qf_inverse(QuadElem.coerce(other)))
        except TypeError:
            return NotImplemented

    def __rtruediv__(self, other):
        try:
            return qf_mul(QuadElem.coerce(other), qf_inverse(self))
        except TypeError:
            return NotImplemented

    def __neg__(self) -> 'QuadElem':
        return QuadElem(-self.p, -self.q)

    def __pow__(self, exponent: int) -> 'QuadElem':
        return qf_pow(self, exponent)

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        if self.p == 0:
            return f"{self.q}*sqrt5"
        sign = '+' if self.q > 0 else '-'
        return f"{self.p} {sign} {abs(self.q)}*sqrt5"


def qf_add(a: QuadElem, b: QuadElem) -> QuadElem:
    """Componentwise sum."""
    return QuadElem(a.p + b.p, a.q + b.q)


def qf_sub(a: QuadElem, b: QuadElem) -> QuadElem:
    """Componentwise difference."""
    return QuadElem(a.p - b.p, a.q - b.q)


def qf_mul(a: QuadElem, b: QuadElem) -> QuadElem:
    """
    Exact product.

    (p1 + q1*sqrt5)(p2 + q2*sqrt5) = (p1*p2 + 5*q1*q2) + (p1*q2 + p2*q1)*sqrt5
    """
    return QuadElem(a.p * b.p + 5 * a.q * b.q, a.p * b.q + b.p * a.q)


def qf_inverse(x: QuadElem) -> QuadElem:
    """
    Exact inverse 1/(p + q*sqrt5) = (p - q*sqrt5)/(p^2 - 5q^2).

    Raises:
        ZeroDivisionError: If x is zero
    """
    norm = x.norm()
    if norm == 0:
        raise ZeroDivisionError("zero has no inverse in Q(sqrt 5)")
    return QuadElem(x.p / norm, -x.q / norm)


def qf_pow(x: QuadElem, e: int) -> QuadElem:
    """
    Exact e-th power for any signed integer exponent.

    Negative exponents invert first, then square-and-multiply on |e|.

    Raises:
        ZeroToNegativePowerError: If x is zero and e < 0
    """
    if e < 0:
        if x.is_zero():
            raise ZeroToNegativePowerError(f"0 cannot be raised to the negative power {e}")
        x = qf_inverse(x)
        e = -e
    result = ONE
    base = x
    while e:
        if e & 1:
            result = qf_mul(result, base)
        e >>= 1
        if e:
            base = qf_mul(base, base)
    return result


def qf_as_integer(x: QuadElem) -> Optional[int]:
    """
    Return x as a Python int when it is a rational integer, else None.

    Example:
        >>> qf_as_integer(QuadElem(5, 0))
        5
        >>> qf_as_integer(ALPHA) is None
        True
    """
    if x.q != 0 or x.p.denominator != 1:
        return None
    return x.p.numerator


ZERO = QuadElem(0, 0)
ONE = QuadElem(1, 0)
SQRT5 = QuadElem(0, 1)
ALPHA = QuadElem(Fraction(1, 2), Fraction(1, 2))
BETA = QuadElem(Fraction(1, 2), Fraction(-1, 2))
