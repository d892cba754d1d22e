"""
Bicomplex Number Model
The commutative ring C2 = {w + x*i + y*j + z*k} over a generic scalar ring.

Multiplication follows the unit table
    i^2 = j^2 = -1, k^2 = 1, ij = ji = k, jk = kj = -i, ik = ki = -j
and nothing else: every product in the toolkit goes through `bc_mul`.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Generic, Tuple, TypeVar

from src.core.interfaces import S

T = TypeVar('T')


class Axis(Enum):
    """Imaginary unit a conjugation flips around."""
    I = 'i'
    J = 'j'
    K = 'k'


@dataclass(frozen=True)
class Bicomplex(Generic[S]):
    """
    Bicomplex value w + x*i + y*j + z*k.

    Attributes:
        w: Real component (coefficient of 1)
        x: Coefficient of i
        y: Coefficient of j
        z: Coefficient of k = ij
    """
    w: S
    x: S
    y: S
    z: S

    def components(self) -> Tuple[S, S, S, S]:
        return (self.w, self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.components())

    def conj(self, axis: Axis) -> 'Bicomplex[S]':
        return bc_conj(axis, self)

    def __add__(self, other: 'Bicomplex[S]') -> 'Bicomplex[S]':
        if not isinstance(other, Bicomplex):
            return NotImplemented
        return bc_add(self, other)

    def __sub__(self, other: 'Bicomplex[S]') -> 'Bicomplex[S]':
        if not isinstance(other, Bicomplex):
            return NotImplemented
        return bc_sub(self, other)

    def __mul__(self, other):
        if isinstance(other, Bicomplex):
            return bc_mul(self, other)
        return bc_scale(other, self)

    def __rmul__(self, other):
        return bc_scale(other, self)

    def __neg__(self) -> 'Bicomplex[S]':
        return Bicomplex(-self.w, -self.x, -self.y, -self.z)

    def __pow__(self, exponent: int) -> 'Bicomplex[S]':
        return bc_pow(self, exponent)


@dataclass(frozen=True)
class ComplexPair(Generic[S]):
    """
    The z1 + z2*j view of a bicomplex value, with z1 = a + b*i and z2 = c + d*i.
    """
    z1_re: S
    z1_im: S
    z2_re: S
    z2_im: S


def bc_add(x: Bicomplex[S], y: Bicomplex[S]) -> Bicomplex[S]:
    """Componentwise sum."""
    return Bicomplex(x.w + y.w, x.x + y.x, x.y + y.y, x.z + y.z)


def bc_sub(x: Bicomplex[S], y: Bicomplex[S]) -> Bicomplex[S]:
    """Componentwise difference."""
    return Bicomplex(x.w - y.w, x.x - y.x, x.y - y.y, x.z - y.z)


def bc_mul(x: Bicomplex[S], y: Bicomplex[S]) -> Bicomplex[S]:
    """
    Ring product under the unit table.

    Args:
        x: Left factor (a1, b1, c1, d1)
        y: Right factor (a2, b2, c2, d2)

    Returns:
        (a1a2 - b1b2 - c1c2 + d1d2)
        + (a1b2 + b1a2 - c1d2 - d1c2) i
        + (a1c2 + c1a2 - b1d2 - d1b2) j
        + (a1d2 + d1a2 + b1c2 + c1b2) k
    """
    a1, b1, c1, d1 = x.w, x.x, x.y, x.z
    a2, b2, c2, d2 = y.w, y.x, y.y, y.z
    return Bicomplex(
        a1 * a2 - b1 * b2 - c1 * c2 + d1 * d2,
        a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2,
        a1 * c2 + c1 * a2 - b1 * d2 - d1 * b2,
        a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
    )


def bc_scale(scalar: S, x: Bicomplex[S]) -> Bicomplex[S]:
    """Scalar multiple scalar*x, componentwise."""
    return Bicomplex(scalar * x.w, scalar * x.x, scalar * x.y, scalar * x.z)


def bc_pow(x: Bicomplex[S], exponent: int) -> Bicomplex[S]:
    """
    Non-negative integer power by square and multiply.

    Raises:
        ValueError: If exponent is negative (the ring has zero divisors)
    """
    if exponent < 0:
        raise ValueError("bicomplex powers need a non-negative exponent")
    result = bc_one_like(x)
    base = x
    while exponent:
        if exponent & 1:
            result = bc_mul(result, base)
        exponent >>= 1
        if exponent:
            base = bc_mul(base, base)
    return result


def bc_conj(axis: Axis, x: Bicomplex[S]) -> Bicomplex[S]:
    """
    The three conjugations.

    I: (w, -x, y, -z)   J: (w, x, -y, -z)   K: (w, -x, -y, z)
    """
    if axis is Axis.I:
        return Bicomplex(x.w, -x.x, x.y, -x.z)
    if axis is Axis.J:
        return Bicomplex(x.w, x.x, -x.y, -x.z)
    return Bicomplex(x.w, -x.x, -x.y, x.z)


def bc_selfprod(axis: Axis, x: Bicomplex[S]) -> Bicomplex[S]:
    """x times its conjugate along `axis`; the radicand of the axis modulus."""
    return bc_mul(x, bc_conj(axis, x))


def bc_real_norm_sq(x: Bicomplex[S]) -> S:
    """Radicand of the real modulus: w^2 + x^2 + y^2 + z^2."""
    return x.w * x.w + x.x * x.x + x.y * x.y + x.z * x.z


def bc_map(func: Callable[[S], T], x: Bicomplex[S]) -> Bicomplex[T]:
    """Apply `func` to each component."""
    return Bicomplex(func(x.w), func(x.x), func(x.y), func(x.z))


def bc_from_scalar(scalar: S) -> Bicomplex[S]:
    """Embed a scalar as (s, 0, 0, 0)."""
    zero = scalar - scalar
    return Bicomplex(scalar, zero, zero, zero)


def bc_one_like(x: Bicomplex[S]) -> Bicomplex[S]:
    """Multiplicative identity in the scalar ring of x."""
    zero = x.w - x.w
    return Bicomplex(zero + 1, zero, zero, zero)


def complex_pair_view(x: Bicomplex[S]) -> ComplexPair[S]:
    """Reindex (w, x, y, z) as z1 = w + x*i, z2 = y + z*i."""
    return ComplexPair(x.w, x.x, x.y, x.z)


def from_complex_pair(pair: ComplexPair[S]) -> Bicomplex[S]:
    """Inverse of `complex_pair_view`."""
    return Bicomplex(pair.z1_re, pair.z1_im, pair.z2_re, pair.z2_im)


ZERO: Bicomplex[int] = Bicomplex(0, 0, 0, 0)
ONE: Bicomplex[int] = Bicomplex(1, 0, 0, 0)
I: Bicomplex[int] = Bicomplex(0, 1, 0, 0)
J: Bicomplex[int] = Bicomplex(0, 0, 1, 0)
K: Bicomplex[int] = Bicomplex(0, 0, 0, 1)
