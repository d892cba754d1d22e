"""
Bicomplex Fibonacci and Lucas Service
BF_n = F_n + F_{n+1} i + F_{n+2} j + F_{n+3} k and BL_n likewise with Lucas
numbers, for any signed n, plus their conjugates, self-products and exact
Binet forms over Q(sqrt 5).
"""
from dataclasses import dataclass
from functools import lru_cache

from src.core.exceptions import NonIntegralValueError
from src.models.bicomplex import (
    Axis,
    Bicomplex,
    bc_conj,
    bc_map,
    bc_real_norm_sq,
    bc_scale,
    bc_selfprod,
    bc_sub,
    bc_add,
)
from src.models.exactnum import ALPHA, BETA, ONE, QuadElem, qf_as_integer, qf_inverse, qf_pow
from src.services.sequences import fib, lucas


@dataclass(frozen=True)
class BinetConstants:
    """
    Constants of the bicomplex Binet formulas.

    Attributes:
        alpha: (1 + sqrt5)/2
        beta: (1 - sqrt5)/2
        alpha_bar: 1 + alpha i + alpha^2 j + alpha^3 k
        beta_bar: 1 + beta i + beta^2 j + beta^3 k
        sqrt5: alpha - beta
    """
    alpha: QuadElem
    beta: QuadElem
    alpha_bar: Bicomplex[QuadElem]
    beta_bar: Bicomplex[QuadElem]
    sqrt5: QuadElem


@lru_cache(maxsize=1)
def binet_constants() -> BinetConstants:
    def bar(root: QuadElem) -> Bicomplex[QuadElem]:
        return Bicomplex(ONE, root, qf_pow(root, 2), qf_pow(root, 3))

    return BinetConstants(
        alpha=ALPHA,
        beta=BETA,
        alpha_bar=bar(ALPHA),
        beta_bar=bar(BETA),
        sqrt5=ALPHA - BETA,
    )


def bf(n: int) -> Bicomplex[int]:
    """
    Bicomplex Fibonacci number BF_n.

    Example:
        >>> bf(2)
        Bicomplex(w=1, x=2, y=3, z=5)
    """
    return Bicomplex(fib(n), fib(n + 1), fib(n + 2), fib(n + 3))


def bl(n: int) -> Bicomplex[int]:
    """Bicomplex Lucas number BL_n."""
    return Bicomplex(lucas(n), lucas(n + 1), lucas(n + 2), lucas(n + 3))


def bf_binet(n: int) -> Bicomplex[QuadElem]:
    """
    BF_n from (alpha_bar * alpha^n - beta_bar * beta^n) / (alpha - beta), exactly.

    Every component of the result is a rational integer; see `reduce_to_integers`.
    """
    consts = binet_constants()
    difference = bc_sub(
        bc_scale(qf_pow(consts.alpha, n), consts.alpha_bar),
        bc_scale(qf_pow(consts.beta, n), consts.beta_bar),
    )
    return bc_scale(qf_inverse(consts.sqrt5), difference)


def bl_binet(n: int) -> Bicomplex[QuadElem]:
    """BL_n from alpha_bar * alpha^n + beta_bar * beta^n, exactly."""
    consts = binet_constants()
    return bc_add(
        bc_scale(qf_pow(consts.alpha, n), consts.alpha_bar),
        bc_scale(qf_pow(consts.beta, n), consts.beta_bar),
    )


def reduce_to_integers(value: Bicomplex[QuadElem]) -> Bicomplex[int]:
    """
    Convert a Q(sqrt 5) bicomplex value with integer components to ints.

    Raises:
        NonIntegralValueError: If any component is not a rational integer
    """
    def as_int(component: QuadElem) -> int:
        integer = qf_as_integer(component)
        if integer is None:
            raise NonIntegralValueError(f"component {component} is not an integer")
        return integer

    return bc_map(as_int, value)


def bf_conj(axis: Axis, n: int) -> Bicomplex[int]:
    """Conjugate of BF_n along `axis`."""
    return bc_conj(axis, bf(n))


def bl_conj(axis: Axis, n: int) -> Bicomplex[int]:
    """Conjugate of BL_n along `axis`."""
    return bc_conj(axis, bl(n))


def bf_selfprod(axis: Axis, n: int) -> Bicomplex[int]:
    """BF_n times its `axis` conjugate: the radicand of the axis modulus of BF_n."""
    return bc_selfprod(axis, bf(n))


def bf_real_radicand(n: int) -> int:
    """
    Radicand of the real modulus |BF_n|: F_n^2 + F_{n+1}^2 + F_{n+2}^2 + F_{n+3}^2.

    Equals the real part of BF_n times its k-conjugate.
    """
    return bc_real_norm_sq(bf(n))
