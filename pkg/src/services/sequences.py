"""
Fibonacci and Lucas Sequence Service
Exact F_n and L_n for any signed index.

Fast doubling drives the public functions; plain iteration from (0, 1) is
kept as an independent oracle for tests and the benchmark.
"""
import math
from functools import lru_cache
from typing import Tuple

from src.core.exceptions import NegativeIndexError

_LOG10_ALPHA = math.log10((1 + math.sqrt(5)) / 2)
_LOG10_SQRT5 = math.log10(math.sqrt(5))


def fib_doubling_pair(n: int) -> Tuple[int, int]:
    """
    Return (F_n, F_{n+1}) for n >= 0 by fast doubling.

    Walks the bits of n from the top using
        F_{2m}   = F_m * (2*F_{m+1} - F_m)
        F_{2m+1} = F_m^2 + F_{m+1}^2

    Raises:
        NegativeIndexError: If n < 0
    """
    if n < 0:
        raise NegativeIndexError(f"fast doubling needs n >= 0, got {n}")
    a, b = 0, 1
    for bit in bin(n)[2:]:
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == '1':
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fib_pair_oracle(n: int) -> Tuple[int, int]:
    """
    Return (F_n, F_{n+1}) by plain iteration from (0, 1).

    Raises:
        NegativeIndexError: If n < 0
    """
    if n < 0:
        raise NegativeIndexError(f"the iterative oracle needs n >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a, b


@lru_cache(maxsize=4096)
def fib(n: int) -> int:
    """
    Exact Fibonacci number for any signed index.

    F_{-n} = (-1)^(n+1) * F_n.

    Example:
        >>> fib(10)
        55
        >>> fib(-4)
        -3
    """
    if n >= 0:
        return fib_doubling_pair(n)[0]
    value = fib_doubling_pair(-n)[0]
    return value if -n % 2 == 1 else -value


@lru_cache(maxsize=4096)
def lucas(n: int) -> int:
    """
    Exact Lucas number for any signed index.

    L_n = 2*F_{n+1} - F_n for n >= 0, and L_{-n} = (-1)^n * L_n.

    Example:
        >>> lucas(6)
        18
        >>> lucas(-3)
        -4
    """
    m = abs(n)
    f, f_next = fib_doubling_pair(m)
    value = 2 * f_next - f
    if n < 0 and m % 2 == 1:
        return -value
    return value


def decimal_digits(value: int) -> int:
    """
    Number of decimal digits of |value| (1 for zero), computed without str().

    Large integers exceed the interpreter's int-to-str conversion limit, so
    the count starts from the bit length and is corrected with exact powers
    of ten.
    """
    value = abs(value)
    if value == 0:
        return 1
    digits = max(1, int((value.bit_length() - 1) * math.log10(2)))
    while 10 ** digits <= value:
        digits += 1
    while digits > 1 and 10 ** (digits - 1) > value:
        digits -= 1
    return digits


def estimate_fib_digits(n: int) -> int:
    """Float estimate floor(n*log10(alpha) - log10(sqrt 5)) + 1 of the digits of F_n (n >= 1)."""
    return math.floor(n * _LOG10_ALPHA - _LOG10_SQRT5) + 1
