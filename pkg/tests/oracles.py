"""Independent reference computations the suites compare against."""
from src.models.bicomplex import Bicomplex

# Products of the basis (1, i, j, k): UNIT_TABLE[a][b] = (sign, index of the result)
UNIT_TABLE = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (1, 3), (-1, 0), (-1, 1)],
    [(1, 3), (-1, 2), (-1, 1), (1, 0)],
]


def table_product(x, y):
    """16-term expansion of x*y over the unit table."""
    out = [0, 0, 0, 0]
    for a, xa in enumerate(x.components()):
        for b, yb in enumerate(y.components()):
            sign, index = UNIT_TABLE[a][b]
            out[index] += sign * xa * yb
    return Bicomplex(*out)


def iterative_fib(n):
    """F_n for any signed n by stepping the recurrence from (0, 1)."""
    a, b = 0, 1
    if n >= 0:
        for _ in range(n):
            a, b = b, a + b
        return a
    for _ in range(-n):
        a, b = b - a, a
    return a


def iterative_lucas(n):
    return iterative_fib(n - 1) + iterative_fib(n + 1)
