"""
Core Interfaces
Structural contracts shared by the arithmetic models.
"""
from typing import Protocol, TypeVar


class RingElement(Protocol):
    """
    Contract for the scalar ring S a bicomplex number is built over.

    Any commutative ring element works: Python integers, fractions, or
    QuadElem values from the exact Q(sqrt 5) arithmetic.
    """

    def __add__(self, other): ...

    def __sub__(self, other): ...

    def __mul__(self, other): ...

    def __neg__(self): ...


S = TypeVar('S', bound=RingElement)
