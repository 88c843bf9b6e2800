"""Classical and adjusted Castelnuovo numbers."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .bn import BNInput, as_sequence, rho, rho_adjusted
from .errors import PreconditionError
from .numeric import as_integer, factorial, vandermonde

__all__ = ["castelnuovo_number", "adjusted_castelnuovo"]


def castelnuovo_number(p: BNInput) -> int:
    """Number of ``g^r_d`` on a general curve of genus ``g`` when ``rho = 0``.

    >>> castelnuovo_number(BNInput(4, 1, 3))
    2
    """
    if rho(p) != 0:
        raise PreconditionError(f"castelnuovo_number needs rho=0, got rho={rho(p)}")
    value = Fraction(factorial(p.g))
    for i in range(p.r + 1):
        value *= Fraction(factorial(i), factorial(p.s + i))
    return as_integer(value, f"N{tuple(p)}")


def adjusted_castelnuovo(p: BNInput, a: Sequence[int]) -> int:
    """Number of series with vanishing sequence ``a`` at a fixed general point.

    Returns 0 when ``a_0 + g - d + r < 0``, where no such series exist.
    """
    seq = as_sequence(p, a)
    ra = rho_adjusted(p, seq)
    if ra != 0:
        raise PreconditionError(f"adjusted_castelnuovo needs rho_adjusted=0, got {ra}")
    if seq[0] + p.s < 0:
        return 0
    denom = 1
    for x in seq:
        denom *= factorial(p.s + x)
    value = Fraction(factorial(p.g) * vandermonde(seq), denom)
    return as_integer(value, f"N{tuple(p)},{tuple(seq)}")
