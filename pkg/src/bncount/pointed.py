"""Pointed Castelnuovo numbers and their closed-form specializations.

``pointed_count(p, a)`` counts pairs ``(point, series)`` on a general curve
where the series has vanishing sequence exactly ``a`` at the point, in the
case ``rho_adjusted(p, a) == -1``.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .bn import BNInput, VanishingSeq, as_sequence, rho, rho_adjusted
from .castelnuovo import castelnuovo_number
from .errors import PreconditionError
from .numeric import as_integer, factorial, inv_factorial, vandermonde

__all__ = [
    "pointed_count",
    "pencil_count",
    "plucker_count",
    "cusp_count",
    "check_pointed_input",
    "shifted",
]


def shifted(a: Sequence[int], *positions: int, by: int = 1) -> tuple[int, ...]:
    """Copy of ``a`` with ``by`` subtracted at each listed position."""
    b = list(a)
    for j in positions:
        b[j] -= by
    return tuple(b)


def check_pointed_input(p: BNInput, a: Sequence[int]) -> VanishingSeq:
    if p.g < 2:
        raise PreconditionError(f"pointed count needs g >= 2, got g={p.g}")
    seq = as_sequence(p, a)
    ra = rho_adjusted(p, seq)
    if ra != -1:
        raise PreconditionError(f"pointed count needs rho_adjusted=-1, got {ra}")
    return seq


def pointed_count(p: BNInput, a: Sequence[int]) -> int:
    """Number of pairs ``(x, l)`` with ``l`` a ``g^r_d`` whose vanishing at ``x`` is ``a``.

    Sum over pairs ``j1 < j2`` of ``((a_j2 - a_j1)^2 - 1)`` times the
    Vandermonde product of ``a`` lowered by one at ``j1`` and ``j2``, divided by
    the factorials ``(s + a_i - [i in {j1, j2}])!``; reciprocal factorials of
    negative integers vanish.
    """
    seq = check_pointed_input(p, a)
    s = p.s
    total = Fraction(0)
    for j1, j2 in combinations(range(len(seq)), 2):
        weight = (seq[j2] - seq[j1]) ** 2 - 1
        if weight == 0:
            continue
        b = shifted(seq, j1, j2)
        term = Fraction(weight * vandermonde(b))
        for x in b:
            term *= inv_factorial(s + x)
            if not term:
                break
        total += term
    value = as_integer(factorial(p.g) * total, f"n{tuple(p)},{tuple(seq)}")
    if value < 0:
        raise ArithmeticError(f"negative pointed count {value} at {tuple(p)}, {tuple(seq)}")
    return value


def pencil_count(g: int, d: int) -> int:
    """Pointed count for pencils with vanishing ``(0, 2d - g)``."""
    if g < 2 or not g + 2 <= 2 * d <= 2 * g:
        raise PreconditionError(f"pencil_count needs g >= 2 and g/2 + 1 <= d <= g, got g={g}, d={d}")
    m = 2 * d - g
    value = Fraction((m - 1) * m * (m + 1) * factorial(g), factorial(d) * factorial(g - d))
    return as_integer(value, f"pencil({g},{d})")


def plucker_count(p: BNInput) -> int:
    """Total number of ramification points over all ``g^r_d`` when ``rho = 0``."""
    if p.r < 1:
        raise PreconditionError(f"plucker_count needs r >= 1, got r={p.r}")
    return castelnuovo_number(p) * (p.r + 1) * (p.d + p.r * (p.g - 1))


def cusp_count(p: BNInput, n: int) -> int:
    """Pointed count for the sequence ``(0, 1, ..., r-1, n)`` when ``rho = n - r - 1 > 0``."""
    g, r = p.g, p.r
    if g < 2 or r < 1:
        raise PreconditionError(f"cusp_count needs g >= 2 and r >= 1, got g={g}, r={r}")
    if n > p.d:
        raise PreconditionError(f"vanishing order n={n} exceeds d={p.d}")
    rh = rho(p)
    if rh != n - r - 1 or rh <= 0:
        raise PreconditionError(f"cusp_count needs rho = n-r-1 > 0, got rho={rh}, n-r-1={n - r - 1}")
    s = p.s
    value = Fraction(factorial(g) * n * (n * n - 1)) * inv_factorial(s - 1) * inv_factorial(s + n - 1)
    value /= factorial(r - 1)
    for i in range(2, r + 1):
        value *= factorial(i) * (n - i) * inv_factorial(s - 1 + i)
    return as_integer(value, f"cusp{tuple(p)},{n}")
