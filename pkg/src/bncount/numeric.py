"""Exact scalar helpers: factorials, reciprocal factorials, symmetric functions.

Integers are plain Python ``int`` and rationals are ``fractions.Fraction``;
both are arbitrary precision and ``Fraction`` is always kept reduced with a
positive denominator.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import PreconditionError

__all__ = [
    "FactorialTable",
    "factorial",
    "inv_factorial",
    "elementary_symmetric",
    "elementary_symmetric_all",
    "vandermonde",
    "exact_det",
    "factorial_det",
    "factorial_det_closed_form",
    "as_integer",
]


class FactorialTable:
    """Read-only table of ``n!`` for ``0 <= n <= bound``.

    The table is filled once in ``__init__`` and never mutated, so a single
    instance can be shared between threads or forked workers.
    """

    def __init__(self, bound: int = 256):
        if bound < 0:
            raise ValueError("bound must be non-negative")
        values = [1]
        for n in range(1, bound + 1):
            values.append(values[-1] * n)
        self._values = tuple(values)

    @property
    def bound(self) -> int:
        return len(self._values) - 1

    def __call__(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"factorial of negative integer {n}")
        if n < len(self._values):
            return self._values[n]
        return math.factorial(n)


_TABLE = FactorialTable()


def factorial(n: int) -> int:
    return _TABLE(n)


def inv_factorial(n: int) -> Fraction:
    """``1/n!`` with the convention ``1/n! = 0`` for negative ``n``."""
    if n < 0:
        return Fraction(0)
    return Fraction(1, _TABLE(n))


def elementary_symmetric_all(values: Iterable[int], kmax: int) -> list[int]:
    # coefficients of prod(1 + x t), truncated at t^kmax; entries past len() are 0
    e = [1] + [0] * kmax
    for x in values:
        for k in range(kmax, 0, -1):
            e[k] += x * e[k - 1]
    return e


def elementary_symmetric(a: Sequence[int], k: int) -> int:
    """Elementary symmetric polynomial of degree ``k`` (1..4) in the entries of ``a``."""
    if not 1 <= k <= 4:
        raise PreconditionError(f"symmetric degree k={k} outside 1..4")
    if k > len(a):
        raise PreconditionError(f"symmetric degree k={k} exceeds length {len(a)}")
    return elementary_symmetric_all(a, k)[k]


def vandermonde(b: Sequence[int]) -> int:
    """``prod_{l<k} (b_k - b_l)``."""
    out = 1
    for k in range(len(b)):
        for l in range(k):
            out *= b[k] - b[l]
    return out


def exact_det(rows: Sequence[Sequence[Fraction | int]]) -> Fraction:
    """Determinant by Gaussian elimination over the rationals."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for i in range(col + 1, n):
            f = m[i][col] / p
            if f:
                row_i, row_c = m[i], m[col]
                for j in range(col, n):
                    row_i[j] -= f * row_c[j]
    return det


def _check_distinct_nonneg(b: Sequence[int]) -> None:
    for i, x in enumerate(b):
        if x < 0:
            raise PreconditionError(f"entry b_{i}={x} is negative")
    for i in range(1, len(b)):
        if b[i] <= b[i - 1]:
            raise PreconditionError(
                f"entries not strictly increasing: b_{i - 1}={b[i - 1]}, b_{i}={b[i]}"
            )


def factorial_matrix(b: Sequence[int]) -> list[list[Fraction]]:
    """Matrix with rows for ``b_r, ..., b_0`` and entries ``1/(b_i - (r - c))!``.

    The rightmost column holds ``1/b_i!``, the leftmost ``1/(b_i - r)!``.
    """
    r = len(b) - 1
    return [[inv_factorial(b[i] - (r - c)) for c in range(r + 1)] for i in range(r, -1, -1)]


def factorial_det(b: Sequence[int]) -> Fraction:
    """Determinant of :func:`factorial_matrix`, evaluated by elimination."""
    _check_distinct_nonneg(b)
    return exact_det(factorial_matrix(b))


def factorial_det_closed_form(b: Sequence[int]) -> Fraction:
    denom = 1
    for x in b:
        denom *= factorial(x)
    return Fraction(vandermonde(b), denom)


def as_integer(x: Fraction | int, what: str = "value") -> int:
    """Return ``x`` as an ``int``; fail loudly if it has a denominator."""
    x = Fraction(x)
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {x}")
    return x.numerator
