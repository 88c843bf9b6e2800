"""Independent evaluations of the pointed Castelnuovo number.

Two routes that do not go through :func:`bncount.pointed.pointed_count`:

* :func:`pointed_via_det` expands the flag-bundle determinant into three sums
  over single and double lowerings of ``a``.
* :func:`pointed_via_sym` writes the same bracket as ``P2 s^2 + P3 s + P4``
  with ``P_i`` closed-form in ``r`` and the elementary symmetric values of ``a``.

Also here: the bracket polynomials ``f`` (compact form) and ``h`` (expanded
determinant), the transcribed per-``r`` expansions of ``h`` for ``r = 1..7``,
and the antisymmetric-sum identities those expansions rest on.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .bn import BNInput, VanishingSeq
from .errors import PreconditionError
from .numeric import as_integer, elementary_symmetric_all, factorial, vandermonde
from .pointed import check_pointed_input, shifted

__all__ = [
    "SymPolyValues",
    "sym_values",
    "det_bracket",
    "h_bracket",
    "pointed_via_det",
    "eval_P",
    "pointed_via_sym",
    "f_bracket",
    "H_TABLES",
    "h_bracket_explicit",
    "lowered_sum",
    "lemma_example_check",
    "lemma_antisymmetry_check",
]


@dataclass(frozen=True)
class SymPolyValues:
    sigma1: int
    sigma2: int
    sigma3: int
    sigma4: int
    s: int
    r: int


def sym_values(a: Sequence[int], s: int = 0) -> SymPolyValues:
    e = elementary_symmetric_all(a, 4)
    return SymPolyValues(e[1], e[2], e[3], e[4], s, len(a) - 1)


def _check_oracle_input(p: BNInput, a: Sequence[int]) -> VanishingSeq:
    seq = check_pointed_input(p, a)
    if p.s + seq[0] < 0:
        raise PreconditionError(
            f"oracle formulas need g-d+r+a_0 >= 0, got {p.s + seq[0]}"
        )
    return seq


def _prefactor(p: BNInput, a: Sequence[int]) -> Fraction:
    denom = 1
    for x in a:
        denom *= factorial(p.s + x)
    return Fraction(factorial(p.g), denom)


def det_bracket(g: int, d: int, a: Sequence[int]) -> int:
    """Bracket of the expanded determinant, as a polynomial in ``g``, ``d``, ``a``."""
    r = len(a) - 1
    s = g - d + r
    total = 0
    for i, x in enumerate(a):
        c1 = x * x * (g - 1) + x * (d - g + 1)
        total += c1 * (s + x) * vandermonde(shifted(a, i))
        c2 = x - x * x
        total += c2 * (s + x) * (s + x - 1) * vandermonde(shifted(a, i, by=2))
    for i1, i2 in combinations(range(r + 1), 2):
        x1, x2 = a[i1], a[i2]
        total -= 2 * x1 * x2 * (s + x1) * (s + x2) * vandermonde(shifted(a, i1, i2))
    return total


def _genus_degree(s: int, a: Sequence[int]) -> tuple[int, int]:
    # solve rho_adjusted = -1 for g and d given s, r, a
    r = len(a) - 1
    w = sum(x - i for i, x in enumerate(a))
    return r * s + s - 1 + w, r * s + r - 1 + w


def h_bracket(s: int, r: int, a: Sequence[int]) -> int:
    """:func:`det_bracket` with ``g, d`` eliminated through ``rho_adjusted = -1``."""
    if len(a) != r + 1:
        raise PreconditionError(f"sequence has length {len(a)}, expected r+1={r + 1}")
    g, d = _genus_degree(s, a)
    return det_bracket(g, d, a)


def pointed_via_det(p: BNInput, a: Sequence[int]) -> int:
    seq = _check_oracle_input(p, a)
    value = _prefactor(p, seq) * det_bracket(p.g, p.d, seq)
    return as_integer(value, f"det-route n{tuple(p)},{tuple(seq)}")


def eval_P(r: int, a: Sequence[int]) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients ``(P2, P3, P4)`` of the bracket quotient, as polynomials in ``s``."""
    v = sym_values(a)
    s1, s2, s3 = v.sigma1, v.sigma2, v.sigma3
    R = Fraction(r)
    p2 = R * s1**2 - 2 * (R + 1) * s2 - R * (R + 1) ** 2 * (R + 2) / 12
    p3 = (
        R * s1**3
        - (3 * R + 1) * s1 * s2
        + 3 * (R + 1) * s3
        + (R**2 - 1) * s2
        - R * (R - 1) / 2 * s1**2
        - R * (R + 1) * (R + 2) / 6 * s1
        + (R - 1) * R * (R + 1) ** 2 * (R + 2) / 24
    )
    p4 = (
        s1**2 * s2
        - 4 * s2**2
        + 3 * s1 * s3
        - R * (R - 1) / 2 * s1**3
        - 3 * R * (R + 1) / 2 * s3
        + (R - 1) * (3 * R + 2) / 2 * s1 * s2
        + (R - 1) * R * (R + 1) / 6 * s1**2
        - R * (R + 1) * (2 * R + 1) / 6 * s2
        + (R - 1) * R * (R + 1) * (R + 2) / 24 * s1
        - (R - 1) * R**2 * (R + 1) ** 2 * (R + 2) / 144
    )
    return p2, p3, p4


def pointed_via_sym(p: BNInput, a: Sequence[int]) -> int:
    seq = _check_oracle_input(p, a)
    s = p.s
    p2, p3, p4 = eval_P(p.r, seq)
    value = _prefactor(p, seq) * vandermonde(seq) * (p2 * s * s + p3 * s + p4)
    return as_integer(value, f"sym-route n{tuple(p)},{tuple(seq)}")


def f_bracket(s: int, r: int, a: Sequence[int]) -> int:
    """Numerator of the compact pointed formula once the factorials are pulled out."""
    if len(a) != r + 1:
        raise PreconditionError(f"sequence has length {len(a)}, expected r+1={r + 1}")
    total = 0
    for j1, j2 in combinations(range(r + 1), 2):
        weight = (a[j2] - a[j1]) ** 2 - 1
        if weight:
            total += weight * (s + a[j1]) * (s + a[j2]) * vandermonde(shifted(a, j1, j2))
    return total


# Per-r expansions of h / vandermonde(a) in s and sigma_1..sigma_3.
# Monomial order of each row:
#   s^2: sigma1^2, sigma2, 1
#   s^1: sigma1^3, sigma1*sigma2, sigma3, sigma2, sigma1^2, sigma1, 1
#   s^0: sigma1^2*sigma2, sigma2^2, sigma1*sigma3, sigma1^3, sigma3,
#        sigma1*sigma2, sigma1^2, sigma2, sigma1, 1
H_TABLES: dict[int, tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]] = {
    1: ((1, -4, -1),
        (1, -4, 0, 0, 0, -1, 0),
        (1, -4, 0, 0, 0, 0, 0, -1, 0, 0)),
    2: ((2, -6, -6),
        (2, -7, 9, 3, -1, -4, 3),
        (1, -4, 3, -1, -9, 4, 1, -5, 1, -1)),
    3: ((3, -8, -20),
        (3, -10, 12, 8, -3, -10, 20),
        (1, -4, 3, -3, -18, 11, 4, -14, 5, -10)),
    4: ((4, -10, -50),
        (4, -13, 15, 15, -6, -20, 75),
        (1, -4, 3, -6, -30, 21, 10, -30, 15, -50)),
    5: ((5, -12, -105),
        (5, -16, 18, 24, -10, -35, 210),
        (1, -4, 3, -10, -45, 34, 20, -55, 35, -175)),
    6: ((6, -14, -196),
        (6, -19, 21, 35, -15, -56, 490),
        (1, -4, 3, -15, -63, 50, 35, -91, 70, -490)),
    7: ((7, -16, -336),
        (7, -22, 24, 48, -21, -84, 1008),
        (1, -4, 3, -21, -84, 69, 56, -140, 126, -1176)),
}


def h_bracket_explicit(s: int, r: int, a: Sequence[int]) -> int:
    """Evaluate the tabulated expansion of the determinant bracket for ``1 <= r <= 7``."""
    if r not in H_TABLES:
        raise PreconditionError(f"explicit expansion only tabulated for r in 1..7, got r={r}")
    if len(a) != r + 1:
        raise PreconditionError(f"sequence has length {len(a)}, expected r+1={r + 1}")
    v = sym_values(a)
    s1, s2, s3 = v.sigma1, v.sigma2, v.sigma3
    quad = (s1 * s1, s2, 1)
    lin = (s1**3, s1 * s2, s3, s2, s1 * s1, s1, 1)
    const = (s1 * s1 * s2, s2 * s2, s1 * s3, s1**3, s3, s1 * s2, s1 * s1, s2, s1, 1)
    c2, c1, c0 = H_TABLES[r]
    poly = (
        sum(c * m for c, m in zip(c2, quad)) * s * s
        + sum(c * m for c, m in zip(c1, lin)) * s
        + sum(c * m for c, m in zip(c0, const))
    )
    return vandermonde(a) * poly


def lowered_sum(t: int, a: Sequence[int]) -> int:
    """``sum_i a_i^t * vandermonde(a lowered by one at i)``."""
    return sum(x**t * vandermonde(shifted(a, i)) for i, x in enumerate(a))


def lemma_example_check(a: Sequence[int]) -> bool:
    """``sum_i a_i V(a - e_i) == (sum a - r(r+1)/2) V(a)``."""
    r = len(a) - 1
    return 2 * lowered_sum(1, a) == (2 * sum(a) - r * (r + 1)) * vandermonde(a)


def lemma_antisymmetry_check(t: int, a: Sequence[int], swap: tuple[int, int]) -> bool:
    """Swapping two entries of ``a`` negates :func:`lowered_sum`.

    ``a`` may be any integer list, including ones with repeated entries.
    """
    i, j = swap
    b = list(a)
    b[i], b[j] = b[j], b[i]
    return lowered_sum(t, b) == -lowered_sum(t, a)
