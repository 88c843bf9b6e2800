"""Divisor classes on the moduli space of 1-pointed stable curves of genus g.

Classes are stored in the basis ``lambda, psi, delta_irr, delta_1..delta_{g-1}``
with exact rational coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .bn import BNInput, VanishingSeq
from .errors import PreconditionError
from .pointed import check_pointed_input, pointed_count

__all__ = [
    "DivisorClass",
    "bn_class",
    "w_class",
    "neighbor_sequences",
    "neighbor_sum",
    "mu_nu",
    "pointed_class",
    "test_curve_consistency",
]


@dataclass(frozen=True)
class DivisorClass:
    g: int
    lam: Fraction
    psi: Fraction
    delta_irr: Fraction
    delta: tuple[Fraction, ...]  # delta[i - 1] is the coefficient of delta_i

    def __post_init__(self):
        if len(self.delta) != max(self.g - 1, 0):
            raise ValueError(f"genus {self.g} class needs {self.g - 1} boundary coefficients")
        object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "psi", Fraction(self.psi))
        object.__setattr__(self, "delta_irr", Fraction(self.delta_irr))
        object.__setattr__(self, "delta", tuple(Fraction(c) for c in self.delta))

    @classmethod
    def zero(cls, g: int) -> "DivisorClass":
        return cls(g, Fraction(0), Fraction(0), Fraction(0), (Fraction(0),) * (g - 1))

    def delta_coeff(self, i: int) -> Fraction:
        if not 1 <= i <= self.g - 1:
            raise IndexError(f"delta_{i} not in basis for genus {self.g}")
        return self.delta[i - 1]

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if other.g != self.g:
            raise ValueError("cannot add classes of different genus")
        return DivisorClass(
            self.g,
            self.lam + other.lam,
            self.psi + other.psi,
            self.delta_irr + other.delta_irr,
            tuple(x + y for x, y in zip(self.delta, other.delta)),
        )

    def __mul__(self, c) -> "DivisorClass":
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        c = Fraction(c)
        return DivisorClass(
            self.g, c * self.lam, c * self.psi, c * self.delta_irr, tuple(c * x for x in self.delta)
        )

    __rmul__ = __mul__

    def items(self) -> list[tuple[str, Fraction]]:
        out = [("lambda", self.lam), ("psi", self.psi), ("delta_irr", self.delta_irr)]
        out += [(f"delta_{i}", c) for i, c in enumerate(self.delta, start=1)]
        return out

    def __str__(self) -> str:
        parts = []
        for name, c in self.items():
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = name if mag == 1 else f"{mag}*{name}"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        return text + "".join(f" {sign} {body}" for sign, body in parts[1:])


def bn_class(g: int) -> DivisorClass:
    """Pull-back of the Brill-Noether divisor class."""
    if g < 3:
        raise PreconditionError(f"bn_class needs g >= 3, got g={g}")
    return DivisorClass(
        g,
        Fraction(g + 3),
        Fraction(0),
        Fraction(-(g + 1), 6),
        tuple(Fraction(-i * (g - i)) for i in range(1, g)),
    )


def w_class(g: int) -> DivisorClass:
    """Class of the Weierstrass divisor."""
    if g < 2:
        raise PreconditionError(f"w_class needs g >= 2, got g={g}")
    return DivisorClass(
        g,
        Fraction(-1),
        Fraction(comb(g + 1, 2)),
        Fraction(0),
        tuple(Fraction(-comb(g - i + 1, 2)) for i in range(1, g)),
    )


def neighbor_sequences(p: BNInput, a: Sequence[int]) -> list[VanishingSeq | None]:
    """For each ``i``, ``a`` raised by one everywhere except at ``i``.

    Entries that are not strictly increasing or exceed ``d`` are ``None``:
    no series has that vanishing, so they contribute nothing.
    """
    out: list[VanishingSeq | None] = []
    for i in range(len(a)):
        b = [x + 1 for x in a]
        b[i] -= 1
        strict = all(b[k] < b[k + 1] for k in range(len(b) - 1))
        out.append(VanishingSeq(b) if strict and b[-1] <= p.d else None)
    return out


def neighbor_sum(p: BNInput, a: Sequence[int]) -> int:
    """Sum of pointed counts in genus ``g - 1`` over the neighbor sequences."""
    lower = BNInput(p.g - 1, p.r, p.d)
    return sum(pointed_count(lower, b) for b in neighbor_sequences(p, a) if b is not None)


def _check_divisor_input(p: BNInput, a: Sequence[int]) -> VanishingSeq:
    if p.g <= 2:
        raise PreconditionError(f"pointed divisor class needs g > 2, got g={p.g}")
    return check_pointed_input(p, a)


def mu_nu(p: BNInput, a: Sequence[int]) -> tuple[Fraction, Fraction]:
    """Coefficients ``(mu, nu)`` of the pointed class on the BN and Weierstrass classes."""
    seq = _check_divisor_input(p, a)
    g = p.g
    n = pointed_count(p, seq)
    nu = Fraction(n, g * (g * g - 1))
    mu = Fraction(-n, 2 * (g * g - 1)) + Fraction(neighbor_sum(p, seq), 4 * comb(g - 1, 2))
    return mu, nu


def pointed_class(p: BNInput, a: Sequence[int]) -> DivisorClass:
    mu, nu = mu_nu(p, a)
    return mu * bn_class(p.g) + nu * w_class(p.g)


def test_curve_consistency(p: BNInput, a: Sequence[int]) -> bool:
    """Check ``(mu, nu)`` against both test-curve relations.

    Moving the point on a fixed general curve meets the class in ``n``
    points; attaching a 2-pointed elliptic tail to a moving point of a genus
    ``g - 1`` curve meets it in the neighbor sum.
    """
    seq = _check_divisor_input(p, a)
    g = p.g
    mu, nu = mu_nu(p, seq)
    first = pointed_count(p, seq) == nu * comb(g + 1, 2) * (2 * g - 2)
    second = neighbor_sum(p, seq) == (mu * (g - 1) + nu * comb(g, 2)) * (2 * g - 4)
    return first and second


test_curve_consistency.__test__ = False  # not a pytest test despite the name
