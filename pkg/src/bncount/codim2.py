"""Intersections of codimension-two Brill-Noether loci with test surfaces.

The surface ``S_i`` glues a general genus-``i`` curve to a general
genus-``(g - i)`` curve at moving points.  It meets the locus of curves with a
``g^r_d`` (``rho = -2``) in ``T_i`` points, a sum over vanishing sequences at
the node of products of pointed counts on the two sides.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .bn import BNInput, VanishingSeq, complement, enumerate_sequences, rho, rho_adjusted
from .errors import PreconditionError
from .pointed import pointed_count

__all__ = [
    "SurfaceTerm",
    "SurfaceIntersection",
    "surface_intersection",
    "ProportionalityReport",
    "is_proportional",
    "proportionality_report",
]


@dataclass(frozen=True)
class SurfaceTerm:
    a: VanishingSeq
    left: int
    right: int

    @property
    def product(self) -> int:
        return self.left * self.right


@dataclass(frozen=True)
class SurfaceIntersection:
    i: int
    p: BNInput
    value: int
    terms: tuple[SurfaceTerm, ...] = field(default=())

    def __post_init__(self):
        if self.value != sum(t.product for t in self.terms):
            raise ValueError("value does not match the sum of its terms")

    def nonzero_terms(self) -> tuple[SurfaceTerm, ...]:
        return tuple(t for t in self.terms if t.product)


def surface_intersection(i: int, p: BNInput) -> SurfaceIntersection:
    if rho(p) != -2:
        raise PreconditionError(f"surface_intersection needs rho=-2, got rho={rho(p)}")
    if not 2 <= i <= p.g - 2:
        raise PreconditionError(f"component genus i={i} outside 2..g-2={p.g - 2}")
    left_p = BNInput(i, p.r, p.d)
    right_p = BNInput(p.g - i, p.r, p.d)
    terms = []
    for a in enumerate_sequences(left_p, -1):
        b = complement(left_p, a)
        if rho_adjusted(right_p, b) != -1:
            raise ArithmeticError(f"complement of {tuple(a)} has rho_adjusted != -1")
        terms.append(SurfaceTerm(a, pointed_count(left_p, a), pointed_count(right_p, b)))
    return SurfaceIntersection(i, p, sum(t.product for t in terms), tuple(terms))


def is_proportional(u: Sequence[int], v: Sequence[int]) -> bool:
    """Exact test that ``u`` and ``v`` are linearly dependent."""
    if len(u) != len(v):
        raise ValueError("vectors have different lengths")
    return all(u[k] * v[l] == u[l] * v[k] for k in range(len(u)) for l in range(k + 1, len(u)))


@dataclass(frozen=True)
class ProportionalityReport:
    first: BNInput
    second: BNInput
    surfaces: tuple[int, ...]
    first_values: tuple[int, ...]
    second_values: tuple[int, ...]
    proportional: bool
    ratio: Fraction | None  # second / first, when both are proportional and first is nonzero

    def to_dict(self) -> dict:
        return {
            "first": {"g": str(self.first.g), "r": str(self.first.r), "d": str(self.first.d)},
            "second": {"g": str(self.second.g), "r": str(self.second.r), "d": str(self.second.d)},
            "surfaces": [str(i) for i in self.surfaces],
            "first_values": [str(x) for x in self.first_values],
            "second_values": [str(x) for x in self.second_values],
            "proportional": self.proportional,
            "ratio": None if self.ratio is None else str(self.ratio),
        }


def proportionality_report(
    p1: BNInput, p2: BNInput, surfaces: Sequence[int]
) -> ProportionalityReport:
    u = tuple(surface_intersection(i, p1).value for i in surfaces)
    v = tuple(surface_intersection(i, p2).value for i in surfaces)
    prop = is_proportional(u, v)
    ratio = None
    if prop:
        k = next((k for k, x in enumerate(u) if x), None)
        if k is not None:
            ratio = Fraction(v[k], u[k])
    return ProportionalityReport(p1, p2, tuple(surfaces), u, v, prop, ratio)
