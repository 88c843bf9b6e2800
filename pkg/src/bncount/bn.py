"""Brill-Noether data: problems ``(g, r, d)`` and vanishing sequences."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError

__all__ = [
    "BNInput",
    "VanishingSeq",
    "as_sequence",
    "rho",
    "rho_adjusted",
    "eh_exists",
    "complement",
    "enumerate_sequences",
]


@dataclass(frozen=True)
class BNInput:
    """A Brill-Noether problem: genus ``g``, dimension ``r``, degree ``d``."""

    g: int
    r: int
    d: int

    def __post_init__(self):
        for name in ("g", "r", "d"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"{name} must be an int, got {value!r}")
            if value < 0:
                raise PreconditionError(f"{name}={value} is negative")

    @property
    def s(self) -> int:
        """``g - d + r``."""
        return self.g - self.d + self.r

    def __iter__(self):
        return iter((self.g, self.r, self.d))


class VanishingSeq(tuple):
    """Strictly increasing tuple of non-negative integers ``a_0 < ... < a_r``.

    Construction enforces strictness and non-negativity.  The bound
    ``a_r <= d`` and the length ``r + 1`` depend on a problem and are
    checked by :func:`as_sequence`.
    """

    def __new__(cls, entries: Iterable[int] = ()):
        a = tuple(int(x) for x in entries)
        if not a:
            raise PreconditionError("vanishing sequence is empty")
        if a[0] < 0:
            raise PreconditionError(f"a_0={a[0]} is negative")
        for i in range(1, len(a)):
            if a[i] <= a[i - 1]:
                raise PreconditionError(
                    f"sequence not strictly increasing: a_{i - 1}={a[i - 1]}, a_{i}={a[i]}"
                )
        return super().__new__(cls, a)

    @property
    def r(self) -> int:
        return len(self) - 1

    def weight(self) -> int:
        """``sum (a_i - i)``."""
        return sum(x - i for i, x in enumerate(self))

    def __repr__(self):
        return f"VanishingSeq({tuple(self)!r})"


def as_sequence(p: BNInput, a: Sequence[int]) -> VanishingSeq:
    """Validate ``a`` as a vanishing sequence for the problem ``p``."""
    seq = a if isinstance(a, VanishingSeq) else VanishingSeq(a)
    if len(seq) != p.r + 1:
        raise PreconditionError(f"sequence has length {len(seq)}, expected r+1={p.r + 1}")
    if seq[-1] > p.d:
        raise PreconditionError(f"a_{p.r}={seq[-1]} exceeds d={p.d}")
    return seq


def rho(p: BNInput) -> int:
    """Brill-Noether number ``g - (r+1)(g-d+r)``."""
    return p.g - (p.r + 1) * p.s


def rho_adjusted(p: BNInput, a: Sequence[int]) -> int:
    return rho(p) - as_sequence(p, a).weight()


def eh_exists(p: BNInput, a: Sequence[int]) -> bool:
    """Whether a general pointed curve carries a series with vanishing ``a``.

    True iff ``sum_i (a_i - i + g - d + r)_+ <= g``.
    """
    if p.g <= 0:
        raise PreconditionError(f"existence test needs g > 0, got g={p.g}")
    seq = as_sequence(p, a)
    return sum(max(x - i + p.s, 0) for i, x in enumerate(seq)) <= p.g


def complement(p: BNInput, a: Sequence[int]) -> VanishingSeq:
    """``(d - a_r, ..., d - a_0)``."""
    seq = as_sequence(p, a)
    return VanishingSeq(p.d - x for x in reversed(seq))


def enumerate_sequences(p: BNInput, target: int) -> list[VanishingSeq]:
    """All valid sequences for ``p`` with adjusted Brill-Noether number ``target``.

    Output is in lexicographic order.
    """
    budget = rho(p) - target  # required sum of (a_i - i)
    n = p.r + 1
    if budget < 0 or p.d < p.r:
        return []
    out: list[VanishingSeq] = []
    prefix: list[int] = []

    def extend(i: int, lo: int, used: int) -> None:
        if i == n:
            if used == budget:
                out.append(VanishingSeq(prefix))
            return
        remaining = n - i
        # a_j - j is non-decreasing in j, so every later entry costs at least a_i - i
        for x in range(lo, p.d - (n - 1 - i) + 1):
            if used + remaining * (x - i) > budget:
                break
            prefix.append(x)
            extend(i + 1, x + 1, used + x - i)
            prefix.pop()

    extend(0, 0, 0)
    return out
