from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from bncount.bn import (
    BNInput,
    VanishingSeq,
    complement,
    eh_exists,
    enumerate_sequences,
    rho,
    rho_adjusted,
)
from bncount.errors import PreconditionError


def brute_sequences(p, target):
    return [
        a for a in combinations(range(p.d + 1), p.r + 1)
        if rho(p) - sum(x - i for i, x in enumerate(a)) == target
    ]


@pytest.mark.parametrize("p, expected", [((10, 2, 8), -2), ((4, 1, 3), 0), ((3, 1, 2), -1)])
def test_rho(p, expected):
    assert rho(BNInput(*p)) == expected


@pytest.mark.parametrize(
    "p, a, expected",
    [((4, 1, 3), (0, 2), -1), ((3, 2, 4), (0, 1, 3), -1), ((6, 2, 6), (0, 1, 2), 0)],
)
def test_rho_adjusted(p, a, expected):
    assert rho_adjusted(BNInput(*p), a) == expected


def test_s_is_derived():
    assert BNInput(10, 2, 8).s == 4


@pytest.mark.parametrize(
    "p, a, expected",
    [((4, 1, 3), (0, 1), True), ((4, 1, 3), (0, 2), False), ((2, 1, 2), (0, 2), False)],
)
def test_eh_exists(p, a, expected):
    assert eh_exists(BNInput(*p), a) is expected


def test_eh_needs_positive_genus():
    with pytest.raises(PreconditionError):
        eh_exists(BNInput(0, 0, 0), (0,))


def test_eh_monotone_under_lowering():
    for g in range(1, 8):
        for r in range(0, 3):
            for d in range(r, g + r + 1):
                p = BNInput(g, r, d)
                for a in combinations(range(d + 1), r + 1):
                    if not eh_exists(p, a):
                        continue
                    for i in range(r + 1):
                        b = list(a)
                        b[i] -= 1
                        if b[i] >= 0 and (i == 0 or b[i] > b[i - 1]):
                            assert eh_exists(p, b)


def test_complement_examples():
    assert complement(BNInput(4, 1, 3), (0, 2)) == (1, 3)
    assert complement(BNInput(10, 2, 8), (0, 1, 2)) == (6, 7, 8)


@given(st.integers(0, 12), st.data())
def test_complement_is_involution(d, data):
    r = data.draw(st.integers(0, d))
    a = sorted(data.draw(st.sets(st.integers(0, d), min_size=r + 1, max_size=r + 1)))
    p = BNInput(5, r, d)
    assert complement(p, complement(p, a)) == tuple(a)


def test_complement_adds_adjusted_rho():
    for g in range(4, 11):
        for r in range(0, 3):
            for d in range(r, 9):
                whole = BNInput(g, r, d)
                for i in range(0, g + 1):
                    left, right = BNInput(i, r, d), BNInput(g - i, r, d)
                    for a in combinations(range(d + 1), r + 1):
                        total = rho_adjusted(left, a) + rho_adjusted(right, complement(left, a))
                        assert total == rho(whole)


@pytest.mark.parametrize("p, target, expected", [((2, 1, 2), -1, [(0, 2)]), ((3, 1, 2), -1, [(0, 1)]), ((4, 1, 3), -20, [])])
def test_enumerate_examples(p, target, expected):
    assert enumerate_sequences(BNInput(*p), target) == expected


def test_enumerate_matches_brute_force():
    for g in range(0, 9):
        for r in range(0, 4):
            for d in range(0, g + r + 2):
                p = BNInput(g, r, d)
                for target in range(-3, 3):
                    got = enumerate_sequences(p, target)
                    assert got == brute_sequences(p, target)
                    assert len(set(got)) == len(got)


@pytest.mark.parametrize("a", [(0, 0), (2, 1), (-1, 3), ()])
def test_vanishing_seq_rejects_invalid(a):
    with pytest.raises(PreconditionError):
        VanishingSeq(a)


def test_sequence_checked_against_problem():
    with pytest.raises(PreconditionError, match="exceeds d"):
        rho_adjusted(BNInput(4, 1, 3), (0, 4))
    with pytest.raises(PreconditionError, match="length"):
        rho_adjusted(BNInput(4, 1, 3), (0, 1, 2))


def test_bninput_rejects_negative():
    with pytest.raises(PreconditionError):
        BNInput(-1, 0, 0)
