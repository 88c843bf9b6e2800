"""Exit criteria for the package, one test per criterion.

Expected values are either quoted reference numbers or come from oracles
that do not share code with the path under test (brute-force enumeration of
sequences, math.comb, the classical Weierstrass weight).
"""
import random
from fractions import Fraction
from itertools import combinations
from math import comb

from bncount.bn import BNInput
from bncount.castelnuovo import castelnuovo_number
from bncount.codim2 import proportionality_report, surface_intersection
from bncount.divisor import DivisorClass, mu_nu, pointed_class, test_curve_consistency
from bncount.numeric import factorial_det, factorial_det_closed_form
from bncount.oracle import (
    f_bracket,
    h_bracket_explicit,
    lemma_antisymmetry_check,
    lemma_example_check,
    pointed_via_det,
    pointed_via_sym,
)
from bncount.pointed import cusp_count, pencil_count, plucker_count, pointed_count

SEED = 20161016


def brute_domain(gmin, gmax, rmin, rmax):
    """(g, r, d, a) with adjusted rho = -1 and d <= g + r, by direct enumeration."""
    for g in range(gmin, gmax + 1):
        for r in range(rmin, rmax + 1):
            for d in range(0, g + r + 1):
                base = g - (r + 1) * (g - d + r)
                for a in combinations(range(d + 1), r + 1):
                    if base - sum(x - i for i, x in enumerate(a)) == -1:
                        yield g, r, d, a


def test_ac1_paper_surface_numbers(criterion):
    with criterion(1, "T_2, T_3 for (10,2,8) and (10,1,5) match 23184, 48384, 2016, 12096", 5.0):
        got = {
            (p, i): surface_intersection(i, BNInput(*p)).value
            for p in [(10, 2, 8), (10, 1, 5)]
            for i in (2, 3)
        }
        assert got == {
            ((10, 2, 8), 2): 23184,
            ((10, 2, 8), 3): 48384,
            ((10, 1, 5), 2): 2016,
            ((10, 1, 5), 3): 12096,
        }


def test_ac2_not_proportional(criterion):
    with criterion(2, "(10,2,8) and (10,1,5) restrictions to S_2, S_3 are not proportional", 5.0):
        rep = proportionality_report(BNInput(10, 2, 8), BNInput(10, 1, 5), [2, 3])
        assert not rep.proportional
        assert 23184 * 12096 != 48384 * 2016


def test_ac3_three_way_agreement(criterion):
    with criterion(3, "compact == det == sym on every instance, 2<=g<=12, 1<=r<=4, d<=g+r", 120.0):
        cases = mismatches = 0
        for g, r, d, a in brute_domain(2, 12, 1, 4):
            p = BNInput(g, r, d)
            if p.s + a[0] < 0:
                continue
            cases += 1
            x = pointed_count(p, a)
            if not x == pointed_via_det(p, a) == pointed_via_sym(p, a):
                mismatches += 1
        assert cases == 947
        assert mismatches == 0


def test_ac4_closed_forms(criterion):
    with criterion(4, "pencil (g<=30), Plucker (rho=0, g<=12), cusp (g<=10) match the main formula", 60.0):
        pencils = 0
        for g in range(2, 31):
            for d in range(2, g + 1):
                if 2 * d >= g + 2:
                    assert pencil_count(g, d) == pointed_count(BNInput(g, 1, d), (0, 2 * d - g))
                    pencils += 1
        pluckers = 0
        for g in range(2, 13):
            for r in range(1, g + 1):
                for d in range(r + 1, g + r + 1):
                    p = BNInput(g, r, d)
                    if g - (r + 1) * p.s != 0:
                        continue
                    n = pointed_count(p, tuple(range(r)) + (r + 1,))
                    N = castelnuovo_number(p)
                    assert n == plucker_count(p) == N * (r + 2) * (r + 1) * r * p.s
                    pluckers += 1
        cusps = 0
        for g in range(2, 11):
            for r in range(1, g + 1):
                for d in range(0, g + r + 1):
                    p = BNInput(g, r, d)
                    rho = g - (r + 1) * p.s
                    n = rho + r + 1
                    if rho > 0 and n <= d:
                        assert cusp_count(p, n) == pointed_count(p, tuple(range(r)) + (n,))
                        cusps += 1
        assert pencils and pluckers and cusps


def test_ac5_catalan(criterion):
    with criterion(5, "N(2m,1,m+1) == Catalan(m) for 1<=m<=15", 1.0):
        for m in range(1, 16):
            assert castelnuovo_number(BNInput(2 * m, 1, m + 1)) == comb(2 * m, m) // (m + 1)


def test_ac6_weierstrass(criterion):
    with criterion(6, "canonical series: n == g^3 - g and (mu, nu) == (0, 1) for 3<=g<=8", 10.0):
        for g in range(3, 9):
            p = BNInput(g, g - 1, 2 * g - 2)
            a = tuple(range(g - 1)) + (g,)
            assert pointed_count(p, a) == g**3 - g
            assert mu_nu(p, a) == (0, 1)


def test_ac7_identities(criterion):
    with criterion(7, "h == f (r=1..7, 100 seeded points each), factorial det, lemma sweeps", 30.0):
        for r in range(1, 8):
            rng = random.Random(f"{SEED}:{r}")
            for _ in range(100):
                s = rng.randint(-20, 20)
                a = tuple(sorted(rng.sample(range(31), r + 1)))
                assert h_bracket_explicit(s, r, a) == f_bracket(s, r, a)
        for n in range(1, 7):
            for b in combinations(range(13), n):
                assert factorial_det(b) == factorial_det_closed_form(b)
        for n in range(1, 6):
            for a in combinations(range(13), n):
                assert lemma_example_check(a)
                for t in range(5):
                    for i, j in combinations(range(n), 2):
                        assert lemma_antisymmetry_check(t, a, (i, j))


def test_ac8_divisors(criterion):
    with criterion(8, "test-curve relations hold for 3<=g<=10, r<=3; class of (3,1,2),(0,1)", 60.0):
        cases = 0
        for g, r, d, a in brute_domain(3, 10, 0, 3):
            assert test_curve_consistency(BNInput(g, r, d), a)
            cases += 1
        assert cases > 0
        expected = DivisorClass(3, Fraction(9), Fraction(0), Fraction(-1), (Fraction(-3), Fraction(-3)))
        assert pointed_class(BNInput(3, 1, 2), (0, 1)) == expected
