"""Named verification sweeps.

Each suite expands into a list of cases ``(label, check, args)`` where
``check`` names a function in :data:`CHECKS`.  Cases are generated
deterministically in the calling process (random cases draw from a generator
seeded per task), so the list, and therefore the report, does not depend on
how many workers evaluate it.
"""
from __future__ import annotations

import inspect
import random
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from math import factorial
from typing import Callable, Iterator

from . import codim2, divisor, oracle
from .bn import BNInput, enumerate_sequences, rho
from .castelnuovo import castelnuovo_number
from .errors import PreconditionError
from .numeric import factorial_det, factorial_det_closed_form, inv_factorial, vandermonde
from .pointed import cusp_count, pencil_count, plucker_count, pointed_count
from .report import VerifyReport

__all__ = ["SUITES", "CHECKS", "run_suite", "pointed_domain", "run_case"]

Case = tuple[str, str, tuple]


def _fmt(*parts) -> str:
    out = []
    for name, value in parts:
        if isinstance(value, (tuple, list)):
            value = ",".join(str(x) for x in value)
        out.append(f"{name}={value}")
    return " ".join(out)


def pointed_domain(gmin: int, gmax: int, rmin: int, rmax: int) -> Iterator[tuple[BNInput, tuple]]:
    """Every ``(p, a)`` with ``rho_adjusted = -1``, ``gmin <= g <= gmax``, ``rmin <= r <= rmax``, ``d <= g + r``."""
    for g in range(gmin, gmax + 1):
        for r in range(rmin, rmax + 1):
            for d in range(0, g + r + 1):
                p = BNInput(g, r, d)
                for a in enumerate_sequences(p, -1):
                    yield p, tuple(a)


# -- checks: each returns (ok, expected, actual) ------------------------------

def _three_way(g, r, d, a):
    p = BNInput(g, r, d)
    x = pointed_count(p, a)
    y = oracle.pointed_via_det(p, a)
    z = oracle.pointed_via_sym(p, a)
    return x == y == z, (x, x), (y, z)


def _h_explicit(s, r, a):
    f = oracle.f_bracket(s, r, a)
    h = oracle.h_bracket_explicit(s, r, a)
    return f == h, f, h


def _h_det(s, r, a):
    f = oracle.f_bracket(s, r, a)
    h = oracle.h_bracket(s, r, a)
    return f == h, f, h


def _p_poly(s, r, a):
    f = oracle.f_bracket(s, r, a)
    p2, p3, p4 = oracle.eval_P(r, a)
    v = vandermonde(a) * (p2 * s * s + p3 * s + p4)
    return f == v, f, v


def _factorial_det(*b):
    x = factorial_det_closed_form(b)
    y = factorial_det(b)
    return x == y, x, y


def _lemma_example(*a):
    ok = oracle.lemma_example_check(a)
    return ok, True, ok


def _lemma_antisym(t, a, i, j):
    ok = oracle.lemma_antisymmetry_check(t, a, (i, j))
    return ok, True, ok


def _test_curve(g, r, d, a):
    ok = divisor.test_curve_consistency(BNInput(g, r, d), a)
    return ok, True, ok


def _pencil(g, d):
    x = pointed_count(BNInput(g, 1, d), (0, 2 * d - g))
    y = pencil_count(g, d)
    return x == y, x, y


def _plucker(g, r, d):
    p = BNInput(g, r, d)
    x = pointed_count(p, tuple(range(r)) + (r + 1,))
    alt = castelnuovo_number(p) * (r + 2) * (r + 1) * r * p.s
    y = plucker_count(p)
    return x == y == alt, (x, x), (y, alt)


def _cusp(g, r, d, n):
    p = BNInput(g, r, d)
    x = pointed_count(p, tuple(range(r)) + (n,))
    y = cusp_count(p, n)
    return x == y, x, y


def _catalan(m):
    x = factorial(2 * m) // (factorial(m) * factorial(m + 1))
    y = castelnuovo_number(BNInput(2 * m, 1, m + 1))
    return x == y, x, y


def _weierstrass(g):
    p = BNInput(g, g - 1, 2 * g - 2)
    a = tuple(range(g - 1)) + (g,)
    n = pointed_count(p, a)
    mn = divisor.mu_nu(p, a)
    return n == g**3 - g and mn == (0, 1), (g**3 - g, 0, 1), (n, *mn)


def _surface(i, g, r, d, expected):
    v = codim2.surface_intersection(i, BNInput(g, r, d)).value
    return v == expected, expected, v


def _not_proportional():
    rep = codim2.proportionality_report(BNInput(10, 2, 8), BNInput(10, 1, 5), [2, 3])
    return not rep.proportional, False, rep.proportional


def _rho(g, r, d, expected):
    v = rho(BNInput(g, r, d))
    return v == expected, expected, v


def _inv_factorial(n, expected):
    v = inv_factorial(n)
    return v == expected, expected, v


def _zero_at_identity(g, r, d):
    v = pointed_count(BNInput(g, r, d), tuple(range(r + 1)))
    return v == 0, 0, v


CHECKS: dict[str, Callable] = {
    "three_way": _three_way,
    "h_explicit": _h_explicit,
    "h_det": _h_det,
    "p_poly": _p_poly,
    "factorial_det": _factorial_det,
    "lemma_example": _lemma_example,
    "lemma_antisym": _lemma_antisym,
    "test_curve": _test_curve,
    "pencil": _pencil,
    "plucker": _plucker,
    "cusp": _cusp,
    "catalan": _catalan,
    "weierstrass": _weierstrass,
    "surface": _surface,
    "not_proportional": _not_proportional,
    "rho": _rho,
    "inv_factorial": _inv_factorial,
    "zero_at_identity": _zero_at_identity,
}


# -- suites -------------------------------------------------------------------

def formulas_cases(gmax=12, rmax=4, **_) -> list[Case]:
    cases = []
    for p, a in pointed_domain(2, gmax, 1, rmax):
        if p.s + a[0] >= 0:
            cases.append((_fmt(("g", p.g), ("r", p.r), ("d", p.d), ("a", a)), "three_way", (*p, a)))
    return cases


def random_points(seed: int, r: int, count: int, smax=20, amax=30) -> list[tuple[int, tuple]]:
    rng = random.Random(f"{seed}:{r}")
    return [
        (rng.randint(-smax, smax), tuple(sorted(rng.sample(range(amax + 1), r + 1))))
        for _ in range(count)
    ]


def identities_cases(seed=0, points=100, **_) -> list[Case]:
    cases = []
    for r in range(1, 8):
        for s, a in random_points(seed, r, points):
            label = _fmt(("s", s), ("r", r), ("a", a))
            cases.append((label, "h_explicit", (s, r, a)))
            cases.append((label, "h_det", (s, r, a)))
            cases.append((label, "p_poly", (s, r, a)))
    for n in range(1, 7):
        for b in combinations(range(13), n):
            cases.append((_fmt(("b", b)), "factorial_det", b))
    for n in range(1, 6):
        for a in combinations(range(13), n):
            cases.append((_fmt(("a", a)), "lemma_example", a))
            for t in range(5):
                for i, j in combinations(range(n), 2):
                    cases.append((_fmt(("t", t), ("a", a), ("swap", (i, j))), "lemma_antisym", (t, a, i, j)))
    rng = random.Random(f"{seed}:degenerate")
    for _ in range(points):
        n = rng.randint(2, 5)
        a = [rng.randint(0, 12) for _ in range(n)]
        i, j = rng.sample(range(n), 2)
        a[j] = a[i]
        t = rng.randint(0, 4)
        cases.append((_fmt(("t", t), ("a", a), ("swap", (i, j))), "lemma_antisym", (t, tuple(a), i, j)))
    return cases


def divisors_cases(gmax=10, rmax=3, **_) -> list[Case]:
    return [
        (_fmt(("g", p.g), ("r", p.r), ("d", p.d), ("a", a)), "test_curve", (*p, a))
        for p, a in pointed_domain(3, gmax, 0, rmax)
    ]


def specializations_cases(gmax=12, **_) -> list[Case]:
    cases = []
    for g in range(2, 31):
        for d in range((g + 3) // 2, g + 1):
            cases.append((_fmt(("g", g), ("d", d)), "pencil", (g, d)))
    for g in range(2, gmax + 1):
        for r in range(1, g + 1):
            if g % (r + 1) == 0:
                s = g // (r + 1)
                d = g + r - s
                if d >= r + 1:
                    cases.append((_fmt(("g", g), ("r", r), ("d", d)), "plucker", (g, r, d)))
    for g in range(2, min(gmax, 10) + 1):
        for r in range(1, g + 1):
            for d in range(0, g + r + 1):
                n = rho(BNInput(g, r, d)) + r + 1
                if n - r - 1 > 0 and n <= d:
                    cases.append((_fmt(("g", g), ("r", r), ("d", d), ("n", n)), "cusp", (g, r, d, n)))
    for m in range(1, 16):
        cases.append((_fmt(("m", m)), "catalan", (m,)))
    for g in range(3, 9):
        cases.append((_fmt(("g", g)), "weierstrass", (g,)))
    return cases


def paper_numbers_cases(**_) -> list[Case]:
    cases = [
        ("T_2 g=10 r=2 d=8", "surface", (2, 10, 2, 8, 23184)),
        ("T_3 g=10 r=2 d=8", "surface", (3, 10, 2, 8, 48384)),
        ("T_2 g=10 r=1 d=5", "surface", (2, 10, 1, 5, 2016)),
        ("T_3 g=10 r=1 d=5", "surface", (3, 10, 1, 5, 12096)),
        ("(10,2,8) vs (10,1,5) on S_2,S_3", "not_proportional", ()),
        ("rho g=10 r=2 d=8", "rho", (10, 2, 8, -2)),
        ("rho g=10 r=1 d=5", "rho", (10, 1, 5, -2)),
        ("1/(-3)!", "inv_factorial", (-3, 0)),
    ]
    for g in range(2, 9):
        for r in range(1, g + 1):
            for d in range(r, g + r + 1):
                if rho(BNInput(g, r, d)) == -1:
                    cases.append((_fmt(("g", g), ("r", r), ("d", d), ("a", "0..r")), "zero_at_identity", (g, r, d)))
    return cases


SUITES: dict[str, Callable[..., list[Case]]] = {
    "formulas": formulas_cases,
    "identities": identities_cases,
    "divisors": divisors_cases,
    "specializations": specializations_cases,
    "paper-numbers": paper_numbers_cases,
}


def run_case(case: Case) -> tuple[bool, object, object]:
    _, check, args = case
    try:
        return CHECKS[check](*args)
    except (PreconditionError, ArithmeticError) as exc:
        return False, "no error", f"{type(exc).__name__}: {exc}"


def run_suite(name: str, jobs: int = 1, **params) -> VerifyReport:
    """Run a named suite; ``params`` are forwarded to the case generator."""
    if name not in SUITES:
        raise PreconditionError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    generator = SUITES[name]
    effective = {
        k: v.default
        for k, v in inspect.signature(generator).parameters.items()
        if v.default is not inspect.Parameter.empty
    }
    effective.update((k, v) for k, v in params.items() if v is not None and k in effective)
    start = time.perf_counter()
    cases = generator(**effective)
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_case, cases, chunksize=max(1, len(cases) // (4 * jobs))))
    else:
        results = [run_case(c) for c in cases]
    report = VerifyReport(name, {k: str(v) for k, v in sorted(effective.items())}, cases=len(cases))
    for (label, check, _), (ok, expected, actual) in zip(cases, results):
        if not ok:
            report.add_failure(f"{check}: {label}", expected, actual)
    report.elapsed = time.perf_counter() - start
    return report
