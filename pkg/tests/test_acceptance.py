"""Acceptance gate: one test and one printed PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the summary lines print
straight to the terminal even under capture.  Timing limits are part of
the criteria and are asserted, not just reported.
"""

import itertools
import math
import random
import time

from periodic_alex.cyclotomic import CycInt, char_poly, evaluate_at_zeta, lemma1_ratio, zeta
from periodic_alex.obstructions import (
    GHPair,
    MurasugiInstance,
    MurasugiWitness,
    TorresWitness,
    candidate_from_gh,
    murasugi_congruence_check,
    murasugi_witness_holds,
    scan_units,
    torres_linear_check,
    torres_witness_holds,
)
from periodic_alex.polynomials import IntPolynomial, alternating_polynomial
from periodic_alex.sunits import (
    SUnitContext,
    SUnitElement,
    enumerate_candidates,
    evertse_bound,
    s_unit_test,
    solve_sunit_equation,
    theorem2_bound,
)


def announce(capsys, number: int, label: str, ok: bool, elapsed=None) -> None:
    timing = f" ({elapsed:.2f}s)" if elapsed is not None else ""
    with capsys.disabled():
        print(f"ACCEPTANCE {number} {label}: {'PASS' if ok else 'FAIL'}{timing}")


def test_acceptance_1_unit_scans_collapse(capsys):
    start = time.perf_counter()
    ok = True
    for p, height in [(3, 2), (5, 1), (5, 2), (7, 1)]:
        ok = ok and scan_units(p, height) == {alternating_polynomial(p)}
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 10.0
    announce(capsys, 1, "unit scans collapse to the alternating polynomial", ok, elapsed)
    assert ok


def test_acceptance_2_congruence_coherence(capsys):
    start = time.perf_counter()
    ok = True
    for p in (3, 5, 7):
        inst = MurasugiInstance(alternating_polynomial(p), IntPolynomial((1,)), 2, p)
        witness = murasugi_congruence_check(inst)
        ok = ok and witness is not None and murasugi_witness_holds(inst, witness)
        # independent route: binomial coefficients give (1+t)**(p-1) directly
        reduced = tuple(math.comb(p - 1, i) % p for i in range(p))
        target = tuple(c % p for c in alternating_polynomial(p).coeffs)
        ok = ok and reduced == target
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1.0
    announce(capsys, 2, "congruence with quotient 1 at linking number 2", ok, elapsed)
    assert ok


def test_acceptance_3_conjugation_ratio_torsion(capsys):
    start = time.perf_counter()
    ok = True
    checked = 0
    for p, height in [(3, 2), (5, 1)]:
        one = CycInt.one(p)
        for coords in itertools.product(range(-height, height + 1), repeat=p - 1):
            if not any(coords):
                continue
            e = CycInt(p, coords)
            if not e.is_unit():
                continue
            ok = ok and lemma1_ratio(e) ** p == one
            checked += 1
    elapsed = time.perf_counter() - start
    ok = ok and checked > 0 and elapsed < 10.0
    announce(capsys, 3, f"unit/conjugate ratios are p-torsion ({checked} units)", ok, elapsed)
    assert ok


def test_acceptance_4_sunit_equation_p3(capsys):
    start = time.perf_counter()
    sols = solve_sunit_equation(SUnitContext(3))
    pairs = {(s.x.numerator, s.y.numerator) for s in sols}
    expected = {(-zeta(3, 1), -zeta(3, 2)), (-zeta(3, 2), -zeta(3, 1))}
    ok = len(sols) == 2 and pairs == expected
    ok = ok and all(s.x.denominator == 1 and s.y.denominator == 1 for s in sols)
    ok = ok and len(sols) <= evertse_bound(2, 1).value() == 1029
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1.0
    announce(capsys, 4, "x + y = 1 in units of Q(zeta_3) has exactly 2 solutions", ok, elapsed)
    assert ok


def test_acceptance_5_bound_formulas(capsys):
    ok = evertse_bound(1, 1).value() == 147
    ok = ok and evertse_bound(2, 1).value() == 1029
    ok = ok and evertse_bound(4, 2).value() == 352947
    b3 = theorem2_bound(3, ())
    ok = ok and (b3.base, b3.exponent) == (2, 1029) and b3.digits() == 310
    b5 = theorem2_bound(5, ())
    ok = ok and (b5.base, b5.exponent) == (3, 352947)
    announce(capsys, 5, "solution-count bound formulas", ok)
    assert ok


def test_acceptance_6_cross_implementation_consistency(capsys):
    start = time.perf_counter()
    ok = True
    for p in (3, 5, 7, 11, 13):
        alt = alternating_polynomial(p)
        ok = ok and char_poly(-zeta(p, 1)) == alt
        u = IntPolynomial((0, 1))
        ok = ok and candidate_from_gh(GHPair(IntPolynomial((1,)), -u, p)) == alt
    rng = random.Random(60606)
    for p in (3, 5, 7):
        for _ in range(1000):
            a = CycInt(p, [rng.randint(-50, 50) for _ in range(p - 1)])
            ok = ok and a.norm() == a.norm_via_resultant()
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 30.0
    announce(capsys, 6, "conjugate-product and resultant routes agree", ok, elapsed)
    assert ok


def test_acceptance_7_candidate_root_ratios(capsys):
    start = time.perf_counter()
    p = 3
    ctx = SUnitContext(p)
    candidates = enumerate_candidates(ctx, 1)
    ok = bool(candidates)
    for delta in candidates:
        # recover the root ratios inside Q(zeta_3) by direct search
        roots = []
        for coords in itertools.product(range(-4, 5), repeat=p - 1):
            e = CycInt(p, coords)
            acc = CycInt.zero(p)
            power = CycInt.one(p)
            for c in delta.coeffs:
                acc = acc + c * power
                power = power * e
            if acc.is_zero():
                roots.append(e)
        ok = ok and len(roots) == int(delta.degree)
        for alpha in roots:
            x = SUnitElement(alpha)
            ok = ok and s_unit_test(x, ctx) and s_unit_test(x.complement(), ctx)
    monic = {f for f in candidates if f.leading_coefficient == 1}
    ok = ok and monic == {alternating_polynomial(3)}
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 10.0
    announce(capsys, 7, "candidate root ratios are S-units; monic subset is unique", ok, elapsed)
    assert ok


def test_acceptance_8_property_suite(capsys):
    start = time.perf_counter()
    rng = random.Random(80808)
    ok = True

    # normalization idempotence
    for _ in range(300):
        f = IntPolynomial([rng.randint(-9, 9) for _ in range(rng.randint(1, 8))])
        if f.is_zero():
            continue
        g = f.normalized()
        ok = ok and g.normalized() == g and g.constant_term != 0 and g.leading_coefficient > 0

    # norm multiplicativity and Galois composition
    for _ in range(200):
        p = rng.choice([3, 5, 7])
        a = CycInt(p, [rng.randint(-9, 9) for _ in range(p - 1)])
        b = CycInt(p, [rng.randint(-9, 9) for _ in range(p - 1)])
        ok = ok and (a * b).norm() == a.norm() * b.norm()
        j, k = rng.randrange(1, p), rng.randrange(1, p)
        ok = ok and a.galois(j).galois(k) == a.galois(j * k % p)

    # congruence witness soundness: every found witness re-substitutes
    for _ in range(60):
        p = rng.choice([3, 5])
        delta = IntPolynomial([rng.randint(-6, 6) for _ in range(rng.randint(1, 6))])
        kbar = IntPolynomial([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))])
        if delta.is_zero() or kbar.is_zero():
            continue
        inst = MurasugiInstance(delta, kbar, rng.randint(1, 4), p)
        witness = murasugi_congruence_check(inst)
        if witness is not None:
            ok = ok and murasugi_witness_holds(inst, witness)
            ok = ok and not murasugi_witness_holds(
                inst, MurasugiWitness(-witness.sign, witness.shift)
            )

    # substitution witness soundness on planted pairs
    for _ in range(60):
        p = rng.choice([3, 5])
        g = IntPolynomial([rng.randint(-4, 4) for _ in range(rng.randint(1, p))])
        g_val = evaluate_at_zeta(g, p)
        if g_val.is_zero():
            continue
        b = rng.randrange(p)
        h_val = -(zeta(p, (p - b) % p) * g_val.galois(p - 1))
        pair = GHPair(g, IntPolynomial(h_val.coords), p)
        found = torres_linear_check(pair)
        ok = ok and found == TorresWitness(b) and torres_witness_holds(pair, found)

    # deterministic parallel scans
    ok = ok and scan_units(5, 1, jobs=2) == scan_units(5, 1, jobs=1)
    ok = ok and solve_sunit_equation(SUnitContext(5), jobs=2) == solve_sunit_equation(
        SUnitContext(5), jobs=1
    )
    ok = ok and enumerate_candidates(SUnitContext(3), 1, jobs=2) == enumerate_candidates(
        SUnitContext(3), 1, jobs=1
    )

    elapsed = time.perf_counter() - start
    announce(capsys, 8, "randomized property suite with fixed seeds", ok, elapsed)
    assert ok
