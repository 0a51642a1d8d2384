"""Polynomial layer: canonical form, normalization, ring laws, reduction mod p."""

import random

import pytest

from periodic_alex.polynomials import (
    MINUS_INFINITY,
    IntPolynomial,
    ModPolynomial,
    alternating_polynomial,
    divides,
    reduce_mod,
)


def rand_poly(rng: random.Random, max_len: int = 7, span: int = 9) -> IntPolynomial:
    return IntPolynomial(rng.randint(-span, span) for _ in range(rng.randint(0, max_len)))


def test_canonical_form_trims_trailing_zeros():
    assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPolynomial((0, 0, 0)).coeffs == ()
    assert IntPolynomial().coeffs == ()


def test_degree_sentinel_for_zero():
    zero = IntPolynomial()
    assert zero.is_zero()
    assert zero.degree == MINUS_INFINITY
    assert zero.degree != -1
    assert IntPolynomial((5,)).degree == 0
    assert IntPolynomial((0, 1)).degree == 1


def test_normalize_strips_t_power_and_flips_sign():
    assert IntPolynomial((0, 0, 2, -4)).normalized().coeffs == (-2, 4)
    assert IntPolynomial((1, -1, 1)).normalized().coeffs == (1, -1, 1)
    assert IntPolynomial((0, -1, 1, -1, 1, -1)).normalized().coeffs == (1, -1, 1, -1, 1)


def test_normalize_zero_rejected():
    with pytest.raises(ValueError, match="cannot normalize zero"):
        IntPolynomial().normalized()


def test_normalize_idempotent_and_canonical():
    rng = random.Random(1201)
    for _ in range(500):
        f = rand_poly(rng)
        if f.is_zero():
            continue
        g = f.normalized()
        assert g.normalized() == g
        assert g.constant_term != 0
        assert g.leading_coefficient > 0


def test_alternating_polynomial_values():
    assert alternating_polynomial(3).coeffs == (1, -1, 1)
    assert alternating_polynomial(5).coeffs == (1, -1, 1, -1, 1)
    assert alternating_polynomial(7).coeffs == (1, -1, 1, -1, 1, -1, 1)


@pytest.mark.parametrize("p", [1, 2, 4, 9, 15])
def test_alternating_polynomial_rejects_non_odd_primes(p):
    with pytest.raises(ValueError):
        alternating_polynomial(p)


def test_arithmetic_examples():
    assert (IntPolynomial((1, 1)) * IntPolynomial((1, -1))).coeffs == (1, 0, -1)
    assert (IntPolynomial((1, 1)) ** 4).coeffs == (1, 4, 6, 4, 1)
    f = IntPolynomial((3, -2, 7))
    assert f + IntPolynomial() == f
    assert (f - f).is_zero()


def test_ring_laws_on_random_inputs():
    rng = random.Random(1202)
    for _ in range(300):
        f, g, h = rand_poly(rng), rand_poly(rng), rand_poly(rng)
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h


def test_degree_additivity_including_zero():
    rng = random.Random(1203)
    for _ in range(300):
        f, g = rand_poly(rng), rand_poly(rng)
        assert (f * g).degree == f.degree + g.degree


def test_reduce_mod_examples():
    assert reduce_mod(IntPolynomial((1, 4, 6, 4, 1)), 5).coeffs == (1, 4, 1, 4, 1)
    assert reduce_mod(IntPolynomial((1, -1, 1)), 3).coeffs == (1, 2, 1)
    assert reduce_mod(IntPolynomial((3, 6)), 3).is_zero()


def test_reduce_mod_matches_coefficientwise_oracle():
    rng = random.Random(1204)
    for _ in range(200):
        f = rand_poly(rng)
        p = rng.choice([2, 3, 5, 7])
        oracle = [c % p for c in f.coeffs]
        while oracle and oracle[-1] == 0:
            oracle.pop()
        assert reduce_mod(f, p).coeffs == tuple(oracle)


def test_reduce_mod_is_ring_homomorphism():
    rng = random.Random(1205)
    for _ in range(200):
        f, g = rand_poly(rng), rand_poly(rng)
        p = rng.choice([3, 5, 7])
        assert reduce_mod(f * g, p) == reduce_mod(f, p) * reduce_mod(g, p)
        assert reduce_mod(f + g, p) == reduce_mod(f, p) + reduce_mod(g, p)


def test_reduce_mod_rejects_composite_modulus():
    with pytest.raises(ValueError):
        reduce_mod(IntPolynomial((1,)), 6)


def test_evaluate_examples():
    alt5 = alternating_polynomial(5)
    assert alt5.evaluate(1) == 1
    # independent power-sum oracle
    assert alt5.evaluate(-1) == sum(c * (-1) ** i for i, c in enumerate(alt5.coeffs)) == 5
    assert IntPolynomial().evaluate(12345) == 0


def test_evaluate_is_multiplicative():
    rng = random.Random(1206)
    for _ in range(200):
        f, g = rand_poly(rng), rand_poly(rng)
        x = rng.randint(-10, 10)
        assert (f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x)


def test_parse_render_round_trip():
    assert IntPolynomial.parse("1,-1,1,-1,1").coeffs == (1, -1, 1, -1, 1)
    assert IntPolynomial.parse("0").is_zero()
    rng = random.Random(1207)
    for _ in range(200):
        f = rand_poly(rng)
        assert IntPolynomial.parse(f.render()) == f


@pytest.mark.parametrize("text", ["", "  ", "1,,2", "1,a,2"])
def test_parse_rejects_malformed_input(text):
    with pytest.raises(ValueError):
        IntPolynomial.parse(text)


def test_shifted_multiplies_by_t_power():
    assert IntPolynomial((1, 2)).shifted(2).coeffs == (0, 0, 1, 2)
    assert IntPolynomial().shifted(3).is_zero()


def test_divides_exact_cases():
    f = IntPolynomial((1, 1))
    assert divides(f, f * IntPolynomial((-3, 0, 2)))
    assert not divides(IntPolynomial((1, 1)), IntPolynomial((1, 0, 1)))
    # 2t+2 does not divide t+1 over Z (quotient 1/2)
    assert not divides(IntPolynomial((2, 2)), IntPolynomial((1, 1)))
    assert divides(IntPolynomial((1, 1)), IntPolynomial())
    with pytest.raises(ValueError):
        divides(IntPolynomial(), f)


def test_divides_agrees_with_constructed_products():
    rng = random.Random(1208)
    for _ in range(150):
        d = rand_poly(rng, max_len=4, span=4)
        q = rand_poly(rng, max_len=4, span=4)
        if d.is_zero():
            continue
        assert divides(d, d * q)


def test_mod_polynomial_equality_includes_modulus():
    assert ModPolynomial((1, 1), 3) != ModPolynomial((1, 1), 5)
    assert ModPolynomial((4, 1), 3) == ModPolynomial((1, 1), 3)
