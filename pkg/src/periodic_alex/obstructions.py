"""Periodicity obstructions for Alexander polynomials.

Three independent gates for a knot polynomial Delta and an odd prime
period p:

* the mod-p congruence Delta == +-t**j * ((t**lam - 1)/(t - 1))**(p-1)
  * Delta_quot**p, searched over sign and shift with an explicit witness;
* the linear substitution conditions tying the numerator/denominator pair
  (g, h) of the first homology eigenvalue decomposition at zeta_p;
* the uniqueness statement: a degree p-1 candidate passes only if it is
  exactly the alternating polynomial.

``scan_units`` enumerates unit candidates in a coordinate box and filters
by the four constraints whose only survivors are -zeta**r, so the set of
characteristic polynomials collapses to the alternating polynomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import partial
from typing import Optional

from .cyclotomic import CycInt, char_poly, conjugate_linear_product, evaluate_at_zeta, zeta
from .parallel import merged_union
from .polynomials import (
    IntPolynomial,
    ModPolynomial,
    alternating_polynomial,
    is_odd_prime,
    reduce_mod,
)


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL_MONIC = "FAIL_MONIC"
    FAIL_DEGREE = "FAIL_DEGREE"
    FAIL_VALUE = "FAIL_VALUE"


@dataclass(frozen=True)
class MurasugiWitness:
    """Sign and shift realizing the congruence; re-substitutable exactly."""

    sign: int
    shift: int


@dataclass(frozen=True)
class TorresWitness:
    """Exponent b realizing both substitution identities."""

    b: int


@dataclass(frozen=True, init=False)
class MurasugiInstance:
    """One congruence problem: knot polynomial, quotient polynomial,
    linking number lam >= 1, odd prime period p.  Both polynomials are
    stored normalized (nonzero constant term, positive leading
    coefficient), which is harmless modulo units of F_p[t, 1/t]."""

    delta_k: IntPolynomial
    delta_kbar: IntPolynomial
    lam: int
    p: int

    def __init__(self, delta_k: IntPolynomial, delta_kbar: IntPolynomial, lam: int, p: int):
        if not is_odd_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        if lam < 1:
            raise ValueError("linking number must be at least 1")
        object.__setattr__(self, "delta_k", delta_k.normalized())
        object.__setattr__(self, "delta_kbar", delta_kbar.normalized())
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "p", p)


def _murasugi_rhs(inst: MurasugiInstance) -> ModPolynomial:
    """((t**lam - 1)/(t - 1))**(p-1) * delta_kbar**p over F_p."""
    cyclic = ModPolynomial((1,) * inst.lam, inst.p)
    return cyclic ** (inst.p - 1) * reduce_mod(inst.delta_kbar, inst.p) ** inst.p


def murasugi_witness_holds(inst: MurasugiInstance, witness: MurasugiWitness) -> bool:
    """Re-substitute a witness; exact equality in F_p[t], no search."""
    candidate = _murasugi_rhs(inst).shifted(witness.shift)
    if witness.sign < 0:
        candidate = -candidate
    return candidate == reduce_mod(inst.delta_k, inst.p)


def murasugi_congruence_check(inst: MurasugiInstance) -> Optional[MurasugiWitness]:
    """Search for the congruence witness; None is a proof of failure.

    The shift ranges over [0, deg Delta_K + p*deg Delta_quot +
    (lam-1)(p-1)], which covers every possible degree alignment; signs are
    tried +1 before -1 at each shift, so the returned witness is the first
    in (shift, sign) order.
    """
    rhs = _murasugi_rhs(inst)
    target = reduce_mod(inst.delta_k, inst.p)
    j_max = (
        int(inst.delta_k.degree)
        + inst.p * int(inst.delta_kbar.degree)
        + (inst.lam - 1) * (inst.p - 1)
    )
    for j in range(j_max + 1):
        shifted = rhs.shifted(j)
        if shifted == target:
            return MurasugiWitness(1, j)
        if -shifted == target:
            return MurasugiWitness(-1, j)
    return None


def murasugi_search(
    delta_k: IntPolynomial,
    delta_kbar: IntPolynomial,
    p: int,
    lam_max: Optional[int] = None,
) -> list[tuple[int, MurasugiWitness]]:
    """Witnesses across linking numbers 1..lam_max (default 2p)."""
    if lam_max is None:
        lam_max = 2 * p
    hits = []
    for lam in range(1, lam_max + 1):
        witness = murasugi_congruence_check(MurasugiInstance(delta_k, delta_kbar, lam, p))
        if witness is not None:
            hits.append((lam, witness))
    return hits


@dataclass(frozen=True, init=False)
class GHPair:
    """Numerator/denominator pair (g, h) in Z[u] evaluated at zeta_p."""

    g: IntPolynomial
    h: IntPolynomial
    p: int

    def __init__(self, g: IntPolynomial, h: IntPolynomial, p: int):
        if not is_odd_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "p", p)


def torres_witness_holds(pair: GHPair, witness: TorresWitness) -> bool:
    """Check h(zeta**-1) = -zeta**b g(zeta) and g(zeta**-1) = -zeta**b h(zeta)."""
    b = witness.b
    if not 0 <= b < pair.p:
        return False
    g_pos = evaluate_at_zeta(pair.g, pair.p, 1)
    h_pos = evaluate_at_zeta(pair.h, pair.p, 1)
    g_neg = evaluate_at_zeta(pair.g, pair.p, pair.p - 1)
    h_neg = evaluate_at_zeta(pair.h, pair.p, pair.p - 1)
    z = zeta(pair.p, b)
    return h_neg == -(z * g_pos) and g_neg == -(z * h_pos)


def torres_linear_check(pair: GHPair) -> Optional[TorresWitness]:
    """Smallest b in [0, p) satisfying both substitution identities.

    The two identities are images of each other under zeta -> zeta**-1,
    but both are checked explicitly.  When g(zeta) != 0 the witness is
    unique, so "smallest" is not a real choice.
    """
    for b in range(pair.p):
        witness = TorresWitness(b)
        if torres_witness_holds(pair, witness):
            return witness
    return None


def candidate_from_gh(pair: GHPair) -> IntPolynomial:
    """Expand prod_k (sigma_k(g(zeta)) * t - sigma_k(h(zeta))) into Z[t].

    The leading coefficient is norm(g(zeta)) and the constant term is
    norm(h(zeta)); both are verified after expansion.
    """
    g_val = evaluate_at_zeta(pair.g, pair.p)
    lead = g_val.norm()
    if lead == 0:
        raise ValueError("degenerate g")
    h_val = evaluate_at_zeta(pair.h, pair.p)
    leads = [g_val.galois(k) for k in range(1, pair.p)]
    roots = [h_val.galois(k) for k in range(1, pair.p)]
    delta = conjugate_linear_product(leads, roots)
    if delta.leading_coefficient != lead or delta.constant_term != h_val.norm():
        raise ArithmeticError("conjugate expansion lost a norm cross-check")
    return delta


def theorem1_check(delta: IntPolynomial, p: int) -> Verdict:
    """Uniqueness gate for degree p-1 candidates.

    Order of checks: degree, monicity, exact value against the alternating
    polynomial.  The input is compared up to the usual normalization.
    """
    target = alternating_polynomial(p)
    if delta.is_zero():
        return Verdict.FAIL_DEGREE
    delta = delta.normalized()
    if delta.degree != p - 1:
        return Verdict.FAIL_DEGREE
    if delta.leading_coefficient != 1:
        return Verdict.FAIL_MONIC
    if delta != target:
        return Verdict.FAIL_VALUE
    return Verdict.PASS


def _scan_chunk(p: int, height: int, firsts: tuple[int, ...]) -> set[IntPolynomial]:
    """Scan all boxes with the given first coordinates.

    Filters, in checking order: conj(e)*e == 1 (conjugate-inverse unit),
    |norm(e)| == 1, |norm(1 - e)| == 1 (the candidate takes value +-1 at
    t = 1), norm(1 + e) != 0 (nonzero value at t = -1).
    """
    one = CycInt.one(p)
    span = range(-height, height + 1)
    found: set[IntPolynomial] = set()
    for first in firsts:
        for rest in itertools.product(span, repeat=p - 2):
            coords = (first, *rest)
            if not any(coords):
                continue
            e = CycInt(p, coords)
            if e.conj() * e != one:
                continue
            if abs(e.norm()) != 1:
                continue
            if abs((one - e).norm()) != 1:
                continue
            if (one + e).norm() == 0:
                continue
            found.add(char_poly(e).normalized())
    return found


def scan_units(p: int, height: int, jobs: int = 1) -> set[IntPolynomial]:
    """Characteristic polynomials of all box units passing the four filters.

    The scan partitions on the first coordinate, so results are identical
    for any job count; workers return sets that merge by union.
    """
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if height < 1:
        raise ValueError("height must be at least 1")
    firsts = range(-height, height + 1)
    return merged_union(partial(_scan_chunk, p, height), firsts, jobs)
