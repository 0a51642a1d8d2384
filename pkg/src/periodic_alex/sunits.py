"""S-unit equations over Q(zeta_p) and the finiteness bound.

An element beta/d (beta integral, d a positive rational integer) is an
S-unit exactly when, in lowest terms, d factors over S and |norm(beta)|
factors over S: the norm collects the residue degrees of every prime
ideal dividing beta, so S-smoothness of the norm is equivalent to the
vanishing of all valuations outside S.  ``solve_sunit_equation`` exhausts
x + y = 1 over a coordinate box and denominator bound; the count is
always dominated by the doubly exponential bound of
``theorem2_bound``, which callers can compare without expanding the
tower.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from decimal import ROUND_FLOOR, Decimal, localcontext
from functools import partial
from typing import Iterable, Optional

from .cyclotomic import CycInt, conjugate_linear_product, evaluate_at_zeta
from .parallel import merged_union
from .polynomials import IntPolynomial, is_odd_prime, is_prime


def multiplicative_order(q: int, p: int) -> int:
    """Order of q in (Z/p)*; requires p prime and q not divisible by p."""
    q %= p
    if q == 0:
        raise ValueError(f"{q} is divisible by {p}")
    order, acc = 1, q
    while acc != 1:
        acc = acc * q % p
        order += 1
    return order


def _check_prime_set(p: int, s: Iterable[int]) -> frozenset[int]:
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    out = frozenset(int(q) for q in s)
    for q in sorted(out):
        if not is_prime(q):
            raise ValueError(f"{q} is not prime")
    if p in out:
        raise ValueError(f"{p} ramifies; it may not belong to S")
    return out


def count_primes_above(p: int, s: Iterable[int]) -> int:
    """Number of primes of Q(zeta_p) above the members of S.

    A rational prime q != p splits into (p-1)/ord_p(q) primes, each with
    residue degree ord_p(q); p itself is excluded (it ramifies).
    """
    out = _check_prime_set(p, s)
    return sum((p - 1) // multiplicative_order(q, p) for q in out)


@dataclass(frozen=True)
class BoundValue:
    """A bound stored as base**exponent so towers never expand eagerly."""

    base: int
    exponent: int

    def value(self) -> int:
        return self.base ** self.exponent

    def digits(self) -> int:
        """Exact decimal digit count of the value, tower-safe."""
        return _digits_of_power(self.base, self.exponent)

    def at_least(self, n: int) -> bool:
        """Exact comparison value >= n without expanding huge towers."""
        if n <= 1:
            return True
        if self.base <= 1:
            return 1 >= n
        # base >= 2**(bitlen-1), so the value has at least this many bits
        low_bits = self.exponent * (self.base.bit_length() - 1)
        if low_bits >= n.bit_length():
            return True
        return self.value() >= n

    def to_json(self) -> dict:
        return {"base": self.base, "exponent": self.exponent, "digits": self.digits()}


def _digits_of_power(base: int, exponent: int) -> int:
    if base < 1 or exponent < 0:
        raise ValueError("digit count needs base >= 1 and exponent >= 0")
    if base == 1 or exponent == 0:
        return 1
    # small enough to expand exactly (stays well under int->str limits)
    if exponent * base.bit_length() <= 10_000:
        return len(str(base ** exponent))
    tens, b = 0, base
    while b % 10 == 0:
        b //= 10
        tens += 1
    if b == 1:
        return tens * exponent + 1
    # base is not a power of ten, so exponent*log10(base) is irrational;
    # escalate precision until the floor is certified
    prec = 50
    while True:
        with localcontext() as ctx:
            ctx.prec = prec
            t = Decimal(exponent) * Decimal(base).log10()
            floor_t = int(t.to_integral_value(rounding=ROUND_FLOOR))
            gap = min(t - Decimal(floor_t), Decimal(floor_t + 1) - t)
            if gap > Decimal(10) ** (t.adjusted() - prec + 3):
                return floor_t + 1
        prec *= 2


def evertse_bound(degree: int, t_plus_inf: int) -> BoundValue:
    """3 * 7**(degree + t_plus_inf): solutions of x + y = 1 in T-units
    over a field of the given degree, with t_plus_inf counting the finite
    places of T together with the archimedean ones.

    The value is not a nontrivial perfect power, so it is carried as
    BoundValue(value, 1).
    """
    if degree < 1:
        raise ValueError("field degree must be at least 1")
    if t_plus_inf < 1:
        raise ValueError("place count must be at least 1")
    return BoundValue(3 * 7 ** (degree + t_plus_inf), 1)


def theorem2_bound(p: int, s: Iterable[int]) -> BoundValue:
    """((p+1)/2) ** (3 * 7**(3(p-1)/2 + #S_F)) for F = Q(zeta_p).

    #S_F counts the primes of F above S; the exponent is the specialized
    unit-equation bound at degree p-1 with (p-1)/2 archimedean places,
    which is re-derived independently as a consistency check.
    """
    above = count_primes_above(p, s)
    exponent = 3 * 7 ** (3 * (p - 1) // 2 + above)
    check = evertse_bound(p - 1, above + (p - 1) // 2)
    if exponent != check.value():
        raise ArithmeticError("bound exponent disagrees with the unit-equation form")
    return BoundValue((p + 1) // 2, exponent)


def is_s_smooth(n: int, s: Iterable[int]) -> bool:
    """True when every prime factor of n >= 1 lies in S."""
    if n < 1:
        raise ValueError("smoothness is tested on positive integers")
    for q in sorted(set(int(q) for q in s)):
        while n % q == 0:
            n //= q
    return n == 1


@dataclass(frozen=True, init=False)
class SUnitContext:
    """Search context: field prime p, prime set S (p excluded), coordinate
    height bound, and denominator bound."""

    p: int
    s: frozenset[int]
    height: int
    denom_bound: int

    def __init__(self, p: int, s: Iterable[int] = (), height: int = 1, denom_bound: int = 1):
        s = _check_prime_set(p, s)
        if height < 1:
            raise ValueError("height must be at least 1")
        if denom_bound < 1:
            raise ValueError("denominator bound must be at least 1")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "height", height)
        object.__setattr__(self, "denom_bound", denom_bound)


@dataclass(frozen=True, init=False)
class SUnitElement:
    """beta/d with beta in Z[zeta_p] and d a positive integer.

    The constructor divides out gcd(content(beta), d), so representations
    are unique and equality is structural.
    """

    numerator: CycInt
    denominator: int

    def __init__(self, numerator: CycInt, denominator: int = 1):
        denominator = int(denominator)
        if denominator < 1:
            raise ValueError("denominator must be positive")
        g = math.gcd(denominator, *(abs(c) for c in numerator.coords))
        if g > 1:
            numerator = CycInt(numerator.p, (c // g for c in numerator.coords))
            denominator //= g
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    @property
    def p(self) -> int:
        return self.numerator.p

    def complement(self) -> "SUnitElement":
        """1 - self, over the same denominator before re-canonicalizing."""
        num = CycInt.from_int(self.p, self.denominator) - self.numerator
        return SUnitElement(num, self.denominator)

    def plus(self, other: "SUnitElement") -> "SUnitElement":
        if self.p != other.p:
            raise ValueError("mixed cyclotomic fields")
        lcm = self.denominator * other.denominator // math.gcd(self.denominator, other.denominator)
        num = self.numerator * (lcm // self.denominator) + other.numerator * (
            lcm // other.denominator
        )
        return SUnitElement(num, lcm)

    def is_one(self) -> bool:
        return self.denominator == 1 and self.numerator == CycInt.one(self.p)

    def norm_numerator(self) -> int:
        return self.numerator.norm()

    def norm_denominator(self) -> int:
        return self.denominator ** (self.p - 1)


@dataclass(frozen=True, init=False)
class SUnitSolution:
    """Ordered pair (x, y) with x + y = 1, validated on construction."""

    x: SUnitElement
    y: SUnitElement

    def __init__(self, x: SUnitElement, y: SUnitElement):
        if not x.plus(y).is_one():
            raise ValueError("solution components must sum to 1")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)


def s_unit_test(element: SUnitElement, ctx: SUnitContext) -> bool:
    """Decide S-unit membership through norms on the canonical form."""
    if element.p != ctx.p:
        raise ValueError("element and context use different primes")
    nrm = element.numerator.norm()
    if nrm == 0:
        return False
    return is_s_smooth(element.denominator, ctx.s) and is_s_smooth(abs(nrm), ctx.s)


def _solution_key(sol: SUnitSolution) -> tuple:
    return (sol.x.denominator, sol.x.numerator.coords, sol.y.denominator, sol.y.numerator.coords)


def _sunit_chunk(ctx: SUnitContext, firsts: tuple[int, ...]) -> set[SUnitSolution]:
    span = range(-ctx.height, ctx.height + 1)
    denoms = [d for d in range(1, ctx.denom_bound + 1) if is_s_smooth(d, ctx.s)]
    sols: set[SUnitSolution] = set()
    for first in firsts:
        for rest in itertools.product(span, repeat=ctx.p - 2):
            num = CycInt(ctx.p, (first, *rest))
            for d in denoms:
                x = SUnitElement(num, d)
                if not s_unit_test(x, ctx):
                    continue
                y = x.complement()
                if not s_unit_test(y, ctx):
                    continue
                # y may leave the search box; close under the swap so the
                # returned set is symmetric regardless
                sols.add(SUnitSolution(x, y))
                sols.add(SUnitSolution(y, x))
    return sols


def solve_sunit_equation(ctx: SUnitContext, jobs: int = 1) -> list[SUnitSolution]:
    """All solutions of x + y = 1 in S-units found in the search box.

    Numerator coordinates range over [-height, height]**(p-1) and
    denominators over the S-smooth integers up to denom_bound; the result
    is closed under (x, y) -> (y, x), deduplicated through the canonical
    element form, and sorted so the output order is identical for every
    job count.
    """
    firsts = range(-ctx.height, ctx.height + 1)
    found = merged_union(partial(_sunit_chunk, ctx), firsts, jobs)
    return sorted(found, key=_solution_key)


def _enumerate_chunk(
    ctx: SUnitContext, gh_height: int, max_mult: int, firsts: tuple[int, ...]
) -> set[IntPolynomial]:
    span = range(-gh_height, gh_height + 1)
    p = ctx.p
    out: set[IntPolynomial] = set()
    for gfirst in firsts:
        for grest in itertools.product(span, repeat=p - 2):
            g = IntPolynomial((gfirst, *grest))
            g_val = evaluate_at_zeta(g, p)
            lead = g_val.norm()
            if lead == 0:
                continue
            if not is_s_smooth(lead, ctx.s):
                continue
            g_conj = [g_val.galois(k) for k in range(1, p)]
            # product of the other conjugates: g_val * adj == lead
            adj = CycInt.one(p)
            for c in g_conj[1:]:
                adj = adj * c
            for hvec in itertools.product(span, repeat=p - 1):
                h_val = evaluate_at_zeta(IntPolynomial(hvec), p)
                if h_val.is_zero():
                    continue
                if abs((g_val - h_val).norm()) != 1:
                    continue
                h_conj = [h_val.galois(k) for k in range(1, p)]
                mult = sum(
                    1 for k in range(p - 1) if h_conj[k] * g_val == g_conj[k] * h_val
                )
                if mult > max_mult:
                    continue
                # root ratio alpha = h(zeta)/g(zeta) as an exact element
                alpha = SUnitElement(h_val * adj, lead)
                if not s_unit_test(alpha, ctx):
                    continue
                if not s_unit_test(alpha.complement(), ctx):
                    continue
                out.add(conjugate_linear_product(g_conj, h_conj).normalized())
    return out


def enumerate_candidates(
    ctx: SUnitContext,
    gh_height: int,
    max_multiplicity: Optional[int] = None,
    jobs: int = 1,
) -> list[IntPolynomial]:
    """Candidate polynomials prod_k (sigma_k(g) t - sigma_k(h)) surviving
    the finiteness filters.

    Pairs (g, h) range over coefficient vectors of degree < p-1 with
    entries in [-gh_height, gh_height].  Kept are candidates with nonzero
    constant term, |value at 1| = 1, S-smooth leading coefficient, root
    multiplicity at most max_multiplicity (default (p-1)/2, which excludes
    rational root ratios), and root ratio alpha with alpha and 1 - alpha
    both S-units.  The last filter is decisive: candidates passing the
    cheap coefficient filters can still have non-S-unit root ratios.
    """
    if gh_height < 1:
        raise ValueError("gh_height must be at least 1")
    if max_multiplicity is None:
        max_multiplicity = (ctx.p - 1) // 2
    if max_multiplicity < 1:
        raise ValueError("max multiplicity must be at least 1")
    firsts = range(-gh_height, gh_height + 1)
    found = merged_union(
        partial(_enumerate_chunk, ctx, gh_height, max_multiplicity), firsts, jobs
    )
    return sorted(found, key=lambda f: (len(f.coeffs), f.coeffs))
