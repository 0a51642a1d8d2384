"""Dense exact integer polynomials and their reductions mod a prime.

A polynomial is a tuple of arbitrary-precision integer coefficients in
ascending degree: ``(1, -1, 1)`` is t**2 - t + 1.  The zero polynomial is
the empty tuple.  Every constructor and operation restores canonical form
(no trailing zero coefficients), so structural equality is value equality.
All values are immutable and safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

#: Degree of the zero polynomial.  A genuine sentinel (never -1), chosen so
#: that deg(f * g) == deg(f) + deg(g) holds even when one factor is zero.
MINUS_INFINITY = float("-inf")

Degree = Union[int, float]


def is_prime(n: int) -> bool:
    """Trial-division primality test; every input here is desk scale."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def is_odd_prime(n: int) -> bool:
    return n != 2 and is_prime(n)


@dataclass(frozen=True, init=False)
class IntPolynomial:
    """Element of Z[t] in dense ascending-coefficient form."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Parse the comma-separated ascending format, e.g. ``"1,-1,1"``."""
        if not text.strip():
            raise ValueError("empty coefficient list")
        try:
            return cls(int(part.strip()) for part in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad coefficient list {text!r}") from exc

    def render(self) -> str:
        """Inverse of :meth:`parse`; round-trips exactly."""
        if not self.coeffs:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        return self.render()

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def valuation(self) -> int:
        """Largest k with t**k dividing the polynomial (nonzero input only)."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no t-adic valuation")
        return next(i for i, c in enumerate(self.coeffs) if c != 0)

    def __add__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            + (other.coeffs[i] if i < len(other.coeffs) else 0)
            for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "IntPolynomial":
        return IntPolynomial((other,)) - self

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = IntPolynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, j: int) -> "IntPolynomial":
        """Multiply by t**j."""
        if j < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * j + self.coeffs)

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = evaluate

    def normalized(self) -> "IntPolynomial":
        """Canonical representative of the unit-multiple class.

        Strips the t-power factor and flips sign so the constant term is
        nonzero and the leading coefficient positive; idempotent.
        """
        if not self.coeffs:
            raise ValueError("cannot normalize zero")
        cs = self.coeffs[self.valuation:]
        if cs[-1] < 0:
            cs = tuple(-c for c in cs)
        return IntPolynomial(cs)


def alternating_polynomial(p: int) -> IntPolynomial:
    """t**(p-1) - t**(p-2) + ... - t + 1 for an odd prime p.

    Equals (t**p + 1)/(t + 1); the polynomial singled out by the
    unit-scan uniqueness result.
    """
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return IntPolynomial((-1) ** n for n in range(p))


@dataclass(frozen=True, init=False)
class ModPolynomial:
    """Element of F_p[t], dense ascending coefficients reduced into [0, p)."""

    coeffs: tuple[int, ...]
    modulus: int

    def __init__(self, coeffs: Iterable[int], modulus: int):
        if not is_prime(modulus):
            raise ValueError(f"modulus {modulus} is not prime")
        cs = [int(c) % modulus for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "modulus", modulus)

    def _check(self, other: "ModPolynomial") -> None:
        if self.modulus != other.modulus:
            raise ValueError("mixed moduli")

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def __add__(self, other: "ModPolynomial") -> "ModPolynomial":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ModPolynomial(
            (
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ),
            self.modulus,
        )

    def __neg__(self) -> "ModPolynomial":
        return ModPolynomial((-c for c in self.coeffs), self.modulus)

    def __mul__(self, other: "ModPolynomial") -> "ModPolynomial":
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return ModPolynomial((), self.modulus)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ModPolynomial(out, self.modulus)

    def __pow__(self, n: int) -> "ModPolynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = ModPolynomial((1,), self.modulus)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, j: int) -> "ModPolynomial":
        if j < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return ModPolynomial((0,) * j + self.coeffs, self.modulus)


def reduce_mod(f: IntPolynomial, p: int) -> ModPolynomial:
    """Coefficient-wise reduction Z[t] -> F_p[t]; a ring homomorphism."""
    return ModPolynomial(f.coeffs, p)


def divides(divisor: IntPolynomial, dividend: IntPolynomial) -> bool:
    """Exact divisibility in Z[t]: remainder zero and integral quotient."""
    if divisor.is_zero():
        raise ValueError("division by zero polynomial")
    if dividend.is_zero():
        return True
    if dividend.degree < divisor.degree:
        return False
    rem = [Fraction(c) for c in dividend.coeffs]
    width = len(divisor.coeffs)
    lead = Fraction(divisor.coeffs[-1])
    quotient: list[Fraction] = []
    for i in range(len(rem) - width, -1, -1):
        q = rem[i + width - 1] / lead
        quotient.append(q)
        if q:
            for j, d in enumerate(divisor.coeffs):
                rem[i + j] -= q * d
    return all(r == 0 for r in rem) and all(q.denominator == 1 for q in quotient)


def content(f: IntPolynomial) -> int:
    """gcd of the coefficients (0 for the zero polynomial)."""
    return math.gcd(*(abs(c) for c in f.coeffs)) if f.coeffs else 0
