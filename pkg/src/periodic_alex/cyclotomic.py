"""Exact arithmetic in Z[zeta_p], the ring of integers of the p-th
cyclotomic field, for an odd prime p.

Elements are stored in the power basis 1, zeta, ..., zeta**(p-2).  The
relation zeta**(p-1) = -(1 + zeta + ... + zeta**(p-2)) is applied eagerly
after every product, so representations are unique and equality is
coordinate equality.

Two independent routes compute the field norm: the conjugate product
(production path) and the resultant Res(Phi_p, A) via a fraction-free
determinant (cross-check path).  They must always agree; tests compare
them on random elements and never collapse the two routes into one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .polynomials import IntPolynomial, is_odd_prime


def _fold(p: int, buckets: Sequence[int]) -> list[int]:
    """Reduce a zeta-exponent vector (any length) into the power basis."""
    acc = [0] * p
    for e, c in enumerate(buckets):
        acc[e % p] += c
    top = acc[p - 1]
    return [acc[i] - top for i in range(p - 1)]


@dataclass(frozen=True, init=False)
class CycInt:
    """Element of Z[zeta_p] with power-basis coordinates of length p-1."""

    p: int
    coords: tuple[int, ...]

    def __init__(self, p: int, coords: Iterable[int]):
        if not is_odd_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        cs = tuple(int(c) for c in coords)
        if len(cs) != p - 1:
            raise ValueError(f"need {p - 1} power-basis coordinates, got {len(cs)}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coords", cs)

    @classmethod
    def zero(cls, p: int) -> "CycInt":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def one(cls, p: int) -> "CycInt":
        return cls.from_int(p, 1)

    @classmethod
    def from_int(cls, p: int, n: int) -> "CycInt":
        return cls(p, (n,) + (0,) * (p - 2))

    def _check_same(self, other: "CycInt") -> None:
        if self.p != other.p:
            raise ValueError("mixed cyclotomic fields")

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_value(self) -> int:
        if not self.is_rational():
            raise ValueError("not a rational integer")
        return self.coords[0]

    def __add__(self, other: "CycInt | int") -> "CycInt":
        if isinstance(other, int):
            other = CycInt.from_int(self.p, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        self._check_same(other)
        return CycInt(self.p, (a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt(self.p, (-c for c in self.coords))

    def __sub__(self, other: "CycInt | int") -> "CycInt":
        if isinstance(other, int):
            other = CycInt.from_int(self.p, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "CycInt":
        return CycInt.from_int(self.p, other) - self

    def __mul__(self, other: "CycInt | int") -> "CycInt":
        if isinstance(other, int):
            return CycInt(self.p, (c * other for c in self.coords))
        if not isinstance(other, CycInt):
            return NotImplemented
        self._check_same(other)
        n = self.p - 1
        buckets = [0] * (2 * n - 1)
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                buckets[i + j] += a * b
        return CycInt(self.p, _fold(self.p, buckets))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CycInt":
        if n < 0:
            raise ValueError("negative power; invert units explicitly")
        result = CycInt.one(self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois(self, k: int) -> "CycInt":
        """Apply the automorphism zeta -> zeta**k; requires gcd(k, p) = 1."""
        k %= self.p
        if k == 0:
            raise ValueError(f"{k} is not prime to {self.p}")
        buckets = [0] * self.p
        for i, c in enumerate(self.coords):
            buckets[(i * k) % self.p] += c
        return CycInt(self.p, _fold(self.p, buckets))

    def conj(self) -> "CycInt":
        """Complex conjugation, the automorphism zeta -> zeta**(-1)."""
        return self.galois(self.p - 1)

    def norm(self) -> int:
        """Field norm as the product over all p-1 conjugates.

        Always a rational integer; for odd p it is nonnegative because the
        field is totally imaginary (conjugates pair into absolute squares).
        """
        prod = self
        for k in range(2, self.p):
            prod = prod * self.galois(k)
        if not prod.is_rational():
            raise ArithmeticError("conjugate product left the rationals")
        return prod.coords[0]

    def norm_via_resultant(self) -> int:
        """Field norm as Res(Phi_p, A) for the representing polynomial A.

        Independent of :meth:`norm`: a Sylvester determinant evaluated by
        fraction-free elimination.  Kept as a separate route on purpose.
        """
        coords = list(self.coords)
        while coords and coords[-1] == 0:
            coords.pop()
        if not coords:
            return 0
        if len(coords) == 1:
            return coords[0] ** (self.p - 1)
        phi_desc = [1] * self.p
        a_desc = coords[::-1]
        return _det_bareiss(_sylvester(phi_desc, a_desc))

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1


def zeta(p: int, k: int = 1) -> CycInt:
    """The root of unity zeta_p**k in power-basis form."""
    buckets = [0] * p
    buckets[k % p] = 1
    return CycInt(p, _fold(p, buckets))


def evaluate_at_zeta(f: IntPolynomial, p: int, k: int = 1) -> CycInt:
    """Evaluate an integer polynomial at zeta_p**k (any degree; exponents fold)."""
    buckets = [0] * p
    for i, c in enumerate(f.coeffs):
        buckets[(i * k) % p] += c
    return CycInt(p, _fold(p, buckets))


def _sylvester(f_desc: list[int], g_desc: list[int]) -> list[list[int]]:
    """Sylvester matrix of f and g given descending coefficients."""
    m = len(f_desc) - 1
    n = len(g_desc) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + f_desc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + g_desc + [0] * (size - n - 1 - i))
    return rows


def _det_bareiss(m: list[list[int]]) -> int:
    """Integer determinant by Bareiss fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class UnitWitness:
    """A unit together with its verified inverse and norm sign."""

    element: CycInt
    inverse: CycInt
    norm_sign: int


def _ftrim(cs: list[Fraction]) -> list[Fraction]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _fsub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return _ftrim(
        [
            (a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
            for i in range(n)
        ]
    )


def _fmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _ftrim(out)


def _fdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(a)
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for i in range(len(rem) - len(b), -1, -1):
        q = rem[i + len(b) - 1] / lead
        quo[i] = q
        if q:
            for j, d in enumerate(b):
                rem[i + j] -= q * d
    return _ftrim(quo), _ftrim(rem)


def invert_unit(a: CycInt) -> UnitWitness:
    """Invert a unit by the extended Euclidean algorithm against Phi_p.

    Works over Q[x]; the Bezout cofactor divided by the constant gcd must
    have integral coordinates for a genuine unit.  A surviving denominator
    is a hard internal error, never silently rounded.
    """
    nrm = a.norm()
    if abs(nrm) != 1:
        raise ValueError("not a unit")
    p = a.p
    # Phi_p is irreducible, so gcd(A, Phi_p) is a nonzero constant.
    r0 = _ftrim([Fraction(c) for c in a.coords])
    r1 = [Fraction(1)] * p
    s0: list[Fraction] = [Fraction(1)]
    s1: list[Fraction] = []
    while r1:
        q, r = _fdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _fsub(s0, _fmul(q, s1))
    if len(r0) != 1:
        raise ArithmeticError("gcd with the cyclotomic polynomial is not constant")
    c = r0[0]
    coords = []
    for i in range(p - 1):
        q = s0[i] / c if i < len(s0) else Fraction(0)
        if q.denominator != 1:
            raise ArithmeticError("unit inverse has a residual denominator")
        coords.append(int(q))
    inverse = CycInt(p, coords)
    if a * inverse != CycInt.one(p):
        raise ArithmeticError("unit inverse failed verification")
    return UnitWitness(a, inverse, int(nrm))


def conjugate_linear_product(leads: Sequence[CycInt], roots: Sequence[CycInt]) -> IntPolynomial:
    """Expand prod_k (leads[k] * t - roots[k]) and demand integer coefficients.

    The factors here always run over a full Galois orbit, so the expanded
    coefficients are rational integers; anything else is an internal error.
    """
    if len(leads) != len(roots) or not leads:
        raise ValueError("factor lists must be nonempty and aligned")
    p = leads[0].p
    coeffs = [CycInt.one(p)]
    for lead, root in zip(leads, roots):
        nxt = [CycInt.zero(p)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + c * lead
            nxt[i] = nxt[i] - c * root
        coeffs = nxt
    out = []
    for c in coeffs:
        if not c.is_rational():
            raise ArithmeticError("conjugate product has an irrational coefficient")
        out.append(c.coords[0])
    return IntPolynomial(out)


def char_poly(e: CycInt) -> IntPolynomial:
    """Characteristic polynomial prod_k (t - sigma_k(e)), monic of degree p-1.

    Its constant term is norm(e) up to the sign (-1)**(p-1) = +1.
    """
    conjugates = [e.galois(k) for k in range(1, e.p)]
    ones = [CycInt.one(e.p)] * (e.p - 1)
    return conjugate_linear_product(ones, conjugates)


def is_root_of_unity(a: CycInt) -> Optional[tuple[int, int]]:
    """Return (sign, r) if a == sign * zeta**r, else None.

    All roots of unity in Q(zeta_p) have the form +-zeta**r, so the 2p
    candidates are checked exhaustively.
    """
    for r in range(a.p):
        z = zeta(a.p, r)
        if a == z:
            return (1, r)
        if a == -z:
            return (-1, r)
    return None


def lemma1_ratio(e: CycInt) -> CycInt:
    """The ratio e / conj(e) for a unit e; always a p-th root of unity.

    Its p-th power is exactly 1, which the bounded scans verify instead of
    recovering the root-of-unity factor and real unit separately.
    """
    if not e.is_unit():
        raise ValueError("not a unit")
    witness = invert_unit(e.conj())
    return e * witness.inverse


def render(a: CycInt) -> str:
    """Serialize as ``p=5;[0,1,0,0]``; inverse of :func:`parse`."""
    return f"p={a.p};[{','.join(str(c) for c in a.coords)}]"


def parse(text: str) -> CycInt:
    head, _, body = text.partition(";")
    if not head.startswith("p=") or not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"bad cyclotomic literal {text!r}")
    try:
        p = int(head[2:])
        inner = body[1:-1].strip()
        coords = [int(part.strip()) for part in inner.split(",")] if inner else []
    except ValueError as exc:
        raise ValueError(f"bad cyclotomic literal {text!r}") from exc
    return CycInt(p, coords)


def norm_routes_agree(a: CycInt) -> bool:
    """True when the conjugate-product and resultant norms agree."""
    return a.norm() == a.norm_via_resultant()
