"""Exact arithmetic in rings of cyclotomic integers Z[zeta_m].

Elements are held in a group-ring representation: a length-m integer
vector of coefficients on zeta_m^0 .. zeta_m^(m-1), i.e. Z[x]/(x^m - 1).
Multiplication is plain cyclic convolution; reduction modulo the m-th
cyclotomic polynomial happens lazily, on equality tests and output.
"""

from __future__ import annotations

import cmath
import sys
from functools import lru_cache
from math import gcd

from . import kernels
from .errors import ConductorMismatch, NonCoprimeIndex, WrongConductor


class IntPoly:
    """Univariate polynomial with arbitrary-precision integer coefficients.

    Coefficients ascend by degree; the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x_power(cls, d, c=1):
        return cls([0] * d + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly(
            [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
        )

    def __sub__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly(
            [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
        )

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return IntPoly()
        return IntPoly(kernels.linear_convolve(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __divmod__(self, other):
        """Exact polynomial division over Z; every elimination step must divide."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dlead = other.coeffs[-1]
        ddeg = other.degree
        quo = [0] * max(len(rem) - ddeg, 0)
        for top in range(len(rem) - 1, ddeg - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            q, r = divmod(c, dlead)
            if r != 0:
                raise ValueError("division not exact over Z")
            quo[top - ddeg] = q
            for i, dc in enumerate(other.coeffs):
                rem[top - ddeg + i] -= q * dc
        return IntPoly(quo), IntPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Evaluate by Horner; works for ints, CycInt, PadicElt, complex."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return 0 * x if not isinstance(x, int) else 0
        return acc

    def __repr__(self):
        if self.is_zero():
            return "IntPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return "IntPoly(" + " + ".join(terms) + ")"


def _divisors(m):
    out = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            if d != m // d:
                out.append(m // d)
        d += 1
    return sorted(out)


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> IntPoly:
    """The m-th cyclotomic polynomial, by exact division of x^m - 1."""
    if m < 1:
        raise ValueError("conductor must be positive")
    num = IntPoly([-1] + [0] * (m - 1) + [1])  # x^m - 1
    for d in _divisors(m):
        if d < m:
            num, rem = divmod(num, cyclotomic_poly(d))
            assert rem.is_zero()
    return num


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    return cyclotomic_poly(m).degree


class CycInt:
    """An exact element of Z[zeta_m] in the group-ring representation."""

    __slots__ = ("m", "coeffs", "_canon")

    def __init__(self, m, coeffs=()):
        if m < 1:
            raise ValueError("conductor must be positive")
        c = list(coeffs)
        if len(c) > m:
            # fold exponents >= m back around x^m = 1
            folded = [0] * m
            for i, v in enumerate(c):
                folded[i % m] += v
            c = folded
        else:
            c = c + [0] * (m - len(c))
        self.m = m
        self.coeffs = tuple(c)
        self._canon = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, m):
        return cls(m)

    @classmethod
    def from_int(cls, m, c):
        return cls(m, [c])

    @classmethod
    def zeta(cls, m, e=1):
        return cls.monomial(m, e)

    @classmethod
    def monomial(cls, m, e, c=1):
        z = [0] * m
        z[e % m] = c
        return cls(m, z)

    # -- canonical form ------------------------------------------------

    def canonical(self):
        """Coefficients reduced mod Phi_m, supported on 0..phi(m)-1."""
        if self._canon is None:
            rem = IntPoly(self.coeffs) % cyclotomic_poly(self.m)
            c = list(rem.coeffs) + [0] * (self.m - len(rem.coeffs))
            self._canon = tuple(c)
        return self._canon

    def reduced(self):
        """A copy in canonical form."""
        z = CycInt(self.m, self.canonical())
        z._canon = z.coeffs
        return z

    def is_zero(self):
        return all(c == 0 for c in self.canonical())

    def is_rational(self):
        return all(c == 0 for c in self.canonical()[1:])

    def as_int(self):
        if not self.is_rational():
            raise ValueError("not a rational integer")
        return self.canonical()[0]

    # -- ring operations -------------------------------------------------

    def _check(self, other):
        if self.m != other.m:
            raise ConductorMismatch(f"conductors {self.m} and {other.m} differ")

    def __add__(self, other):
        if isinstance(other, int):
            other = CycInt.from_int(self.m, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        self._check(other)
        return CycInt(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = CycInt.from_int(self.m, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        self._check(other)
        return CycInt(self.m, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CycInt(self.m, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.m, [c * other for c in self.coeffs])
        if not isinstance(other, CycInt):
            return NotImplemented
        self._check(other)
        return CycInt(
            self.m, kernels.cyclic_convolve(list(self.coeffs), list(other.coeffs))
        )

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative powers are not defined in Z[zeta_m]")
        result = CycInt.from_int(self.m, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def shifted(self, e):
        """Multiplication by the monomial zeta_m^e (a cyclic rotation)."""
        e %= self.m
        return CycInt(self.m, self.coeffs[-e:] + self.coeffs[:-e] if e else self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycInt.from_int(self.m, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        if self.m != other.m:
            return False
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.m, self.canonical()))

    def __repr__(self):
        c = self.canonical()
        terms = [
            (f"{v}" if i == 0 else (f"z^{i}" if v == 1 else f"{v}*z^{i}"))
            for i, v in enumerate(c)
            if v != 0
        ]
        body = " + ".join(terms) if terms else "0"
        return f"CycInt(m={self.m}: {body})"

    # -- serialization --------------------------------------------------

    def to_dict(self):
        return {"m": self.m, "coeffs": list(self.canonical())}

    @classmethod
    def from_dict(cls, d):
        return cls(d["m"], d["coeffs"])


def galois_apply(z: CycInt, a: int) -> CycInt:
    """Apply zeta_m -> zeta_m^a; requires gcd(a, m) = 1."""
    if gcd(a, z.m) != 1:
        raise NonCoprimeIndex(f"gcd({a}, {z.m}) != 1")
    out = [0] * z.m
    for i, c in enumerate(z.coeffs):
        if c:
            out[(a * i) % z.m] += c
    return CycInt(z.m, out)


def change_conductor(z: CycInt, big_m: int) -> CycInt:
    """Re-embed z into Z[zeta_M] for a multiple conductor M."""
    if big_m % z.m != 0:
        raise ConductorMismatch(f"{z.m} does not divide {big_m}")
    step = big_m // z.m
    out = [0] * big_m
    for i, c in enumerate(z.coeffs):
        if c:
            out[i * step] += c
    return CycInt(big_m, out)


def lower_conductor(z: CycInt, d: int) -> CycInt:
    """Rewrite z in Z[zeta_d] when m = d*r with gcd(d, r) = 1.

    Raises WrongConductor when the split is not coprime or the element
    does not actually lie in the subring.
    """
    m = z.m
    if m == d:
        return z.reduced()
    if d < 1 or m % d != 0:
        raise WrongConductor(f"{d} does not divide conductor {m}")
    r = m // d
    if gcd(d, r) != 1:
        raise WrongConductor(f"conductor split {d}*{r} is not coprime")
    a_mul = pow(r, -1, d) if d > 1 else 0
    b_mul = pow(d, -1, r) if r > 1 else 0
    # zeta_m^e = zeta_d^(e*r^-1 mod d) * zeta_r^(e*d^-1 mod r)
    rows = [[0] * r for _ in range(d)]
    for e, c in enumerate(z.coeffs):
        if c:
            rows[(e * a_mul) % d][(e * b_mul) % r] += c
    phi_r = cyclotomic_poly(r)
    deg_r = phi_r.degree
    inner = []
    for row in rows:
        rem = IntPoly(row) % phi_r
        inner.append(list(rem.coeffs) + [0] * (deg_r - len(rem.coeffs)))
    # reduce in the zeta_d variable; Phi_d is monic with integer
    # coefficients, so synthetic division works on vector coefficients
    phi_d = cyclotomic_poly(d).coeffs
    deg_d = len(phi_d) - 1
    for top in range(d - 1, deg_d - 1, -1):
        lead = inner[top]
        if any(lead):
            for i in range(deg_d):
                tgt = inner[top - deg_d + i]
                pc = phi_d[i]
                if pc:
                    for j in range(deg_r):
                        tgt[j] -= pc * lead[j]
            inner[top] = [0] * deg_r
    out = [0] * d
    for alpha in range(deg_d):
        vec = inner[alpha]
        if any(vec[1:]):
            raise WrongConductor(f"element is not in Z[zeta_{d}]")
        out[alpha] = vec[0]
    return CycInt(d, out)


def embed_complex(z: CycInt, j: int):
    """Evaluate z at e^(2*pi*i*j/m); returns (value, error_bound)."""
    if gcd(j, z.m) != 1:
        raise NonCoprimeIndex(f"gcd({j}, {z.m}) != 1")
    m = z.m
    val = 0j
    total = 0
    for i, c in enumerate(z.coeffs):
        if c:
            val += c * cmath.exp(2j * cmath.pi * ((j * i) % m) / m)
            total += abs(c)
    err = 8 * total * sys.float_info.epsilon
    return val, err
