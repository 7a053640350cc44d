"""Exact arithmetic: integer polynomials, cyclotomic polynomials and numbers.

Everything here is integer (or Fraction) arithmetic; no floats are used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import NotExact, NotRational

__all__ = [
    "Poly",
    "ModInt",
    "CyclotomicValue",
    "cyclotomic_polynomial",
    "reversed_cyclotomic",
    "mobius",
    "euler_phi",
    "divisors",
    "factorize",
    "lcm",
    "poly_divmod",
    "poly_divexact",
]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    """Dense integer polynomial; ``coeffs[i]`` is the coefficient of x**i."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "Poly":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def constant(cls, c: int) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute_power(self, k: int) -> "Poly":
        """Return p(x**k)."""
        out = [0] * (k * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return Poly(out)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*x^{i}")
        return "Poly(" + " + ".join(terms) + ")"


def poly_divmod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Division with remainder; the leading coefficient of ``den`` must be +-1
    or divide every intermediate leading coefficient."""
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num.coeffs)
    d = den.coeffs
    lead = d[-1]
    if len(rem) < len(d):
        return Poly(), num
    quot = [0] * (len(rem) - len(d) + 1)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + len(d) - 1]
        if c == 0:
            continue
        if c % lead:
            raise NotExact(f"leading coefficient {lead} does not divide {c}")
        q = c // lead
        quot[k] = q
        for j, dj in enumerate(d):
            rem[k + j] -= q * dj
    return Poly(quot), Poly(rem)


def poly_divexact(num: Poly, den: Poly) -> Poly:
    """Return q with num == q * den, or raise NotExact."""
    q, r = poly_divmod(num, den)
    if r:
        raise NotExact(f"{den!r} does not divide {num!r}")
    return q


@lru_cache(maxsize=None)
def factorize(m: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of m >= 1 as ((p, e), ...), p ascending."""
    if m < 1:
        raise ValueError("m must be positive")
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1
    if m > 1:
        out.append((m, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def divisors(m: int) -> tuple[int, ...]:
    ds = [1]
    for p, e in factorize(m):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return tuple(sorted(ds))


def mobius(m: int) -> int:
    f = factorize(m)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(m: int) -> int:
    out = 1
    for p, e in factorize(m):
        out *= (p - 1) * p ** (e - 1)
    return out


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> Poly:
    """Phi_m, computed as (x^m - 1) divided by Phi_d for the proper divisors d."""
    if m < 1:
        raise ValueError("m must be positive")
    q = Poly.monomial(m) - Poly.constant(1)
    for d in divisors(m)[:-1]:
        q = poly_divexact(q, cyclotomic_polynomial(d))
    return q


@lru_cache(maxsize=None)
def reversed_cyclotomic(m: int) -> Poly:
    """Psi_m: Phi_m normalized to constant term 1 (1 - x for m = 1)."""
    if m == 1:
        return Poly((1, -1))
    return cyclotomic_polynomial(m)


@dataclass(frozen=True)
class ModInt:
    modulus: int
    value: int = 0

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise ValueError(f"moduli differ: {self.modulus} vs {other.modulus}")
            return other.value
        return int(other)

    def __add__(self, other) -> "ModInt":
        return ModInt(self.modulus, self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other) -> "ModInt":
        return ModInt(self.modulus, self.value - self._coerce(other))

    def __rsub__(self, other) -> "ModInt":
        return ModInt(self.modulus, self._coerce(other) - self.value)

    def __mul__(self, other) -> "ModInt":
        return ModInt(self.modulus, self.value * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> "ModInt":
        return ModInt(self.modulus, -self.value)

    def __eq__(self, other) -> bool:
        if isinstance(other, ModInt):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.modulus == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.modulus, self.value))

    def __int__(self) -> int:
        return self.value

    def signed(self) -> int:
        """Representative in (-n/2, n/2]."""
        v = self.value
        return v - self.modulus if 2 * v > self.modulus else v

    def __repr__(self) -> str:
        return f"{self.value} mod {self.modulus}"


@dataclass(frozen=True, eq=False)
class CyclotomicValue:
    """Element of Z[zeta_N], stored in the power basis reduced modulo Phi_N."""

    conductor: int
    rep: Poly

    def __post_init__(self):
        if self.conductor < 1:
            raise ValueError("conductor must be positive")
        phi = cyclotomic_polynomial(self.conductor)
        rep = self.rep if isinstance(self.rep, Poly) else Poly(self.rep)
        if rep.degree >= phi.degree:
            rep = poly_divmod(rep, phi)[1]
        object.__setattr__(self, "rep", rep)

    @classmethod
    def integer(cls, n: int) -> "CyclotomicValue":
        return cls(1, Poly((n,)))

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[tuple[int, int]]) -> "CyclotomicValue":
        """Sum of c * zeta_n**e over (e, c) pairs."""
        out = [0] * n
        for e, c in terms:
            out[e % n] += c
        return cls(n, Poly(out))

    @classmethod
    def zeta(cls, n: int, e: int = 1) -> "CyclotomicValue":
        return cls.from_terms(n, [(e, 1)])

    def embed(self, n: int) -> "CyclotomicValue":
        """Re-express in conductor n (a multiple of the current conductor)."""
        if n % self.conductor:
            raise ValueError(f"{n} is not a multiple of {self.conductor}")
        return CyclotomicValue(n, self.rep.substitute_power(n // self.conductor))

    def _common(self, other) -> tuple["CyclotomicValue", "CyclotomicValue"]:
        if isinstance(other, int):
            other = CyclotomicValue.integer(other)
        if other.conductor == self.conductor:
            return self, other
        n = lcm(self.conductor, other.conductor)
        return self.embed(n), other.embed(n)

    def __add__(self, other) -> "CyclotomicValue":
        a, b = self._common(other)
        return CyclotomicValue(a.conductor, a.rep + b.rep)

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicValue":
        return CyclotomicValue(self.conductor, -self.rep)

    def __sub__(self, other) -> "CyclotomicValue":
        return self + (-other if isinstance(other, CyclotomicValue) else -int(other))

    def __mul__(self, other) -> "CyclotomicValue":
        a, b = self._common(other)
        return CyclotomicValue(a.conductor, a.rep * b.rep)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, CyclotomicValue)):
            a, b = self._common(other)
            return a.rep == b.rep
        return NotImplemented

    def __hash__(self) -> int:
        n = self.normalize()
        return hash((n.conductor, n.rep.coeffs))

    def conjugate(self) -> "CyclotomicValue":
        """Complex conjugation zeta -> zeta**-1."""
        n = self.conductor
        return CyclotomicValue.from_terms(n, [((-i) % n, c) for i, c in enumerate(self.rep.coeffs)])

    def galois(self, a: int) -> "CyclotomicValue":
        """Galois automorphism zeta -> zeta**a (a coprime to the conductor)."""
        n = self.conductor
        if gcd(a, n) != 1:
            raise ValueError("exponent must be a unit")
        return CyclotomicValue.from_terms(n, [((a * i) % n, c) for i, c in enumerate(self.rep.coeffs)])

    def is_integer(self) -> int | None:
        """The rational integer this equals, or None."""
        if self.rep.degree <= 0:
            return self.rep[0]
        return None

    def to_integer(self) -> int:
        v = self.is_integer()
        if v is None:
            raise NotRational(f"{self!r} is not a rational integer")
        return v

    def normalize(self) -> "CyclotomicValue":
        """Same number at the smallest conductor dividing the current one
        in which it is expressible."""
        for d in divisors(self.conductor):
            if d == self.conductor:
                break
            # try to write rep as a polynomial in zeta_N^(N/d) via the Galois-fixed test
            cand = self._descend(d)
            if cand is not None:
                return cand
        return self

    def _descend(self, d: int) -> "CyclotomicValue | None":
        n = self.conductor
        # Express in the full basis {zeta_n^i : 0 <= i < n} via a trace-free check:
        # a value lies in Q(zeta_d) iff it is fixed by every a = 1 mod d.
        for a in range(1, n):
            if gcd(a, n) == 1 and a % d == 1 and self.galois(a) != self:
                return None
        # Search coefficients: reduce each zeta_n^i; build via linear solve over the
        # d-th cyclotomic basis by matching embeddings.
        phi_d = cyclotomic_polynomial(d).degree
        target = self
        basis = [CyclotomicValue.zeta(d, i).embed(n) for i in range(phi_d)]
        coeffs = _solve_integer_combination(basis, target)
        if coeffs is None:
            return None
        return CyclotomicValue(d, Poly(coeffs))

    def __repr__(self) -> str:
        v = self.is_integer()
        if v is not None:
            return str(v)
        terms = [f"{c}*z{self.conductor}^{i}" for i, c in enumerate(self.rep.coeffs) if c]
        return " + ".join(terms)


def _solve_integer_combination(basis: Sequence[CyclotomicValue], target: CyclotomicValue):
    """Solve target = sum x_i basis_i over Q in the power basis; return ints or None."""
    n = target.conductor
    dim = cyclotomic_polynomial(n).degree
    cols = [[Fraction(b.rep[j]) for j in range(dim)] for b in basis]
    rhs = [Fraction(target.rep[j]) for j in range(dim)]
    k = len(basis)
    rows = [[cols[i][j] for i in range(k)] + [rhs[j]] for j in range(dim)]
    piv_cols = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, dim) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(dim):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(rows[i][k] != 0 for i in range(r, dim)):
        return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][k]
    if any(x.denominator != 1 for x in sol):
        return None
    return [int(x) for x in sol]
