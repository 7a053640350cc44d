"""Frame shapes of finite-order integer matrices.

A Frame shape ``{d: r_d}`` encodes ``det(1 - x g) = prod_d (1 - x^d)^{r_d}``.
Equivalently each primitive m-th root of unity occurs as an eigenvalue with
multiplicity ``e_m = sum_{m | d} r_d``; the two are related by Moebius
inversion over the divisor lattice.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Mapping, Sequence

from .cyclo import (
    Poly,
    divisors,
    euler_phi,
    lcm,
    mobius,
    poly_divexact,
    poly_divmod,
    reversed_cyclotomic,
)
from .errors import (
    BadConstantTerm,
    NonUnitDeterminant,
    NotCoprime,
    NotCyclotomicProduct,
    ParseError,
    VirtualShape,
)

__all__ = [
    "FrameShape",
    "EigenvalueMultiset",
    "Classification",
    "frame_from_charpoly",
    "frame_from_matrix",
    "charpoly_berkowitz",
    "reversed_charpoly",
    "eigenvalues_from_frame",
    "frame_from_eigenvalues",
    "classify",
    "power_frame",
    "frame_of_power",
    "parse_frame",
    "format_frame",
    "expand_frame",
]


@dataclass(frozen=True)
class FrameShape:
    exponents: tuple[tuple[int, int], ...]

    def __init__(self, exponents: Mapping[int, int] | Sequence[tuple[int, int]]):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        clean = {}
        for d, r in items:
            if d < 1:
                raise ValueError("periods must be positive")
            if r:
                clean[int(d)] = clean.get(int(d), 0) + int(r)
        object.__setattr__(self, "exponents", tuple(sorted((d, r) for d, r in clean.items() if r)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.exponents)

    def r(self, d: int) -> int:
        return self.as_dict().get(d, 0)

    @property
    def support(self) -> list[int]:
        return [d for d, _ in self.exponents]

    @property
    def degree(self) -> int:
        return sum(d * r for d, r in self.exponents)

    @property
    def trace(self) -> int:
        return self.r(1)

    def __str__(self) -> str:
        return format_frame(self)


@dataclass(frozen=True)
class EigenvalueMultiset:
    """``mult[m]`` = multiplicity of each primitive m-th root of unity."""

    mult: tuple[tuple[int, int], ...]

    def __init__(self, mult: Mapping[int, int] | Sequence[tuple[int, int]]):
        items = mult.items() if isinstance(mult, Mapping) else mult
        clean = {}
        for m, e in items:
            if e < 0:
                raise VirtualShape(f"negative multiplicity {e} for order {m}")
            if e:
                clean[int(m)] = clean.get(int(m), 0) + int(e)
        object.__setattr__(self, "mult", tuple(sorted(clean.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.mult)

    @property
    def degree(self) -> int:
        return sum(euler_phi(m) * e for m, e in self.mult)

    @property
    def order(self) -> int:
        return lcm(*(m for m, _ in self.mult)) if self.mult else 1

    @property
    def trace(self) -> int:
        """Sum of all eigenvalues; the sum of primitive m-th roots is mobius(m)."""
        return sum(mobius(m) * e for m, e in self.mult)


@dataclass(frozen=True)
class Classification:
    ell: int
    epsilon: int
    order: int
    degree: int
    balanced: int | None  # the N with r_d = eps * r_{N/d}, or None


# ---------------------------------------------------------------- parsing

_TERM = re.compile(r"^(\d+)\^([+-]?\d+)$")


def parse_frame(text: str) -> FrameShape:
    """Parse ``"2^-4 8^4"``; every term needs an explicit nonzero exponent."""
    terms = text.replace("{", "").replace("}", "").split()
    if not terms:
        raise ParseError("empty Frame shape")
    out: dict[int, int] = {}
    for t in terms:
        m = _TERM.match(t)
        if not m:
            raise ParseError(f"bad term {t!r}")
        d, r = int(m.group(1)), int(m.group(2))
        if d < 1:
            raise ParseError(f"period must be positive in {t!r}")
        if r == 0:
            raise ParseError(f"zero exponent in {t!r}")
        if d in out:
            raise ParseError(f"duplicate period {d}")
        out[d] = r
    return FrameShape(out)


def format_frame(fs: FrameShape) -> str:
    return " ".join(f"{d}^{r}" for d, r in fs.exponents)


# ------------------------------------------------- eigenvalues <-> frame


def eigenvalues_from_frame(fs: FrameShape) -> EigenvalueMultiset:
    """e_m = sum of r_d over d divisible by m."""
    if not fs.exponents:
        return EigenvalueMultiset({})
    n = lcm(*fs.support)
    fsd = fs.as_dict()
    e = {}
    for m in divisors(n):
        e[m] = sum(r for d, r in fsd.items() if d % m == 0)
    bad = {m: v for m, v in e.items() if v < 0}
    if bad:
        raise VirtualShape(f"{format_frame(fs)} has negative eigenvalue multiplicities {bad}")
    return EigenvalueMultiset(e)


def frame_from_eigenvalues(eigs: EigenvalueMultiset) -> FrameShape:
    """Moebius inversion: r_d = sum_{d | m | N} mobius(m/d) e_m."""
    e = eigs.as_dict()
    if not e:
        return FrameShape({})
    n = lcm(*e)
    r = {}
    for d in divisors(n):
        r[d] = sum(mobius(m // d) * e.get(m, 0) for m in divisors(n) if m % d == 0)
    return FrameShape(r)


def expand_frame(fs: FrameShape) -> Poly:
    """prod (1 - x^d)^{r_d} as a polynomial (raises NotExact if not one)."""
    num, den = Poly((1,)), Poly((1,))
    for d, r in fs.exponents:
        f = Poly.monomial(d, -1) + Poly.constant(1)
        if r > 0:
            num = num * f**r
        else:
            den = den * f ** (-r)
    return poly_divexact(num, den)


# ---------------------------------------------------- charpoly -> frame


@lru_cache(maxsize=None)
def _candidate_orders(deg: int) -> tuple[int, ...]:
    # phi(m) >= sqrt(m/2), so phi(m) <= deg forces m <= 2 deg^2
    bound = max(2, 2 * deg * deg)
    return tuple(m for m in range(1, bound + 1) if euler_phi(m) <= deg)


@lru_cache(maxsize=4096)
def frame_from_charpoly(q: Poly) -> FrameShape:
    """Frame shape of a reversed characteristic polynomial det(1 - x g).

    Trial division by the reversed cyclotomic polynomials Psi_m, largest m
    first, over every m with phi(m) <= deg q.
    """
    if q[0] != 1:
        raise BadConstantTerm(f"constant term is {q[0]}, expected 1")
    rest = q
    e: dict[int, int] = {}
    for m in sorted(_candidate_orders(q.degree), reverse=True):
        psi = reversed_cyclotomic(m)
        if psi.degree > rest.degree:
            continue
        while rest.degree >= psi.degree:
            quo, rem = poly_divmod(rest, psi)
            if rem:
                break
            rest = quo
            e[m] = e.get(m, 0) + 1
    if rest != Poly((1,)):
        raise NotCyclotomicProduct(f"leftover factor {rest!r} is not a product of cyclotomics")
    return frame_from_eigenvalues(EigenvalueMultiset(e))


def charpoly_berkowitz(M: Sequence[Sequence[int]]) -> Poly:
    """det(x I - M) by Berkowitz's division-free algorithm.

    Uses only ring operations, so integer input stays integer.  Sparse rows are
    handled by skipping zero entries.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix must be square")
    A = [list(map(int, row)) for row in M]
    # vect holds coefficients of the charpoly of the leading r x r block, highest power first
    vect = [1]
    for r in range(n):
        # leading block is A[:r][:r]; new row/column index r
        if r == 0:
            vect = [1, -A[0][0]]
            continue
        R = A[r][:r]
        C = [A[i][r] for i in range(r)]
        a = A[r][r]
        sub_rows = [[(j, A[i][j]) for j in range(r) if A[i][j]] for i in range(r)]
        R_nz = [(j, v) for j, v in enumerate(R) if v]
        # Toeplitz column: 1, -a, -R C, -R A C, -R A^2 C, ...
        col = [1, -a]
        vec = C
        for _ in range(r):
            col.append(-sum(v * vec[j] for j, v in R_nz))
            vec = [sum(v * vec[j] for j, v in row) for row in sub_rows]
        # multiply Toeplitz matrix (r+2) x (r+1) by vect (length r+1)
        new = [0] * (r + 2)
        for i in range(r + 2):
            s = 0
            for j in range(min(i, r) + 1):
                s += col[i - j] * vect[j]
            new[i] = s
        vect = new
    # vect is highest-degree-first
    return Poly(list(reversed(vect)))


def reversed_charpoly(M: Sequence[Sequence[int]]) -> Poly:
    """det(I - x M): the coefficient list of det(xI - M) read backwards."""
    p = charpoly_berkowitz(M)
    n = len(M)
    return Poly([p[n - i] for i in range(n + 1)])


def determinant(M: Sequence[Sequence[int]]) -> int:
    n = len(M)
    p = charpoly_berkowitz(M)
    return (-1) ** n * p[0]


def frame_from_matrix(M: Sequence[Sequence[int]]) -> FrameShape:
    """Frame shape of an integer matrix of finite order and determinant +-1."""
    q = reversed_charpoly(M)
    n = len(M)
    # the top coefficient of det(1 - xM) is (-1)^n det M
    det = (-1) ** n * q[n]
    if det not in (1, -1):
        raise NonUnitDeterminant(f"determinant is {det}")
    return frame_from_charpoly(q)


# ------------------------------------------------------------ invariants


def classify(fs: FrameShape) -> Classification:
    eigs = eigenvalues_from_frame(fs)
    if not fs.exponents:
        return Classification(1, 1, 1, 0, 1)
    fsd = fs.as_dict()
    ell = fs.support[0]
    eps = 1 if fsd[ell] > 0 else -1
    n = ell * fs.support[-1]
    balanced = n
    for d, r in fsd.items():
        if n % d or fsd.get(n // d, 0) != eps * r:
            balanced = None
            break
    return Classification(ell, eps, eigs.order, fs.degree, balanced)


def frame_of_power(fs: FrameShape, d: int) -> FrameShape:
    """Frame shape of g**d for any d >= 1.  A primitive m-th root goes to a
    primitive m/gcd(m, d)-th root."""
    if d < 1:
        raise ValueError("d must be positive")
    eigs = eigenvalues_from_frame(fs)
    out: dict[int, int] = {}
    for m, e in eigs.mult:
        mm = m // gcd(m, d)
        # phi(m)/phi(mm) primitive m-th roots collapse onto each primitive mm-th root
        out[mm] = out.get(mm, 0) + e * euler_phi(m) // euler_phi(mm)
    return frame_from_eigenvalues(EigenvalueMultiset(out))


def power_frame(fs: FrameShape, a: int) -> FrameShape:
    """Frame shape of g**a for a unit a; equal to fs, which is the point."""
    order = eigenvalues_from_frame(fs).order
    if gcd(a, order) != 1:
        raise NotCoprime(f"{a} is not coprime to the order {order}")
    return frame_of_power(fs, a % order or 1)
