"""Signed permutations in 2^12:M24 and the Leech lattice at scale 8.

Leech vectors are x / sqrt(8) with x in the integer span of 2c (c a Golay
codeword), 4(e_i +- e_j) and (-3, 1, ..., 1).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

from ..errors import NotALattice, SignsNotInCode
from ..frame import FrameShape, determinant
from .golay import N, build_golay, m24_generators
from .permgroup import Perm, perm_cycles, perm_identity, perm_mul


@dataclass(frozen=True)
class SignedPermutation:
    """x -> P D x, where D negates the coordinates in ``signs`` and P sends
    e_i to e_perm[i]."""

    perm: Perm
    signs: int

    def __post_init__(self):
        if self.signs not in build_golay():
            raise SignsNotInCode(f"sign vector {self.signs:#08x} is not a Golay codeword")


def signed_perm_matrix(sp: SignedPermutation) -> list[list[int]]:
    M = [[0] * N for _ in range(N)]
    for i, j in enumerate(sp.perm):
        M[j][i] = -1 if (sp.signs >> i) & 1 else 1
    return M


def random_element(seed: int | random.Random, word_length: int = 30) -> SignedPermutation:
    """Product of ``word_length`` random generators, with a uniform codeword of signs."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    gens = m24_generators()
    p = perm_identity(N)
    for _ in range(word_length):
        p = perm_mul(p, gens[rng.randrange(len(gens))])
    signs = build_golay().from_coordinates(rng.getrandbits(12))
    return SignedPermutation(p, signs)


def signed_cycle_frame(sp: SignedPermutation) -> FrameShape:
    """Frame shape from signed cycles: a cycle of length L contributes
    1 - x^L, or 1 + x^L = (1 - x^2L)/(1 - x^L) when its sign product is -1."""
    out: dict[int, int] = {}
    for cyc in perm_cycles(sp.perm):
        L = len(cyc)
        neg = sum((sp.signs >> i) & 1 for i in cyc) & 1
        if neg:
            out[2 * L] = out.get(2 * L, 0) + 1
            out[L] = out.get(L, 0) - 1
        else:
            out[L] = out.get(L, 0) + 1
    return FrameShape(out)


# ------------------------------------------------------------------ Leech


@dataclass(frozen=True)
class LatticeBasis:
    rows: tuple[tuple[int, ...], ...]
    scale: int

    def gram(self) -> list[list[Fraction]]:
        return [[Fraction(sum(a * b for a, b in zip(u, v)), self.scale) for v in self.rows] for u in self.rows]


def hermite_rows(vectors: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    """Row Hermite normal form (upper triangular, positive pivots)."""
    rows = [list(v) for v in vectors if any(v)]
    out = []
    for col in range(n):
        active = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            nxt = [piv]
            for r in active[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                (nxt if r[col] else rest).append(r)
            active = nxt
        if active:
            piv = active[0]
            if piv[col] < 0:
                piv = [-a for a in piv]
            for k, r in enumerate(out):
                q = r[col] // piv[col]
                out[k] = [a - q * b for a, b in zip(r, piv)]
            out.append(piv)
        rows = [r for r in rest if any(r)]
    if rows or len(out) != n:
        raise NotALattice("generators did not reduce to a full-rank basis")
    return out


def validate_lattice(L: LatticeBasis) -> None:
    if len(L.rows) != N:
        raise NotALattice("basis must have 24 rows")
    gram = L.gram()
    if any(x.denominator != 1 for row in gram for x in row):
        raise NotALattice("Gram matrix is not integral")
    if any(gram[i][i] % 2 for i in range(N)):
        raise NotALattice("lattice is not even")
    det = determinant([[int(x) for x in row] for row in gram])
    if det != 1:
        raise NotALattice(f"Gram determinant is {det}")


@lru_cache(maxsize=None)
def leech_basis() -> LatticeBasis:
    gens = [[2 * ((w >> i) & 1) for i in range(N)] for w in build_golay().basis]
    for j in range(1, N):
        for s in (1, -1):
            v = [0] * N
            v[0], v[j] = 4, 4 * s
            gens.append(v)
    gens.append([-3] + [1] * (N - 1))
    L = LatticeBasis(tuple(tuple(r) for r in hermite_rows(gens, N)), 8)
    validate_lattice(L)
    return L


@lru_cache(maxsize=None)
def _scaled_inverse(L: LatticeBasis) -> tuple[tuple[tuple[int, ...], ...], int]:
    """(D * B^-1, D) with D the least common denominator."""
    n = len(L.rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(L.rows)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    inv = [row[n:] for row in aug]
    D = lcm(*(x.denominator for row in inv for x in row))
    return tuple(tuple(int(x * D) for x in row) for row in inv), D


def preserves_lattice(M: Sequence[Sequence[int]], L: LatticeBasis | None = None) -> bool:
    """True iff B M^T = X B for an integer X of determinant +-1."""
    L = L or leech_basis()
    Binv, D = _scaled_inverse(L)
    n = len(L.rows)
    BMt = [[sum(b[k] * M[j][k] for k in range(n) if M[j][k]) for j in range(n)] for b in L.rows]
    X = []
    for row in BMt:
        nz = [(k, v) for k, v in enumerate(row) if v]
        out = []
        for j in range(n):
            s = sum(v * Binv[k][j] for k, v in nz)
            if s % D:
                return False
            out.append(s // D)
        X.append(out)
    return determinant(X) in (1, -1)


__all__ = [
    "SignedPermutation",
    "signed_perm_matrix",
    "random_element",
    "signed_cycle_frame",
    "LatticeBasis",
    "leech_basis",
    "preserves_lattice",
    "hermite_rows",
]
