"""Chern-class arithmetic on cyclic groups.

A representation of Z/n is a multiset of weights a_i in Z/n (eigenvalues
exp(2 pi i a_i / n)).  With t the first Chern class of the weight-1 character,
c_2 = e_2(a) t^2 by the splitting principle.  For a real representation the
eigenvalues come in conjugate pairs; choosing one weight from each pair with
total 0 gives an SU(m) lift, and p_1/2 restricts to -c_2 of that lift.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping

from .cyclo import ModInt
from .errors import Co0Error, NoSpinFactorization, Not24Torsion, OddSelfConjugate
from .frame import EigenvalueMultiset, FrameShape, classify, eigenvalues_from_frame


@dataclass(frozen=True)
class WeightList:
    modulus: int
    weights: tuple[int, ...]

    def __init__(self, modulus: int, weights: Iterable[int]):
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "weights", tuple(sorted(w % modulus for w in weights)))

    def __len__(self) -> int:
        return len(self.weights)

    def __add__(self, other: "WeightList") -> "WeightList":
        if other.modulus != self.modulus:
            raise ValueError("weight lists over different moduli")
        return WeightList(self.modulus, self.weights + other.weights)

    def scale(self, a: int) -> "WeightList":
        return WeightList(self.modulus, (a * w for w in self.weights))

    def total(self) -> int:
        return sum(self.weights) % self.modulus


@dataclass(frozen=True)
class CyclicClass:
    """k t^2 in H^4(Z/n; Z) = Z/n."""

    modulus: int
    k: ModInt

    def __init__(self, modulus: int, k: int | ModInt):
        object.__setattr__(self, "modulus", modulus)
        if isinstance(k, ModInt):
            if k.modulus != modulus:
                raise ValueError("modulus mismatch")
        else:
            k = ModInt(modulus, k)
        object.__setattr__(self, "k", k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclicClass):
            return NotImplemented
        return self.modulus == other.modulus and self.k == other.k

    def __hash__(self) -> int:
        return hash((self.modulus, self.k.value))

    def __str__(self) -> str:
        return f"{self.k.value} mod {self.modulus}"


@dataclass(frozen=True)
class Canonical24:
    modulus: int
    label: int
    invariant: bool


@dataclass(frozen=True)
class LiftReport:
    value: ModInt
    lifts: int
    values: tuple[int, ...]  # every e2 seen among lifts; constant iff length 1

    @property
    def constant(self) -> bool:
        return len(self.values) == 1


def e2(w: WeightList) -> ModInt:
    """Second elementary symmetric function of the weights, mod n."""
    counts: dict[int, int] = {}
    for a in w.weights:
        counts[a] = counts.get(a, 0) + 1
    return e2_counts(w.modulus, counts)


def e2_counts(n: int, counts: Mapping[int, int]) -> ModInt:
    """e2 of the multiset with weight a repeated counts[a] times.

    Uses e2 = (S^2 - sum a^2) / 2 on integer representatives, so huge
    multiplicities cost nothing.
    """
    s = sum(m * a for a, m in counts.items())
    sq = sum(m * a * a for a, m in counts.items())
    return ModInt(n, (s * s - sq) // 2)


def all_weights(eigs: EigenvalueMultiset, n: int | None = None) -> WeightList:
    """Every eigenvalue as a weight mod n (default: the order)."""
    n = n or eigs.order
    out = []
    for m, e in eigs.mult:
        if n % m:
            raise ValueError(f"order {m} does not divide modulus {n}")
        for j in range(m):
            if gcd(j, m) == 1:
                out.extend([j * n // m] * e)
    return WeightList(n, out)


def _split(eigs: EigenvalueMultiset, n: int) -> tuple[list[int], list[int]]:
    """Fixed weights (halved self-conjugate ones) and the canonical pair list."""
    fixed, pairs = [], []
    for m, e in eigs.mult:
        if m <= 2:
            if e % 2:
                raise OddSelfConjugate(f"eigenvalue of order {m} has odd multiplicity {e}")
            fixed.extend([0 if m == 1 else n // 2] * (e // 2))
            continue
        for j in range(1, (m + 1) // 2):
            if gcd(j, m) == 1:
                pairs.extend([j * n // m] * e)
    return fixed, pairs


def su_factorize(eigs: EigenvalueMultiset) -> WeightList:
    """Weights of an SU(m) lift of a real representation.

    One weight is chosen from each pair {a, -a}; the flip vector (0 keeps a,
    1 takes -a) is the lexicographically least one giving total 0 mod n.
    """
    n = eigs.order
    fixed, pairs = _split(eigs, n)
    # reach[i] = sums mod n achievable by pairs[i:]
    reach = [set() for _ in range(len(pairs) + 1)]
    reach[-1] = {0}
    for i in range(len(pairs) - 1, -1, -1):
        a = pairs[i]
        reach[i] = {(s + a) % n for s in reach[i + 1]} | {(s - a) % n for s in reach[i + 1]}
    need = -sum(fixed) % n
    if need not in reach[0]:
        raise NoSpinFactorization(f"no choice of weights sums to 0 mod {n}")
    chosen = list(fixed)
    for i, a in enumerate(pairs):
        rest = (need - a) % n
        if rest in reach[i + 1]:
            chosen.append(a)
        else:
            chosen.append(-a % n)
            rest = (need + a) % n
        need = rest
    return WeightList(n, chosen)


def p12_restriction(fs: FrameShape) -> CyclicClass:
    """p_1/2 restricted to <g>, as -c_2 of an SU lift."""
    eigs = eigenvalues_from_frame(fs)
    w = su_factorize(eigs)
    return CyclicClass(w.modulus, -e2(w))


def theorem6_formula(fs: FrameShape) -> CyclicClass:
    """eps * o / ell for balanced shapes, 0 otherwise."""
    c = classify(fs)
    if c.balanced is None:
        return CyclicClass(c.order, 0)
    if c.order % c.ell:
        raise Co0Error(f"ell={c.ell} does not divide the order {c.order}")
    return CyclicClass(c.order, c.epsilon * c.order // c.ell)


def canonical24(c: CyclicClass) -> Canonical24:
    n, k = c.modulus, c.k.value
    if (24 * k) % n:
        raise Not24Torsion(f"24 * {k} is not 0 mod {n}")
    units = [a for a in range(1, n + 1) if gcd(a, n) == 1]
    invariant = all((a * a * k - k) % n == 0 for a in units)
    return Canonical24(n, k, invariant)


def lift_independence_check(eigs: EigenvalueMultiset) -> LiftReport:
    """e2 over every SU lift, by dynamic programming on (sum, e2) states.

    Appending weight w to a list with sum s and e2 q gives e2 = q + s w, so
    the states are exhaustive without listing the 2^pairs flip vectors.
    """
    n = eigs.order
    fixed, pairs = _split(eigs, n)
    s0 = sum(fixed) % n
    q0 = e2(WeightList(n, fixed)).value
    states = {(s0, q0): 1}
    for a in pairs:
        nxt: dict[tuple[int, int], int] = {}
        for (s, q), cnt in states.items():
            for w in (a, n - a):
                key = ((s + w) % n, (q + s * w) % n)
                nxt[key] = nxt.get(key, 0) + cnt
        states = nxt
    values = sorted({q for (s, q) in states if s == 0})
    if not values:
        raise NoSpinFactorization(f"no choice of weights sums to 0 mod {n}")
    lifts = sum(cnt for (s, _), cnt in states.items() if s == 0)
    return LiftReport(ModInt(n, values[0]), lifts, tuple(values))
