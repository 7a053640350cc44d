"""Deterministic Schreier-Sims for groups given by an action on points.

The algorithm only needs multiplication, inversion, the action on points and a
way to find a moved point, so the same code handles degree-24 permutations and
matrix groups acting on F_2-vectors.  Products are left to right: ``mul(g, h)``
applies g first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Generic, Hashable, Sequence, TypeVar

G = TypeVar("G", bound=Hashable)


@dataclass(frozen=True)
class GroupOps(Generic[G]):
    mul: Callable[[G, G], G]
    inv: Callable[[G], G]
    act: Callable[[Hashable, G], Hashable]
    identity: G
    moved_point: Callable[[G], Hashable | None]


# ------------------------------------------------------------ permutations

Perm = tuple[int, ...]


def perm_mul(p: Perm, q: Perm) -> Perm:
    return tuple(q[i] for i in p)


def perm_inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def perm_identity(n: int) -> Perm:
    return tuple(range(n))


def perm_power(p: Perm, k: int) -> Perm:
    if k < 0:
        p, k = perm_inv(p), -k
    result, base = perm_identity(len(p)), p
    while k:
        if k & 1:
            result = perm_mul(result, base)
        base = perm_mul(base, base)
        k >>= 1
    return result


def perm_cycles(p: Perm) -> list[list[int]]:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(cyc)
    return out


def perm_order(p: Perm) -> int:
    from math import lcm

    return lcm(*(len(c) for c in perm_cycles(p)))


def perm_ops(n: int) -> GroupOps[Perm]:
    def moved(p: Perm):
        return next((i for i, j in enumerate(p) if i != j), None)

    return GroupOps(perm_mul, perm_inv, lambda x, p: p[x], perm_identity(n), moved)


def is_permutation(p: Sequence[int], n: int = 24) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


# ------------------------------------------------------- Schreier-Sims core


@dataclass
class StabChain(Generic[G]):
    ops: GroupOps[G]
    base: list = field(default_factory=list)
    gens: list[list[G]] = field(default_factory=list)  # gens[i] fix base[:i]
    transversals: list[dict] = field(default_factory=list)

    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out

    def strip(self, g: G, start: int = 0) -> tuple[G, int]:
        """Sift g through levels start.. ; returns the residue and the level
        at which sifting stopped (len(base) if it went all the way)."""
        ops = self.ops
        for i in range(start, len(self.base)):
            b = ops.act(self.base[i], g)
            u = self.transversals[i].get(b)
            if u is None:
                return g, i
            g = ops.mul(g, ops.inv(u))
        return g, len(self.base)

    def contains(self, g: G) -> bool:
        h, j = self.strip(g)
        return j == len(self.base) and h == self.ops.identity


def _orbit_transversal(ops: GroupOps[G], point, gens: Sequence[G]) -> dict:
    trans = {point: ops.identity}
    queue = [point]
    for x in queue:
        u = trans[x]
        for s in gens:
            y = ops.act(x, s)
            if y not in trans:
                trans[y] = ops.mul(u, s)
                queue.append(y)
    return trans


def schreier_sims(gens: Sequence[G], ops: GroupOps[G]) -> StabChain[G]:
    chain = StabChain(ops)
    ident = ops.identity
    gens = [g for g in gens if g != ident]
    for g in gens:
        if all(ops.act(b, g) == b for b in chain.base):
            chain.base.append(ops.moved_point(g))
    k = len(chain.base)
    chain.gens = [[g for g in gens if all(ops.act(b, g) == b for b in chain.base[:i])] for i in range(k)]
    chain.transversals = [_orbit_transversal(ops, chain.base[i], chain.gens[i]) for i in range(k)]

    i = k - 1
    while i >= 0:
        restart = False
        trans = chain.transversals[i]
        for beta, u in list(trans.items()):
            for s in chain.gens[i]:
                gamma = ops.act(beta, s)
                sch = ops.mul(ops.mul(u, s), ops.inv(trans[gamma]))
                if sch == ident:
                    continue
                h, j = chain.strip(sch, i + 1)
                if j < len(chain.base) or h != ident:
                    if j == len(chain.base):
                        chain.base.append(ops.moved_point(h))
                        chain.gens.append([])
                        chain.transversals.append({})
                    for level in range(i + 1, j + 1):
                        chain.gens[level].append(h)
                        chain.transversals[level] = _orbit_transversal(ops, chain.base[level], chain.gens[level])
                    i = j
                    restart = True
                    break
            if restart:
                break
        if not restart:
            i -= 1
    return chain


def group_order(gens: Sequence[G], ops: GroupOps[G]) -> int:
    return schreier_sims(gens, ops).order()
