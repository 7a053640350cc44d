"""The extended binary Golay code, M24, and the 12-dimensional code module.

Coordinates are 0..23.  The code is the extended quadratic-residue code: the
cyclic span of the indicator of the nonzero squares mod 23 in coordinates
0..22, plus an overall parity bit in coordinate 23.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ..data import data_path
from ..errors import IdentificationFailure, NotInCode
from ..frame import FrameShape
from .gf2 import (
    BitMatrix,
    alt_power,
    bits,
    fixed_space,
    in_span,
    inverse,
    kernel,
    parity,
    rank,
    span_basis,
    squarefree,
    weight,
)
from .permgroup import Perm, StabChain, GroupOps, is_permutation, perm_cycles, perm_ops, schreier_sims

N = 24
ALL_ONES = (1 << N) - 1
M24_ORDER = 244823040


@dataclass(frozen=True)
class BinaryCode:
    length: int
    basis: tuple[int, ...]  # reduced row echelon form

    def __contains__(self, v: int) -> bool:
        return in_span(self.basis, v)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def codewords(self) -> list[int]:
        words = [0]
        for b in self.basis:
            words += [w ^ b for w in words]
        return words

    def weight_enumerator(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for w in self.codewords():
            k = weight(w)
            out[k] = out.get(k, 0) + 1
        return dict(sorted(out.items()))

    def dual(self) -> "BinaryCode":
        G = BitMatrix(len(self.basis), self.length, self.basis)
        return BinaryCode(self.length, tuple(span_basis(kernel(G), self.length)))

    def minimum_weight(self) -> int:
        return min(weight(w) for w in self.codewords() if w)

    def coordinates(self, v: int) -> int:
        """Coefficients of v in the basis, as a bitmask."""
        out = 0
        for i, r in enumerate(self.basis):
            low = r & -r
            if v & low:
                v ^= r
                out |= 1 << i
        if v:
            raise NotInCode("vector is not a codeword")
        return out

    def from_coordinates(self, a: int) -> int:
        v = 0
        for i in bits(a):
            v ^= self.basis[i]
        return v


def _qr_generators() -> list[int]:
    squares = {(i * i) % 23 for i in range(1, 23)}
    w = sum(1 << i for i in squares)
    mask = (1 << 23) - 1
    out = []
    for k in range(23):
        s = ((w << k) | (w >> (23 - k))) & mask
        out.append(s | (parity(s) << 23))
    return out


@lru_cache(maxsize=None)
def build_golay() -> BinaryCode:
    code = BinaryCode(N, tuple(span_basis(_qr_generators(), N)))
    if code.dimension != 12:
        raise AssertionError("QR construction did not give a 12-dimensional code")
    return code


def validate_golay(code: BinaryCode) -> None:
    if code.dual().basis != code.basis:
        raise AssertionError("code is not self-dual")
    if code.minimum_weight() != 8:
        raise AssertionError("minimum weight is not 8")


def codeword_trace(w: int, code: BinaryCode | None = None) -> int:
    """Trace on R^24 of the sign change on the support of a codeword."""
    code = code or build_golay()
    if w not in code:
        raise NotInCode(f"{w:#x} is not a codeword")
    return N - 2 * weight(w)


# ---------------------------------------------------------------- M24


def permute_vector(v: int, p: Perm) -> int:
    """Image of a subset under the permutation: bit i goes to bit p[i]."""
    out = 0
    for i in bits(v):
        out |= 1 << p[i]
    return out


def preserves_code(p: Perm, code: BinaryCode | None = None) -> bool:
    code = code or build_golay()
    return all(permute_vector(b, p) in code for b in code.basis)


@lru_cache(maxsize=None)
def m24_generators() -> tuple[Perm, Perm]:
    data = json.loads(data_path("m24_generators.json").read_text())
    gens = tuple(tuple(g) for g in data["generators"])
    if len(gens) != 2 or not all(is_permutation(g) for g in gens):
        raise ValueError("m24_generators.json must hold two permutations of 0..23")
    return gens  # type: ignore[return-value]


@lru_cache(maxsize=None)
def m24_chain() -> StabChain:
    return schreier_sims(list(m24_generators()), perm_ops(N))


def m24_cycle_type(p: Perm) -> FrameShape:
    counts: dict[int, int] = {}
    for c in perm_cycles(p):
        counts[len(c)] = counts.get(len(c), 0) + 1
    return FrameShape(counts)


def permutation_matrix(p: Perm) -> list[list[int]]:
    n = len(p)
    M = [[0] * n for _ in range(n)]
    for i, j in enumerate(p):
        M[j][i] = 1
    return M


# ------------------------------------------------------ the C12 module


_C12_A = (
    "010000000000",
    "100000000000",
    "000100000000",
    "001000000000",
    "000001000000",
    "000010000000",
    "000000100000",
    "000000001000",
    "000000010000",
    "000000000010",
    "000000000100",
    "000000100001",
)
_C12_B = (
    "001000000000",
    "011000000000",
    "101000000000",
    "000010000000",
    "000000100000",
    "000000010000",
    "000100000000",
    "000000000100",
    "101101111000",
    "000001000000",
    "100101110010",
    "000000000001",
)


def c12_matrices() -> tuple[BitMatrix, BitMatrix]:
    """The two generators acting on the code module in a fixed basis.

    Acting on column vectors they give the code C12 (the last basis vector is
    the all-ones word and is fixed); right multiplication on row vectors gives
    the dual module.
    """
    A = BitMatrix.from_lists([[int(c) for c in r] for r in _C12_A])
    B = BitMatrix.from_lists([[int(c) for c in r] for r in _C12_B])
    return A, B


def matrix_ops(n: int) -> GroupOps:
    """Matrix group on F_2^n; an element is the tuple of images of e_0..e_{n-1}."""

    def act(v: int, g) -> int:
        out = 0
        for j in bits(v):
            out ^= g[j]
        return out

    def mul(g, h):
        return tuple(act(c, h) for c in g)

    def inv(g):
        return tuple(inverse(BitMatrix.from_columns(g, n)).columns())

    def moved(g):
        return next((1 << j for j in range(n) if g[j] != 1 << j), None)

    return GroupOps(mul, inv, act, tuple(1 << j for j in range(n)), moved)


def matrix_group_order(mats: Sequence[BitMatrix]) -> int:
    n = mats[0].nrows
    return schreier_sims([tuple(m.columns()) for m in mats], matrix_ops(n)).order()


def dual_fixed_space(k: int) -> list[int]:
    """Fixed vectors of Alt^k of the dual module (k = 1 is the module itself)."""
    A, B = c12_matrices()
    At, Bt = A.transpose(), B.transpose()
    if k == 1:
        return fixed_space([At, Bt])
    return fixed_space([alt_power(At, k), alt_power(Bt, k)])


def cocode_points() -> list[int]:
    """The unique orbit of size 24 of the dual action on nonzero row vectors.

    These are the images of the 24 coordinate vectors in the cocode; the
    ordering is by integer value.
    """
    A, B = c12_matrices()
    seen: set[int] = set()
    orbits = []
    for v in range(1, 1 << 12):
        if v in seen:
            continue
        orb = {v}
        queue = [v]
        for x in queue:
            for M in (A, B):
                y = M.row_apply(x)
                if y not in orb:
                    orb.add(y)
                    queue.append(y)
        seen |= orb
        orbits.append(orb)
    small = [o for o in orbits if len(o) == N]
    if len(small) != 1:
        raise IdentificationFailure(f"expected one orbit of size 24, found {len(small)}")
    return sorted(small[0])


def derived_action() -> tuple[list[int], tuple[Perm, Perm]]:
    """Points and the degree-24 permutations induced by the matrices.

    With point p carrying the functional v_p, the codeword of a column vector
    a has bit p equal to v_p . a.  The permutation pi attached to M satisfies
    codeword(M a) = pi(codeword(a)).
    """
    pts = cocode_points()
    index = {v: i for i, v in enumerate(pts)}
    perms = []
    for M in c12_matrices():
        # v_p M = v_q means codeword(Ma)_p = codeword(a)_q, i.e. pi sends q to p
        pi = [0] * N
        for p, v in enumerate(pts):
            pi[index[M.row_apply(v)]] = p
        perms.append(tuple(pi))
    return pts, (perms[0], perms[1])


def derived_code(pts: Sequence[int]) -> BinaryCode:
    """Image of a -> (v_p . a)_p."""
    words = []
    for j in range(12):
        words.append(sum(((v >> j) & 1) << p for p, v in enumerate(pts)))
    return BinaryCode(N, tuple(span_basis(words, N)))


def find_code_isomorphism(src: BinaryCode, dst: BinaryCode) -> Perm:
    """A permutation sigma with sigma(src) = dst, by backtracking on the
    requirement that projections onto the assigned coordinates agree."""
    src_cols = [sum(((b >> p) & 1) << i for i, b in enumerate(src.basis)) for p in range(N)]
    dst_cols = [sum(((b >> p) & 1) << i for i, b in enumerate(dst.basis)) for p in range(N)]

    def ok(assigned: list[int]) -> bool:
        # the k x 12 column blocks must be related by an invertible map:
        # equal ranks of [src | dst] and of each part
        rows_src = [src_cols[p] for p in range(len(assigned))]
        rows_dst = [dst_cols[q] for q in assigned]
        r1 = rank(rows_src, 12)
        r2 = rank(rows_dst, 12)
        both = rank([a | (b << 12) for a, b in zip(rows_src, rows_dst)], 24)
        return r1 == r2 == both

    def rec(assigned: list[int]) -> list[int] | None:
        if len(assigned) == N:
            return assigned
        used = set(assigned)
        for q in range(N):
            if q in used:
                continue
            assigned.append(q)
            if ok(assigned):
                res = rec(assigned)
                if res is not None:
                    return res
            assigned.pop()
        return None

    res = rec([])
    if res is None:
        raise IdentificationFailure("codes are not equivalent")
    return tuple(res)


def relabel(p: Perm, sigma: Perm) -> Perm:
    """sigma^-1 p sigma: the same permutation on relabelled points."""
    out = [0] * N
    for i in range(N):
        out[sigma[i]] = sigma[p[i]]
    return tuple(out)


def code_action_matrix(p: Perm, code: BinaryCode) -> BitMatrix:
    """Matrix of p on the code in its echelon basis (column convention)."""
    cols = [code.coordinates(permute_vector(b, p)) for b in code.basis]
    return BitMatrix.from_columns(cols, code.dimension)


def identify_basis(code: BinaryCode | None = None) -> BitMatrix:
    """The basis change T with P_A T = T A and P_B T = T B.

    P_A, P_B are the bundled generators acting on the echelon basis of the
    code; column j of T holds the coordinates of the j-th abstract basis vector.
    The intertwiner space must be one-dimensional and T invertible.
    """
    code = code or build_golay()
    A, B = c12_matrices()
    PA, PB = (code_action_matrix(g, code) for g in m24_generators())
    n = 12
    # unknown T as a 144-bit vector, entry (i, j) at bit 12 i + j
    eqs = []
    for P, M in ((PA, A), (PB, B)):
        for i in range(n):
            for j in range(n):
                # (P T)_{ij} + (T M)_{ij} = sum_k P_ik T_kj + T_ik M_kj
                e = 0
                for k in range(n):
                    if P.entry(i, k):
                        e ^= 1 << (n * k + j)
                    if M.entry(k, j):
                        e ^= 1 << (n * i + k)
                eqs.append(e)
    sol = kernel(BitMatrix(len(eqs), n * n, tuple(eqs)))
    if len(sol) != 1:
        raise IdentificationFailure(f"intertwiner space has dimension {len(sol)}")
    t = sol[0]
    T = BitMatrix(n, n, tuple((t >> (n * i)) & 0xFFF for i in range(n)))
    if rank(T) != n:
        raise IdentificationFailure("intertwiner is singular")
    return T


@dataclass(frozen=True)
class TripleReport:
    trials: int
    mismatches: tuple[tuple[int, int, int], ...]
    all_ones_checked: int

    @property
    def ok(self) -> bool:
        return not self.mismatches


def trilinear_form(fixed: int, n: int = 12, k: int = 3):
    """The alternating form on F_2^n defined by a vector in the squarefree basis."""
    basis = squarefree(n, k)
    terms = [s for i, s in enumerate(basis) if (fixed >> i) & 1]

    def form(a: int, b: int, c: int) -> int:
        total = 0
        for i, j, l in terms:
            # permanent (= determinant mod 2) of the 3 x 3 minor
            x = [(a >> i) & 1, (a >> j) & 1, (a >> l) & 1]
            y = [(b >> i) & 1, (b >> j) & 1, (b >> l) & 1]
            z = [(c >> i) & 1, (c >> j) & 1, (c >> l) & 1]
            total ^= (
                x[0] & y[1] & z[2] ^ x[0] & y[2] & z[1] ^ x[1] & y[0] & z[2]
                ^ x[1] & y[2] & z[0] ^ x[2] & y[0] & z[1] ^ x[2] & y[1] & z[0]
            )
        return total

    return form


def triple_intersection_check(
    fixed: int, code: BinaryCode | None = None, trials: int = 200, seed: int = 0, T: BitMatrix | None = None
) -> TripleReport:
    """Compare the form of ``fixed`` with |a & b & c| mod 2 on random triples.

    Abstract coordinates a are sent to codewords through T and the echelon
    basis.  Every triple with an all-ones argument is also checked to vanish
    (on a sample of the other two arguments).
    """
    code = code or build_golay()
    T = T or identify_basis(code)
    form = trilinear_form(fixed)

    def word(a: int) -> int:
        return code.from_coordinates(T.apply(a))

    rng = random.Random(seed)
    bad = []
    for _ in range(trials):
        a, b, c = (rng.getrandbits(12) for _ in range(3))
        if form(a, b, c) != weight(word(a) & word(b) & word(c)) & 1:
            bad.append((a, b, c))
    ones = inverse(T).apply(code.coordinates(ALL_ONES))
    checked = 0
    for _ in range(trials):
        b, c = rng.getrandbits(12), rng.getrandbits(12)
        for args in ((ones, b, c), (b, ones, c), (b, c, ones)):
            checked += 1
            if form(*args):
                bad.append(args)
    return TripleReport(trials, tuple(bad), checked)
