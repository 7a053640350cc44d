"""Dense linear algebra over F_2 with rows packed into Python ints.

Bit j of ``rows[i]`` is the (i, j) entry.  Vectors are ints; a matrix acts on
column vectors by ``M.apply(v)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from ..errors import DimensionOverflow

# largest basis any functor image may have; Sym^9 of a 6-dim space is 2002
MAX_DIM = 4096


def weight(v: int) -> int:
    return v.bit_count()


def parity(v: int) -> int:
    return v.bit_count() & 1


def bits(v: int) -> list[int]:
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


def vec_from_list(entries: Iterable[int]) -> int:
    v = 0
    for j, e in enumerate(entries):
        if e & 1:
            v |= 1 << j
    return v


def vec_to_list(v: int, n: int) -> list[int]:
    return [(v >> j) & 1 for j in range(n)]


@dataclass(frozen=True)
class BitMatrix:
    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ValueError("row count mismatch")
        mask = (1 << self.ncols) - 1
        if any(r & ~mask for r in self.rows):
            raise ValueError("row has bits beyond ncols")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "BitMatrix":
        ncols = len(entries[0]) if entries else 0
        return cls(len(entries), ncols, tuple(vec_from_list(r) for r in entries))

    @classmethod
    def from_columns(cls, cols: Sequence[int], nrows: int) -> "BitMatrix":
        rows = [0] * nrows
        for j, c in enumerate(cols):
            for i in bits(c):
                rows[i] |= 1 << j
        return cls(nrows, len(cols), tuple(rows))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(nrows, ncols, (0,) * nrows)

    def to_lists(self) -> list[list[int]]:
        return [vec_to_list(r, self.ncols) for r in self.rows]

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def columns(self) -> list[int]:
        return [vec_from_list(self.entry(i, j) for i in range(self.nrows)) for j in range(self.ncols)]

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.ncols, self.nrows, tuple(self.columns()))

    def apply(self, v: int) -> int:
        """M v for a column vector v."""
        out = 0
        for i, r in enumerate(self.rows):
            if parity(r & v):
                out |= 1 << i
        return out

    def row_apply(self, v: int) -> int:
        """v M for a row vector v."""
        out = 0
        for i in bits(v):
            out ^= self.rows[i]
        return out

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        return BitMatrix(self.nrows, other.ncols, tuple(other.row_apply(r) for r in self.rows))

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch")
        return BitMatrix(self.nrows, self.ncols, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    __sub__ = __add__

    def __pow__(self, k: int) -> "BitMatrix":
        if self.nrows != self.ncols:
            raise ValueError("square matrix required")
        if k < 0:
            return inverse(self) ** (-k)
        result, base = BitMatrix.identity(self.nrows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __str__(self) -> str:
        return "\n".join("".join(str(x) for x in row) for row in self.to_lists())


def rref(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [r for r in rows if r]
    pivots = []
    out: list[int] = []
    for col in range(ncols):
        bit = 1 << col
        idx = next((i for i, r in enumerate(rows) if r & bit), None)
        if idx is None:
            continue
        piv = rows.pop(idx)
        rows = [r ^ piv if r & bit else r for r in rows]
        out = [r ^ piv if r & bit else r for r in out]
        out.append(piv)
        pivots.append(col)
        rows = [r for r in rows if r]
    return out, pivots


def rank(M: BitMatrix | Sequence[int], ncols: int | None = None) -> int:
    if isinstance(M, BitMatrix):
        rows, ncols = M.rows, M.ncols
    else:
        rows = M
        ncols = ncols if ncols is not None else max((r.bit_length() for r in rows), default=0)
    return len(rref(rows, ncols)[0])


def span_basis(vectors: Iterable[int], n: int) -> list[int]:
    return rref(list(vectors), n)[0]


def kernel(M: BitMatrix) -> list[int]:
    """Basis of {v : M v = 0}."""
    red, pivots = rref(M.rows, M.ncols)
    free = [j for j in range(M.ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = 1 << f
        for r, p in zip(red, pivots):
            if (r >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def stack(mats: Sequence[BitMatrix]) -> BitMatrix:
    ncols = mats[0].ncols
    if any(m.ncols != ncols for m in mats):
        raise ValueError("dimension mismatch")
    rows = tuple(r for m in mats for r in m.rows)
    return BitMatrix(len(rows), ncols, rows)


def fixed_space(mats: Sequence[BitMatrix]) -> list[int]:
    """Basis of the common fixed vectors of the (column) actions."""
    if not mats:
        raise ValueError("need at least one matrix")
    n = mats[0].nrows
    if any(m.nrows != n or m.ncols != n for m in mats):
        raise ValueError("square matrices of equal size required")
    ident = BitMatrix.identity(n)
    return kernel(stack([m + ident for m in mats]))


def inverse(M: BitMatrix) -> BitMatrix:
    n = M.nrows
    if M.ncols != n:
        raise ValueError("square matrix required")
    # augment [M | I] and reduce
    aug = [r | (1 << (n + i)) for i, r in enumerate(M.rows)]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    rows = [0] * n
    for r, p in zip(red, pivots):
        if p < n:
            rows[p] = r >> n
    return BitMatrix(n, n, tuple(rows))


def in_span(basis_rref: Sequence[int], v: int) -> bool:
    for r in basis_rref:
        low = r & -r
        if v & low:
            v ^= r
    return v == 0


# --------------------------------------------------------------- functors


def monomials(n: int, k: int) -> list[tuple[int, ...]]:
    """Exponent vectors of degree k in n variables, lexicographically descending
    in the exponent of x_0 (so x_0^k first)."""
    if n == 0:
        return [()] if k == 0 else []
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), left - e, slots - 1)

    rec((), k, n)
    return out


def squarefree(n: int, k: int) -> list[tuple[int, ...]]:
    """k-subsets of range(n) in lexicographic order."""
    return list(combinations(range(n), k))


def _check_dim(d: int):
    if d > MAX_DIM:
        raise DimensionOverflow(f"functor image of dimension {d} exceeds {MAX_DIM}")


def sym_power(M: BitMatrix, k: int) -> BitMatrix:
    """Induced action on degree-k polynomials in the coordinates.

    Column alpha is the expansion of prod_i (sum_j M[j][i] x_j)^{alpha_i}.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = M.nrows
    basis = monomials(n, k)
    _check_dim(len(basis))
    index = {m: i for i, m in enumerate(basis)}
    cols = M.columns()
    out_cols = []
    for alpha in basis:
        poly = {(0,) * n: 1}
        for i, a in enumerate(alpha):
            lin = bits(cols[i])
            for _ in range(a):
                nxt: dict[tuple[int, ...], int] = {}
                for mono in poly:
                    for j in lin:
                        m2 = mono[:j] + (mono[j] + 1,) + mono[j + 1 :]
                        nxt[m2] = nxt.get(m2, 0) ^ 1
                poly = {m: 1 for m, c in nxt.items() if c}
        col = 0
        for mono in poly:
            col |= 1 << index[mono]
        out_cols.append(col)
    return BitMatrix.from_columns(out_cols, len(basis))


def alt_power(M: BitMatrix, k: int) -> BitMatrix:
    """Induced action on the quotient of Sym^k by non-squarefree monomials,
    with basis the squarefree monomials (k-subsets) in lexicographic order."""
    if k < 1:
        raise ValueError("k must be positive")
    n = M.nrows
    basis = squarefree(n, k)
    _check_dim(len(basis))
    index = {s: i for i, s in enumerate(basis)}
    cols = [bits(c) for c in M.columns()]
    out_cols = []
    for subset in basis:
        poly = {0: 1}  # monomial as bitmask of variables
        for i in subset:
            nxt: dict[int, int] = {}
            for mono in poly:
                for j in cols[i]:
                    if not (mono >> j) & 1:
                        m2 = mono | (1 << j)
                        nxt[m2] = nxt.get(m2, 0) ^ 1
            poly = {m: 1 for m, c in nxt.items() if c}
        col = 0
        for mono in poly:
            col |= 1 << index[tuple(bits(mono))]
        out_cols.append(col)
    return BitMatrix.from_columns(out_cols, len(basis))


SQ1_MAX_VARS = 6
SQ1_MAX_DEGREE = 8


def sq1_matrix(n: int, d: int) -> BitMatrix:
    """Sq^1 from degree d to degree d+1: x^alpha -> sum_i alpha_i x^(alpha + e_i)."""
    if n > SQ1_MAX_VARS or d > SQ1_MAX_DEGREE:
        raise DimensionOverflow(f"sq1_matrix supports n <= {SQ1_MAX_VARS}, d <= {SQ1_MAX_DEGREE}")
    if d < 0 or n < 0:
        raise ValueError("n and d must be nonnegative")
    src = monomials(n, d)
    dst = monomials(n, d + 1)
    index = {m: i for i, m in enumerate(dst)}
    cols = []
    for alpha in src:
        col = 0
        for i, a in enumerate(alpha):
            if a & 1:
                col ^= 1 << index[alpha[:i] + (a + 1,) + alpha[i + 1 :]]
        cols.append(col)
    return BitMatrix.from_columns(cols, len(dst))


@dataclass(frozen=True)
class Sq1Exactness:
    n: int
    degree: int
    dim: int  # dim Sym^d
    rank_out: int  # rank of Sq^1 leaving degree d
    rank_in: int  # rank of Sq^1 arriving in degree d
    square_zero: bool

    @property
    def exact(self) -> bool:
        return self.rank_out + self.rank_in == self.dim


def sq1_exactness(n: int, d: int) -> Sq1Exactness:
    """Ranks around Sym^d; exact means ker Sq^1 = im Sq^1 there (d >= 1)."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    out = sq1_matrix(n, d)
    into = sq1_matrix(n, d - 1)
    zero = not any((out @ into).rows)
    return Sq1Exactness(n, d, len(monomials(n, d)), rank(out), rank(into), zero)


def sq1_kernel_dim(n: int, d: int) -> int:
    return len(monomials(n, d)) - rank(sq1_matrix(n, d))


def filtration_dims(n: int) -> tuple[int, int]:
    """(dim ker Sq^1 on Sym^4, dim E + dim Alt^2 E + dim Alt^3 E) for dim E = n."""
    rhs = sum(len(squarefree(n, k)) for k in (1, 2, 3))
    return sq1_kernel_dim(n, 4), rhs
