"""Representation arithmetic for the binary dihedral group 2D8 (order 16).

H^4(2D8; Z) is cyclic of order 16, generated by c_2(M) for the faithful
2-dimensional representation M = V6.  The bundled character table labels the
irreducibles V0..V6; V5 = M' is the Galois conjugate of M.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from functools import lru_cache
from math import comb

from .chartab import (
    CharacterTable,
    ClassFunction,
    decompose,
    load_table,
    power_class,
    restrict_via_fusion,
)
from .chern import WeightList, e2
from .cyclo import CyclotomicValue, ModInt
from .errors import Inconsistent, NotACharacter, NotSpinDecomposable


@dataclass(frozen=True)
class Q16Decomposition:
    n0: int = 0
    n1: int = 0
    n2: int = 0
    n3: int = 0
    n4: int = 0
    n5: int = 0
    n6: int = 0

    def __post_init__(self):
        if any(v < 0 for v in self.as_tuple()):
            raise ValueError("multiplicities must be nonnegative")

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))

    def __add__(self, other: "Q16Decomposition") -> "Q16Decomposition":
        return Q16Decomposition(*(a + b for a, b in zip(self.as_tuple(), other.as_tuple())))


@dataclass(frozen=True)
class Q8RealRep:
    one: int = 0
    x: int = 0
    y: int = 0
    z: int = 0
    w: int = 0


@lru_cache(maxsize=None)
def q16_table() -> CharacterTable:
    from .data import data_path

    return load_table(data_path("q16.json"))


def _from_dict(d: dict[str, int]) -> Q16Decomposition:
    return Q16Decomposition(*(d[f"V{i}"] for i in range(7)))


def decompose_from_co0_traces(t1: int, t2: int, t5: int, t21: int) -> Q16Decomposition:
    """Multiplicities of V0..V6 in a Co0 character with the given traces on
    the classes 1, c2, c5, c21 (order-4 classes of 2D8 fuse to c5, order-8
    ones to c21)."""
    table = q16_table()
    chi = restrict_via_fusion(table, {"c1": t1, "c2": t2, "c5": t5, "c21": t21}, "Co0")
    try:
        return _from_dict(decompose(chi))
    except NotACharacter as exc:
        raise Inconsistent(f"traces {(t1, t2, t5, t21)} do not restrict to a character: {exc}") from exc


def c2_mod16(d: Q16Decomposition) -> ModInt:
    """c_2 in units of c_2(M): c_t(V4) = 1 + 4t^2, c_t(V5) = 1 + 9t^2, c_t(V6) = 1 + t^2."""
    return ModInt(16, 4 * d.n4 + 9 * d.n5 + d.n6)


# eigenvalue exponents (mod 8) of the natural SU(2) matrix on each class
_SU2_EXPONENTS = {"1": (0, 0), "c": (4, 4), "x2": (2, 6), "x": (1, 7), "x3": (3, 5), "y": (2, 6), "xy": (2, 6)}


def sym_power_character(k: int) -> ClassFunction:
    table = q16_table()
    vals = []
    for c in table.classes:
        a, b = _SU2_EXPONENTS[c.name]
        terms = [((j * a + (k - j) * b) % 8, 1) for j in range(k + 1)]
        vals.append(CyclotomicValue.from_terms(8, terms))
    return table.class_function(vals)


def sym_power_decompose(k: int) -> Q16Decomposition:
    if k < 1:
        raise ValueError("k must be positive")
    return _from_dict(decompose(sym_power_character(k)))


def c2_sym_su2(n: int) -> int:
    """c_2(Sym^n C^2) in units of c_2(C^2)."""
    if n < 1:
        raise ValueError("n must be positive")
    closed = comb(n + 2, 3)  # n^3/6 + n^2/2 + n/3
    weights = range(-n, n + 1, 2)
    assert sum(w * w for w in weights) // 2 == closed
    return closed


def cyclic_weights(table: CharacterTable, irrep: str, cls: str) -> WeightList:
    """Weights of an irreducible restricted to the cyclic group generated by
    an element of ``cls``, via the discrete Fourier transform of its values."""
    m = table.conj_class(cls).order
    chi = table.irrep(irrep).values
    idx = {c.name: i for i, c in enumerate(table.classes)}
    vals = [chi[idx[power_class(table, cls, i)]] if i else chi[0] for i in range(m)]
    out = []
    for j in range(m):
        s = CyclotomicValue.integer(0)
        for i, v in enumerate(vals):
            s = s + v * CyclotomicValue.zeta(m, -i * j)
        mult = s.to_integer()
        if mult % m:
            raise Inconsistent(f"{irrep} on <{cls}> has non-integral weight multiplicity")
        out.extend([j] * (mult // m))
    return WeightList(m, out)


def restrict_c2(d: Q16Decomposition, cls: str) -> ModInt:
    """e_2 of the total weight list of d on the cyclic group generated by cls."""
    table = q16_table()
    m = table.conj_class(cls).order
    weights: list[int] = []
    for i, mult in enumerate(d.as_tuple()):
        if mult:
            weights.extend(cyclic_weights(table, f"V{i}", cls).weights * mult)
    return e2(WeightList(m, weights))


def q8_p12(rep: Q8RealRep) -> ModInt:
    """p_1/2 in units of c_2(V), V the 2-dim complex representation of Q8.

    W (V viewed as real) contributes -1 and each block X+Y+Z (the adjoint
    SO(3) representation) contributes -2.
    """
    if min(rep.one, rep.x, rep.y, rep.z, rep.w) < 0:
        raise NotSpinDecomposable("negative multiplicity")
    if not rep.x == rep.y == rep.z:
        raise NotSpinDecomposable(f"X, Y, Z multiplicities {rep.x}, {rep.y}, {rep.z} differ")
    return ModInt(8, -rep.w - 2 * rep.x)
