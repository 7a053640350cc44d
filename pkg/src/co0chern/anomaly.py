"""Anomaly pairings on cyclic groups and the umbral consistency fixtures.

Classes in H^4(Z/n; Z) = H^3(Z/n; Q/Z) are handled additively: k t^2 pairs
with the lens-space cycle of a generator to k/n mod 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .chern import WeightList, e2, p12_restriction, theorem6_formula
from .cyclo import ModInt
from .errors import NotBalanced, SchemaError
from .frame import FrameShape, classify, parse_frame
from .mckay import Q16Decomposition, Q8RealRep, c2_mod16, q8_p12


def carry(i: int, j: int, n: int) -> int:
    """The 2-cocycle t(g^i, g^j) = 1 if i + j >= n else 0, for 0 <= i, j < n."""
    return 1 if (i % n) + (j % n) >= n else 0


def cocycle_defect(a: int, b: int, c: int, n: int) -> int:
    """(delta t)(a, b, c); zero for a cocycle."""
    return carry(b, c, n) - carry((a + b) % n, c, n) + carry(a, (b + c) % n, n) - carry(a, b, n)


def bar_pairing(n: int) -> Fraction:
    """sum_i tau(g) t(g^i, g) over i = 0..n-1, mod 1, with tau(g^i) = i/n."""
    if n < 1:
        raise ValueError("n must be positive")
    g = 1 % n
    tau = Fraction(g, n)
    total = Fraction(0)
    for i in range(n):
        total += tau * carry(i, g, n)
    return total % 1


@dataclass(frozen=True)
class M24AnomalyReport:
    frame: str
    ell: int
    order: int
    k: int
    direct_k: int
    pairing: Fraction
    expected: Fraction

    @property
    def ok(self) -> bool:
        return self.pairing == self.expected and self.k == self.direct_k


def m24_anomaly_check(p: Sequence[int]) -> M24AnomalyReport:
    """k * (1/o) = 1/ell mod 1 for the cycle type of a permutation in M24."""
    from .golay.golay import m24_cycle_type

    fs = m24_cycle_type(tuple(p))
    c = classify(fs)
    if c.balanced is None or c.epsilon != 1:
        raise NotBalanced(f"cycle type {fs} is not balanced with eps = +1")
    k = theorem6_formula(fs).k.value
    direct = p12_restriction(fs).k.value
    pairing = (k * bar_pairing(c.order)) % 1
    return M24AnomalyReport(str(fs), c.ell, c.order, k, direct, pairing, Fraction(1, c.ell) % 1)


# ------------------------------------------------------------- umbral rows


@dataclass(frozen=True)
class UmbralRow:
    lattice: str
    cls: str
    frame: FrameShape
    b_plus: WeightList
    a_plus: WeightList
    expected_p12: int
    expected_c2b: int
    expected_c2a: int
    relation: str  # "holds" or "opposite"


@dataclass(frozen=True)
class UmbralReport:
    row: UmbralRow
    p12: int
    formula_p12: int
    c2b: int
    c2a: int
    columns: dict[str, bool]
    relation_holds: bool  # -p12 = c2b - c2a
    opposite_holds: bool  # p12 = c2b - c2a

    @property
    def ok(self) -> bool:
        expected = self.relation_holds if self.row.relation == "holds" else self.opposite_holds
        return all(self.columns.values()) and expected


def row_from_dict(d: dict) -> UmbralRow:
    try:
        fs = parse_frame(d["frame"])
        n = classify(fs).order
        if d.get("modulus", n) != n:
            raise SchemaError(f"modulus {d['modulus']} differs from the order {n} of {d['frame']}")
        rel = d.get("relation", "holds")
        if rel not in ("holds", "opposite"):
            raise SchemaError(f"bad relation {rel!r}")
        return UmbralRow(
            d["lattice"],
            d["class"],
            fs,
            WeightList(n, d["b_plus"]),
            WeightList(n, d["a_plus"]),
            int(d["p12"]),
            int(d["c2b"]),
            int(d["c2a"]),
            rel,
        )
    except KeyError as exc:
        raise SchemaError(f"umbral row missing field {exc}") from exc


def load_umbral_rows(path: str | Path | None = None) -> list[UmbralRow]:
    if path is None:
        from .data import data_path

        path = data_path("umbral_rows.json")
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: {exc}") from exc
    if not isinstance(data, list):
        raise SchemaError("umbral fixture must be an array")
    return [row_from_dict(d) for d in data]


def verify_umbral_row(row: UmbralRow) -> UmbralReport:
    n = row.b_plus.modulus
    p12 = p12_restriction(row.frame).k.value
    formula = theorem6_formula(row.frame).k.value
    c2b = e2(row.b_plus).value
    c2a = e2(row.a_plus).value
    columns = {
        "p12": (p12 - row.expected_p12) % n == 0,
        "formula": (formula - row.expected_p12) % n == 0,
        "c2b": (c2b - row.expected_c2b) % n == 0,
        "c2a": (c2a - row.expected_c2a) % n == 0,
    }
    diff = c2b - c2a
    return UmbralReport(
        row, p12, formula, c2b, c2a, columns, (diff + p12) % n == 0, (diff - p12) % n == 0
    )


# ------------------------------------------------------ A3^8 and A6^4


@dataclass(frozen=True)
class A38Report:
    c2_core: ModInt  # c2(2V4 + V5 + V6)
    c2_b_minus_a: ModInt  # c2(V5 + V6)
    factor5_check: bool  # 5 * c2_core = c2(V5 + V6)
    branches: tuple[dict, ...]  # one per value 0 or 8 of c2(V1 + V2 + V3)
    epsilon_mod8: tuple[int, ...]  # units e with c2b - c2a = e * p12 in every branch

    @property
    def ok(self) -> bool:
        return self.c2_core == 2 and self.c2_b_minus_a == 10 and self.factor5_check


def a38_check() -> A38Report:
    """Restriction to the 2-Sylow 2D8 of SL(2,7) for the A3^8 lattice.

    The Leech restriction is V0 + (V1 + V2 + V3) + 2V4 + V5 + V6, b+ = V5 + V6
    and a+ = V1 + V2 + V3, whose c2 is 0 or 8 (mod 16).
    """
    core = c2_mod16(Q16Decomposition(n4=2, n5=1, n6=1))
    b = c2_mod16(Q16Decomposition(n5=1, n6=1))
    full = c2_mod16(Q16Decomposition(1, 1, 1, 1, 2, 1, 1))
    branches = []
    eps_sets = []
    for x in (0, 8):
        c2v = full + x
        p12 = -c2v
        diff = b - x
        eps = {e for e in range(16) if e % 2 and diff == p12 * e}
        eps_sets.append({e % 8 for e in eps})
        branches.append(
            {
                "c2_a": x,
                "c2_V": c2v.value,
                "p12": p12.value,
                "c2b_minus_c2a": diff.value,
                "plus5": diff == p12 * 5,
                "minus5": diff == p12 * -5,
            }
        )
    common = sorted(set.intersection(*eps_sets))
    return A38Report(core, b, core * 5 == b, tuple(branches), tuple(common))


@dataclass(frozen=True)
class A64Report:
    p12_perm8: ModInt
    p12_leech: ModInt
    c2_b: ModInt
    mod3_c2_b: ModInt
    mod3_p12: ModInt

    @property
    def ok(self) -> bool:
        return self.p12_perm8 == -3 and self.c2_b == -self.p12_leech and self.mod3_c2_b == -(self.mod3_p12 * 3)


def a64_check() -> A64Report:
    """Q8 and Z/3 parts of the A6^4 consistency check.

    Leech restricts to three copies of Perm8, which on Q8 is the regular
    representation W + X + Y + Z + 1; b+ restricts to V, so c2(b+) = 1.
    """
    perm8 = q8_p12(Q8RealRep(one=1, x=1, y=1, z=1, w=1))
    leech = perm8 * 3
    c2_b = ModInt(8, 1)
    # order-3 element: eigenvalues 1 and lambda on b+, cycle type 1^2 3^2 on Perm8
    mod3_b = e2(WeightList(3, [0, 1]))
    mod3_p12 = theorem6_formula(parse_frame("1^2 3^2")).k
    return A64Report(perm8, leech, c2_b, mod3_b, mod3_p12)
