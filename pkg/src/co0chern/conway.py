"""Co0-level computations: the k(V) solver, the Z/3 x 2D8 restriction, batch
checks of the p1/2 formula, and identification of the special classes."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from .chartab import CharacterTable, power_class
from .chern import canonical24, e2_counts, lift_independence_check, p12_restriction, theorem6_formula
from .cyclo import ModInt
from .errors import Co0Error, NotDivisibleBy3, NotFound, NotUnique, SchemaError, Unsolvable
from .frame import classify, eigenvalues_from_frame, frame_from_matrix, parse_frame
from .mckay import c2_mod16, decompose_from_co0_traces

Traces = tuple[int, int, int, int, int]
LEECH_TRACES: Traces = (24, -24, 0, 0, 0)


@dataclass(frozen=True)
class IrrepRow:
    index: int
    t1: int
    t2: int
    t5: int
    t21: int
    t13: int
    expected_k: int
    real: bool = True

    def __post_init__(self):
        if self.t1 <= 0 or abs(self.t2) != self.t1:
            raise SchemaError(f"row {self.index}: need t1 > 0 and |t2| = t1")

    @property
    def traces(self) -> Traces:
        return (self.t1, self.t2, self.t5, self.t21, self.t13)


@dataclass(frozen=True)
class CsdRestriction:
    mod16: ModInt  # units of c2(M) on 2D8
    mod3: ModInt  # units of t^2 on the order-3 subgroup


def load_ktable(path: str | Path | None = None) -> list[IrrepRow]:
    if path is None:
        from .data import data_path

        path = data_path("ktable.json")
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: {exc}") from exc
    if not isinstance(data, list):
        raise SchemaError("k table must be an array")
    rows = []
    for d in data:
        try:
            rows.append(
                IrrepRow(
                    int(d["i"]), int(d["t1"]), int(d["t2"]), int(d["t5"]), int(d["t21"]),
                    int(d["t13"]), int(d["k"]), bool(d.get("real", True)),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad k table entry {d!r}: {exc}") from exc
    return rows


def csd_restriction(t1: int, t2: int, t5: int, t21: int, t13: int) -> CsdRestriction:
    d = decompose_from_co0_traces(t1, t2, t5, t21)
    q, r = divmod(t1 - t13, 3)
    if r or q < 0:
        raise NotDivisibleBy3(f"t1 - t13 = {t1 - t13} is not a nonnegative multiple of 3")
    # an element of order 3 with trace t13 has q eigenvalues w and q eigenvalues w^2
    mod3 = e2_counts(3, {0: t1 - 2 * q, 1: q, 2: q})
    assert mod3 == -q, "closed form e2 = -b mod 3 disagrees"
    return CsdRestriction(c2_mod16(d), mod3)


def _solve_k(r: CsdRestriction) -> ModInt:
    hits = [k for k in range(12) if (12 * k - r.mod16.value) % 16 == 0 and (k - r.mod3.value) % 3 == 0]
    if not hits:
        raise Unsolvable(f"{r.mod16.value} mod 16 is not a multiple of 12 * c2(M)")
    return ModInt(12, hits[0])


@lru_cache(maxsize=None)
def reference_constants() -> CsdRestriction:
    """The Leech restriction; must be (12 mod 16, 1 mod 3) for k(Leech) = 1."""
    r = csd_restriction(*LEECH_TRACES)
    if r.mod16 != 12 or r.mod3 != 1:
        raise Co0Error(f"Leech restriction is {r}, expected (12 mod 16, 1 mod 3)")
    return r


def k_of_character(t1: int, t2: int, t5: int, t21: int, t13: int) -> ModInt:
    """k with c2(V) = k c2(Leech), read off on Z/3 x 2D8 by the CRT."""
    reference_constants()
    return _solve_k(csd_restriction(t1, t2, t5, t21, t13))


@dataclass
class KTableReport:
    rows: list[dict] = field(default_factory=list)
    real_count: int = 0
    complex_count: int = 0

    @property
    def matches(self) -> int:
        return sum(r["match"] for r in self.rows)

    @property
    def mismatches(self) -> list[dict]:
        return [r for r in self.rows if not r["match"]]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def ktable_verify(rows: Iterable[IrrepRow]) -> KTableReport:
    rep = KTableReport()
    for row in rows:
        entry = {"i": row.index, "expected": row.expected_k % 12}
        try:
            r = csd_restriction(*row.traces)
            entry.update(mod16=r.mod16.value, mod3=r.mod3.value, k=_solve_k(r).value)
            entry["match"] = entry["k"] == entry["expected"]
        except Co0Error as exc:
            entry.update(k=None, error=f"{type(exc).__name__}: {exc}", match=False)
        rep.rows.append(entry)
        if row.real:
            rep.real_count += 1
        else:
            rep.complex_count += 1
    return rep


# ------------------------------------------------------- the p1/2 formula


@dataclass(frozen=True)
class FrameCheck:
    frame: str
    order: int
    balanced: bool
    direct: int
    formula: int
    lift_constant: bool
    lifts: int
    canonical_invariant: bool
    torsion24: bool
    expected: int | None = None

    @property
    def ok(self) -> bool:
        exp_ok = self.expected is None or (self.direct - self.expected) % self.order == 0
        return (
            self.direct == self.formula
            and self.lift_constant
            and self.canonical_invariant
            and self.torsion24
            and exp_ok
        )


@lru_cache(maxsize=None)
def check_frame(text: str, expected: int | None = None) -> FrameCheck:
    fs = parse_frame(text)
    c = classify(fs)
    direct = p12_restriction(fs)
    formula = theorem6_formula(fs)
    lift = lift_independence_check(eigenvalues_from_frame(fs))
    try:
        can = canonical24(direct)
        torsion, invariant = True, can.invariant
    except Co0Error:
        torsion, invariant = False, False
    return FrameCheck(
        str(fs),
        c.order,
        c.balanced is not None,
        direct.k.value,
        formula.k.value,
        lift.constant and lift.value == -direct.k,
        lift.lifts,
        invariant,
        torsion,
        expected,
    )


@dataclass
class Theorem6Report:
    items: list[dict] = field(default_factory=list)

    @property
    def failures(self) -> list[dict]:
        return [it for it in self.items if not it["ok"]]

    @property
    def ok(self) -> bool:
        return not self.failures

    def distinct_frames(self) -> list[str]:
        return sorted({it["frame"] for it in self.items})


def _item(index: int, source: str, chk: FrameCheck, **extra) -> dict:
    out = {
        "index": index,
        "source": source,
        "frame": chk.frame,
        "order": chk.order,
        "balanced": chk.balanced,
        "direct": chk.direct,
        "formula": chk.formula,
        "lift_constant": chk.lift_constant,
        "canonical_invariant": chk.canonical_invariant,
        "torsion24": chk.torsion24,
        "ok": chk.ok,
    }
    if chk.expected is not None:
        out["expected"] = chk.expected
    out.update(extra)
    if extra.get("cycle_frame") is not None and extra["cycle_frame"] != chk.frame:
        out["ok"] = False
    return out


def load_frame_fixtures(path: str | Path | None = None) -> list[dict]:
    if path is None:
        from .data import data_path

        path = data_path("frameshapes.json")
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(d, dict) and "frame" in d for d in data):
        raise SchemaError("frame fixture must be an array of objects with 'frame'")
    return data


def theorem6_fixtures(fixtures: Sequence[dict] | None = None) -> Theorem6Report:
    fixtures = load_frame_fixtures() if fixtures is None else fixtures
    rep = Theorem6Report()
    for i, d in enumerate(fixtures):
        rep.items.append(_item(i, "fixture", check_frame(d["frame"], d.get("expected_p12")), class_name=d.get("class_name")))
    return rep


def theorem6_sampled(count: int, seed: int = 0, word_length: int = 30) -> Theorem6Report:
    """Random elements of 2^12:M24: the frame shape comes from the characteristic
    polynomial of the signed permutation matrix and is cross-checked against the
    signed cycle structure."""
    from .golay.leech import random_element, signed_cycle_frame, signed_perm_matrix

    rng = random.Random(seed)
    rep = Theorem6Report()
    for i in range(count):
        sp = random_element(rng, word_length)
        fs = frame_from_matrix(signed_perm_matrix(sp))
        rep.items.append(_item(i, "sample", check_frame(str(fs)), cycle_frame=str(signed_cycle_frame(sp))))
    return rep


def theorem6_verify(
    source: str = "fixtures",
    count: int = 10_000,
    seed: int = 0,
    word_length: int = 30,
    fixtures: Sequence[dict] | None = None,
) -> Theorem6Report:
    """``source`` is "fixtures" or "sampled"."""
    if source == "fixtures":
        return theorem6_fixtures(fixtures)
    if source == "sampled":
        return theorem6_sampled(count, seed, word_length)
    raise ValueError(f"unknown source {source!r}")


# ------------------------------------------------------- special classes


def _trace(table: CharacterTable, character: str, cls: str) -> int | None:
    v = table.irrep(character).values[table.class_index(cls)]
    return v.is_integer()


def _unique(label: str, names: list[str]) -> str:
    if not names:
        raise NotFound(f"no class qualifies as {label}")
    if len(names) > 1:
        raise NotUnique(f"{label} is ambiguous: {names}")
    return names[0]


def identify_special_classes(table: CharacterTable, character: str | None = None) -> dict[str, str]:
    """c2: order 2 acting as -1; c5: order 4 squaring to c2; c21: order 8 with
    fourth power c2; c13: order 3 with trace 0.  ``character`` defaults to the
    unique irrep of largest degree."""
    if character is None:
        degs = {n: table.irrep(n).degree() for n in table.irrep_names()}
        top = max(v.to_integer() for v in degs.values())
        character = _unique("faithful character", [n for n, v in degs.items() if v.to_integer() == top])
    dim = table.irrep(character).degree().to_integer()

    def of_order(o):
        return [c.name for c in table.classes if c.order == o]

    c2 = _unique("c2", [c for c in of_order(2) if _trace(table, character, c) == -dim])
    c5 = _unique("c5", [c for c in of_order(4) if power_class(table, c, 2) == c2])
    c21 = _unique("c21", [c for c in of_order(8) if power_class(table, c, 4) == c2])
    c13 = _unique("c13", [c for c in of_order(3) if _trace(table, character, c) == 0])
    return {"c2": c2, "c5": c5, "c21": c21, "c13": c13}


def load_co0_classes(path: str | Path | None = None) -> CharacterTable:
    from .chartab import load_table

    if path is None:
        from .data import data_path

        path = data_path("co0_classes.json")
    return load_table(path)


# ------------------------------------------------------- additivity


@dataclass
class AdditivityReport:
    pairs: list[tuple[int, int, int, int, int]] = field(default_factory=list)  # i, j, k_i, k_j, k_sum

    @property
    def failures(self) -> list[tuple]:
        return [p for p in self.pairs if (p[2] + p[3] - p[4]) % 12]

    @property
    def ok(self) -> bool:
        return not self.failures


def k_additivity_check(rows: Sequence[IrrepRow], trials: int = 500, seed: int = 0) -> AdditivityReport:
    rng = random.Random(seed)
    rep = AdditivityReport()
    for _ in range(trials):
        a, b = rng.choice(rows), rng.choice(rows)
        total = tuple(x + y for x, y in zip(a.traces, b.traces))
        rep.pairs.append(
            (a.index, b.index, k_of_character(*a.traces).value, k_of_character(*b.traces).value,
             k_of_character(*total).value)
        )
    return rep
