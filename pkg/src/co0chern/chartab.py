"""Character tables: JSON ingestion, class functions, decomposition, power maps.

File format (JSON object)::

    {"group": "Q16", "order": 16,
     "classes": [{"name": "1", "order": 1, "size": 1, "powermaps": {}}, ...],
     "irreps": [{"name": "V0", "values": [1, 1, ...]}, ...],
     "fusions": {"Co0": {"1": "c1", ...}}}

A value is an integer or ``{"n": N, "terms": [[e, c], ...]}`` for the sum of
``c * zeta_N**e``.  ``order`` and class ``size`` may be null/omitted; anything
that needs them raises :class:`MissingOrder`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping, Sequence

from .cyclo import CyclotomicValue, factorize
from .errors import (
    ConflictingFusion,
    MissingFusionEntry,
    MissingOrder,
    MissingPowerMap,
    NotACharacter,
    SchemaError,
    TableMismatch,
    ValidationError,
)


@dataclass(frozen=True)
class ConjClass:
    name: str
    order: int
    size: int | None
    power_maps: Mapping[int, str] = field(default_factory=dict)


@dataclass(frozen=True, eq=False)
class CharacterTable:
    group_name: str
    classes: tuple[ConjClass, ...]
    irreps: tuple[tuple[str, tuple[CyclotomicValue, ...]], ...]
    fusions: Mapping[str, Mapping[str, str]] = field(default_factory=dict)
    order: int | None = None

    def class_index(self, name: str) -> int:
        for i, c in enumerate(self.classes):
            if c.name == name:
                return i
        raise KeyError(f"no class {name!r} in {self.group_name}")

    def conj_class(self, name: str) -> ConjClass:
        return self.classes[self.class_index(name)]

    def irrep(self, name: str) -> "ClassFunction":
        for n, vals in self.irreps:
            if n == name:
                return ClassFunction(self, vals)
        raise KeyError(f"no irrep {name!r} in {self.group_name}")

    def irrep_names(self) -> list[str]:
        return [n for n, _ in self.irreps]

    def class_function(self, values: Sequence) -> "ClassFunction":
        return ClassFunction(self, tuple(_as_cyclo(v) for v in values))


@dataclass(frozen=True, eq=False)
class ClassFunction:
    table: CharacterTable
    values: tuple[CyclotomicValue, ...]

    def __post_init__(self):
        if len(self.values) != len(self.table.classes):
            raise ValueError("class function length does not match class count")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if other.table is not self.table:
            raise TableMismatch("class functions live on different tables")
        return ClassFunction(self.table, tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, k: int) -> "ClassFunction":
        return ClassFunction(self.table, tuple(v * k for v in self.values))

    __rmul__ = __mul__

    def degree(self) -> CyclotomicValue:
        return self.values[0]


def _as_cyclo(v) -> CyclotomicValue:
    if isinstance(v, CyclotomicValue):
        return v
    if isinstance(v, bool):
        raise SchemaError("booleans are not character values")
    if isinstance(v, int):
        return CyclotomicValue.integer(v)
    raise SchemaError(f"bad value {v!r}")


def parse_value(obj: Any) -> CyclotomicValue:
    if isinstance(obj, bool):
        raise SchemaError("booleans are not character values")
    if isinstance(obj, int):
        return CyclotomicValue.integer(obj)
    if isinstance(obj, dict) and set(obj) == {"n", "terms"}:
        n, terms = obj["n"], obj["terms"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise SchemaError(f"bad conductor {n!r}")
        if not isinstance(terms, list) or not all(
            isinstance(t, list) and len(t) == 2 and all(isinstance(x, int) for x in t) for t in terms
        ):
            raise SchemaError(f"bad terms {terms!r}")
        return CyclotomicValue.from_terms(n, [tuple(t) for t in terms])
    raise SchemaError(f"bad value {obj!r}")


def dump_value(v: CyclotomicValue) -> Any:
    k = v.is_integer()
    if k is not None and v.conductor == 1:
        return k
    return {"n": v.conductor, "terms": [[i, c] for i, c in enumerate(v.rep.coeffs) if c]}


def _require(cond: bool, msg: str):
    if not cond:
        raise SchemaError(msg)


def table_from_dict(data: Any) -> CharacterTable:
    _require(isinstance(data, dict), "top level must be an object")
    _require(isinstance(data.get("group"), str), "missing 'group'")
    _require(isinstance(data.get("classes"), list) and data["classes"], "missing 'classes'")
    _require(isinstance(data.get("irreps", []), list), "'irreps' must be an array")
    order = data.get("order")
    _require(order is None or (isinstance(order, int) and order > 0), "bad 'order'")

    classes = []
    for c in data["classes"]:
        _require(isinstance(c, dict), "class entries must be objects")
        _require(isinstance(c.get("name"), str), "class needs a name")
        _require(isinstance(c.get("order"), int) and c["order"] > 0, f"bad order for {c.get('name')}")
        size = c.get("size")
        _require(size is None or (isinstance(size, int) and size > 0), f"bad size for {c['name']}")
        pm = c.get("powermaps", {})
        _require(isinstance(pm, dict), "powermaps must be an object")
        try:
            pmap = {int(p): str(t) for p, t in pm.items()}
        except ValueError as exc:
            raise SchemaError(f"bad powermap key in {c['name']}") from exc
        classes.append(ConjClass(c["name"], c["order"], size, pmap))

    names = [c.name for c in classes]
    _require(len(set(names)) == len(names), "duplicate class names")

    irreps = []
    for r in data.get("irreps", []):
        _require(isinstance(r, dict) and isinstance(r.get("name"), str), "irrep needs a name")
        vals = r.get("values")
        _require(isinstance(vals, list) and len(vals) == len(classes), f"irrep {r['name']} has wrong length")
        irreps.append((r["name"], tuple(parse_value(v) for v in vals)))

    fusions = data.get("fusions", {})
    _require(isinstance(fusions, dict), "fusions must be an object")
    for tgt, fmap in fusions.items():
        _require(isinstance(fmap, dict), f"fusion {tgt} must be an object")
        _require(all(isinstance(v, str) for v in fmap.values()), f"fusion {tgt} values must be names")

    table = CharacterTable(
        data["group"],
        tuple(classes),
        tuple(irreps),
        {t: dict(m) for t, m in fusions.items()},
        order,
    )
    validate_table(table)
    return table


def table_to_dict(table: CharacterTable) -> dict:
    out: dict[str, Any] = {"group": table.group_name}
    if table.order is not None:
        out["order"] = table.order
    out["classes"] = [
        {
            "name": c.name,
            "order": c.order,
            "size": c.size,
            "powermaps": {str(p): t for p, t in sorted(c.power_maps.items())},
        }
        for c in table.classes
    ]
    out["irreps"] = [{"name": n, "values": [dump_value(v) for v in vals]} for n, vals in table.irreps]
    out["fusions"] = {t: dict(m) for t, m in table.fusions.items()}
    return out


def validate_table(table: CharacterTable) -> None:
    first = table.classes[0]
    if first.order != 1:
        raise ValidationError("first class must be the identity")
    names = {c.name for c in table.classes}
    for c in table.classes:
        for p, target in c.power_maps.items():
            if target not in names:
                raise ValidationError(f"power map of {c.name} points to unknown class {target}")
            if c.order % table.conj_class(target).order:
                raise ValidationError(f"order of {c.name}^{p} does not divide order of {c.name}")
    for tgt, fmap in table.fusions.items():
        if set(fmap) - names:
            raise ValidationError(f"fusion into {tgt} names unknown classes")
    if table.order is not None:
        sizes = [c.size for c in table.classes]
        if all(s is not None for s in sizes):
            if sum(sizes) != table.order:
                raise ValidationError(f"class sizes sum to {sum(sizes)}, not {table.order}")
            for i, (ni, _) in enumerate(table.irreps):
                for j, (nj, _) in enumerate(table.irreps):
                    ip = inner_product(table.irrep(ni), table.irrep(nj))
                    if ip != (1 if i == j else 0):
                        raise ValidationError(f"<{ni},{nj}> = {ip}")


def load_table(path: str | Path) -> CharacterTable:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: {exc}") from exc
    return table_from_dict(data)


def save_table(table: CharacterTable, path: str | Path) -> None:
    Path(path).write_text(json.dumps(table_to_dict(table), indent=1) + "\n")


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """(1/|G|) sum_C |C| f(C) conj(g(C)), as an exact rational."""
    if f.table is not g.table:
        raise TableMismatch("class functions live on different tables")
    table = f.table
    if table.order is None or any(c.size is None for c in table.classes):
        raise MissingOrder(f"{table.group_name}: group order or class sizes unknown")
    total = CyclotomicValue.integer(0)
    for c, a, b in zip(table.classes, f.values, g.values):
        total = total + a * b.conjugate() * c.size
    return Fraction(total.to_integer(), table.order)


def decompose(f: ClassFunction) -> dict[str, int]:
    """Irreducible multiplicities of a character; raises NotACharacter."""
    out = {}
    for name, _ in f.table.irreps:
        m = inner_product(f, f.table.irrep(name))
        if m.denominator != 1 or m < 0:
            raise NotACharacter(f"multiplicity of {name} is {m}")
        out[name] = int(m)
    return out


def power_class(table: CharacterTable, cls: str, d: int) -> str:
    """Class of g**d for g in ``cls``, composing prime power maps.

    Every ordering of the prime factors of d is tried and must agree.
    """
    if d < 1:
        raise ValueError("d must be positive")
    primes = [p for p, e in factorize(d) for _ in range(e)] if d > 1 else []

    def walk(order_of_primes):
        cur = cls
        for p in order_of_primes:
            cc = table.conj_class(cur)
            if p in cc.power_maps:
                cur = cc.power_maps[p]
            elif p % cc.order == 1 % cc.order:
                continue
            else:
                # g^p only depends on p mod the element order
                alt = [q for q in cc.power_maps if q % cc.order == p % cc.order]
                if not alt:
                    raise MissingPowerMap(f"{cur}: no {p}-power map")
                cur = cc.power_maps[min(alt)]
        return cur

    results = {walk(primes)}
    # distinct rotations are enough to exercise every prime first
    for k in range(1, len(primes)):
        results.add(walk(primes[k:] + primes[:k]))
        results.add(walk(list(reversed(primes[k:] + primes[:k]))))
    if len(results) != 1:
        raise ValidationError(f"power maps of {cls} are not consistent for d={d}: {sorted(results)}")
    return results.pop()


def restrict_via_fusion(
    table: CharacterTable, big_values: Mapping[str, Any], fusion: Mapping[str, str] | str
) -> ClassFunction:
    """Pull a class function of the big group back along a fusion map."""
    if isinstance(fusion, str):
        fusion = table.fusions[fusion]
    vals = []
    for c in table.classes:
        if c.name not in fusion:
            raise MissingFusionEntry(f"class {c.name} has no fusion image")
        tgt = fusion[c.name]
        if tgt not in big_values:
            raise MissingFusionEntry(f"no value supplied for target class {tgt}")
        vals.append(_as_cyclo(big_values[tgt]))
    return ClassFunction(table, tuple(vals))


def check_fused_values(table: CharacterTable, values: Sequence, fusion: Mapping[str, str]) -> None:
    """Classes fused to the same target must carry equal values."""
    seen: dict[str, CyclotomicValue] = {}
    for c, v in zip(table.classes, values):
        tgt = fusion[c.name]
        v = _as_cyclo(v)
        if tgt in seen and seen[tgt] != v:
            raise ConflictingFusion(f"{c.name} and another class fuse to {tgt} with different values")
        seen[tgt] = v
