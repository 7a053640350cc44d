import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from co0chern.anomaly import (
    a38_check,
    a64_check,
    bar_pairing,
    carry,
    cocycle_defect,
    load_umbral_rows,
    m24_anomaly_check,
    row_from_dict,
    verify_umbral_row,
)
from co0chern.errors import NotBalanced, SchemaError
from co0chern.golay import m24_generators
from co0chern.golay.permgroup import perm_identity, perm_mul


@pytest.mark.parametrize("n", range(1, 61))
def test_bar_pairing(n):
    assert bar_pairing(n) == Fraction(1, n) % 1


def test_bar_pairing_rejects_zero():
    with pytest.raises(ValueError):
        bar_pairing(0)


@given(st.integers(1, 12), st.data())
def test_carry_is_cocycle(n, data):
    a, b, c = (data.draw(st.integers(0, n - 1)) for _ in range(3))
    assert cocycle_defect(a, b, c, n) == 0
    assert carry(a, b, n) in (0, 1)


def m24_samples(count, seed=0):
    rng = random.Random(seed)
    gens = m24_generators()
    out = []
    for _ in range(count):
        p = perm_identity(24)
        for _ in range(30):
            p = perm_mul(p, rng.choice(gens))
        out.append(p)
    return out


def test_m24_anomaly_identity():
    rep = m24_anomaly_check(perm_identity(24))
    assert rep.frame == "1^24" and rep.ok and rep.pairing == 0


def test_m24_anomaly_samples():
    reps = [m24_anomaly_check(p) for p in m24_samples(1000)]
    assert all(r.ok for r in reps)
    assert len({r.frame for r in reps}) >= 10


def test_m24_anomaly_unbalanced():
    # an odd permutation outside M24 with unbalanced cycle type 1^22 2^1
    p = (1, 0) + tuple(range(2, 24))
    with pytest.raises(NotBalanced):
        m24_anomaly_check(p)


def test_umbral_rows():
    rows = load_umbral_rows()
    assert {r.lattice for r in rows} == {"D6^4", "A4^6"}
    reports = [verify_umbral_row(r) for r in rows]
    assert all(rep.ok for rep in reports)
    assert all(all(rep.columns.values()) for rep in reports)


def test_umbral_4a_sign_failure():
    row = next(r for r in load_umbral_rows() if r.lattice == "A4^6" and r.cls == "4A")
    rep = verify_umbral_row(row)
    assert rep.opposite_holds and not rep.relation_holds
    assert (rep.p12, rep.c2b, rep.c2a) == (1, 3, 2)


def test_umbral_schema():
    good = {"lattice": "X", "class": "2A", "frame": "2^12", "b_plus": [0, 1], "a_plus": [], "p12": 1,
            "c2b": 0, "c2a": 0}
    row_from_dict(good)
    with pytest.raises(SchemaError):
        row_from_dict({**good, "modulus": 3})
    with pytest.raises(SchemaError):
        row_from_dict({**good, "relation": "maybe"})
    with pytest.raises(SchemaError):
        row_from_dict({k: v for k, v in good.items() if k != "p12"})


def test_a38():
    rep = a38_check()
    assert rep.ok
    assert rep.c2_core == 2 and rep.c2_b_minus_a == 10
    assert rep.factor5_check
    # both branches agree on the multiplier; it is -5, i.e. 3 mod 8
    assert rep.epsilon_mod8 == (3,)
    assert all(b["minus5"] and not b["plus5"] for b in rep.branches)


def test_a64():
    rep = a64_check()
    assert rep.ok
    assert rep.p12_perm8 == -3
    assert rep.p12_leech == 7 and rep.c2_b == 1
    assert rep.mod3_c2_b == 0 and rep.mod3_p12 == 0
