import pytest

from co0chern.chartab import power_class
from co0chern.conway import (
    CsdRestriction,
    _solve_k,
    IrrepRow,
    check_frame,
    csd_restriction,
    identify_special_classes,
    k_additivity_check,
    k_of_character,
    ktable_verify,
    load_co0_classes,
    load_frame_fixtures,
    load_ktable,
    reference_constants,
    theorem6_fixtures,
    theorem6_sampled,
    theorem6_verify,
)
from co0chern.cyclo import ModInt
from co0chern.errors import NotDivisibleBy3, NotUnique, SchemaError, Unsolvable
from co0chern.mckay import q16_table


@pytest.fixture(scope="module")
def rows():
    return load_ktable()


def test_reference_constants():
    r = reference_constants()
    assert (r.mod16.value, r.mod3.value) == (12, 1)


def test_ktable_all_match(rows):
    rep = ktable_verify(rows)
    assert len(rows) == 167
    assert rep.matches == 167 and rep.ok


def test_ktable_anchors(rows):
    by_index = {r.index: r for r in rows}
    for i, k in {1: 0, 2: 10, 3: 2, 102: 1}.items():
        assert k_of_character(*by_index[i].traces) == k


def test_ktable_shape(rows):
    assert all(r.t2 == r.t1 for r in rows if r.index < 102)
    assert all(r.t2 == -r.t1 for r in rows if r.index >= 102)
    rep = ktable_verify(rows)
    assert (rep.real_count, rep.complex_count) == (153, 14)


def test_ktable_perturbed(rows):
    bad = [IrrepRow(r.index, r.t1, r.t2, r.t5, r.t21, r.t13, r.expected_k + 1, r.real) for r in rows[:5]]
    rep = ktable_verify(bad)
    assert len(rep.mismatches) == 5


def test_ktable_empty():
    rep = ktable_verify([])
    assert rep.matches == 0 and rep.ok


def test_irrep_row_validation():
    with pytest.raises(SchemaError):
        IrrepRow(1, 0, 0, 0, 0, 0, 0)
    with pytest.raises(SchemaError):
        IrrepRow(1, 3, 2, 0, 0, 0, 0)


def test_csd_restriction_errors():
    with pytest.raises(NotDivisibleBy3):
        csd_restriction(24, -24, 0, 0, 1)
    with pytest.raises(Unsolvable):
        _solve_k(CsdRestriction(ModInt(16, 1), ModInt(3, 0)))


def test_additivity(rows):
    by_index = {r.index: r for r in rows}
    total = tuple(a + b for a, b in zip(by_index[2].traces, by_index[3].traces))
    assert k_of_character(*total) == 0
    rep = k_additivity_check(rows, trials=500, seed=0)
    assert len(rep.pairs) == 500 and rep.ok


def test_frame_fixtures():
    fixtures = load_frame_fixtures()
    assert len(fixtures) == 9
    rep = theorem6_fixtures()
    assert rep.ok
    got = {it["frame"]: it["direct"] for it in rep.items}
    assert got["2^-4 8^4"] == 4 and got["3^8"] == 1 and got["1^24"] == 0


def test_check_frame_expected_mismatch():
    assert not check_frame("3^8", 0).ok
    assert check_frame("3^8", 1).ok


def test_theorem6_sampled():
    rep = theorem6_sampled(300, seed=1)
    assert rep.ok and len(rep.items) == 300
    assert len(rep.distinct_frames()) > 10
    again = theorem6_sampled(300, seed=1)
    assert again.items == rep.items


def test_special_classes_co0():
    table = load_co0_classes()
    assert identify_special_classes(table) == {"c2": "c2", "c5": "c5", "c21": "c21", "c13": "c13"}


def test_special_classes_q16_ambiguous():
    with pytest.raises(NotUnique):
        identify_special_classes(q16_table(), "V6")


def test_power_class_factorizations():
    table = load_co0_classes()
    for cls in table.classes:
        if cls.order % 4 == 0:
            two_twice = power_class(table, power_class(table, cls.name, 2), 2)
            assert two_twice == power_class(table, cls.name, 4)


def test_theorem6_verify_dispatch():
    assert theorem6_verify("fixtures").items == theorem6_fixtures().items
    assert theorem6_verify("sampled", count=20, seed=4).items == theorem6_sampled(20, seed=4).items
    with pytest.raises(ValueError):
        theorem6_verify("other")
