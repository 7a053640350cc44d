import random

import pytest

from co0chern.errors import NotInCode
from co0chern.frame import frame_from_matrix, parse_frame
from co0chern.golay import (
    ALL_ONES,
    M24_ORDER,
    BitMatrix,
    build_golay,
    c12_matrices,
    codeword_trace,
    dual_fixed_space,
    identify_basis,
    m24_chain,
    m24_cycle_type,
    m24_generators,
    matrix_group_order,
    preserves_code,
    rank,
    triple_intersection_check,
)
from co0chern.golay.gf2 import fixed_space, weight
from co0chern.golay.golay import (
    code_action_matrix,
    derived_action,
    derived_code,
    permutation_matrix,
    permute_vector,
    validate_golay,
)
from co0chern.golay.permgroup import perm_identity, perm_mul, perm_order, perm_ops, schreier_sims
from co0chern.golay.golay import trilinear_form


@pytest.fixture(scope="module")
def code():
    return build_golay()


def test_weight_enumerator(code):
    assert code.weight_enumerator() == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


def test_self_dual_and_min_weight(code):
    validate_golay(code)
    assert code.dual() == code
    assert code.minimum_weight() == 8
    assert ALL_ONES in code


def test_codeword_traces(code):
    seen = {}
    for w in code.codewords():
        seen.setdefault(weight(w), codeword_trace(w, code))
    assert seen == {0: 24, 8: 8, 12: 0, 16: -8, 24: -24}
    with pytest.raises(NotInCode):
        codeword_trace(1, code)


def test_coordinates_roundtrip(code):
    rng = random.Random(3)
    for _ in range(100):
        a = rng.getrandbits(12)
        assert code.coordinates(code.from_coordinates(a)) == a


def test_generators_preserve_code(code):
    gens = m24_generators()
    assert all(preserves_code(g, code) for g in gens)
    assert [perm_order(g) for g in gens] == [2, 3]


def test_m24_order():
    assert m24_chain().order() == M24_ORDER


def test_matrix_group_order():
    A, B = c12_matrices()
    assert rank(A) == rank(B) == 12
    assert A @ A == BitMatrix.identity(12)
    assert matrix_group_order([A, B]) == M24_ORDER


def test_membership(code):
    chain = m24_chain()
    a, b = m24_generators()
    assert chain.contains(perm_mul(perm_mul(a, b), a))
    swap = (1, 0) + tuple(range(2, 24))
    assert not chain.contains(swap)


def test_fixed_spaces():
    assert len(dual_fixed_space(1)) == 0
    assert len(dual_fixed_space(2)) == 0
    assert len(dual_fixed_space(3)) == 1
    A, B = c12_matrices()
    # the code itself fixes the all-ones word
    assert fixed_space([A, B]) == [1 << 11]


def test_derived_action_matches_bundled(code):
    pts, (pa, pb) = derived_action()
    dcode = derived_code(pts)
    assert dcode.weight_enumerator() == code.weight_enumerator()
    assert preserves_code(pa, dcode) and preserves_code(pb, dcode)
    assert schreier_sims([pa, pb], perm_ops(24)).order() == M24_ORDER


def test_identify_basis(code):
    T = identify_basis(code)
    A, B = c12_matrices()
    PA, PB = (code_action_matrix(g, code) for g in m24_generators())
    assert PA @ T == T @ A and PB @ T == T @ B
    assert code.from_coordinates(T.apply(1 << 11)) == ALL_ONES


def test_triple_intersection():
    fixed = dual_fixed_space(3)[0]
    rep = triple_intersection_check(fixed, trials=200, seed=0)
    assert rep.ok and rep.trials == 200 and rep.all_ones_checked == 600


def test_trilinear_form_zero_argument():
    form = trilinear_form(dual_fixed_space(3)[0])
    rng = random.Random(5)
    for _ in range(50):
        b, c = rng.getrandbits(12), rng.getrandbits(12)
        assert form(0, b, c) == 0


def test_cycle_types(code):
    assert m24_cycle_type(perm_identity(24)) == parse_frame("1^24")
    rng = random.Random(1)
    gens = m24_generators()
    shapes = set()
    for _ in range(200):
        g = perm_identity(24)
        for _ in range(20):
            g = perm_mul(g, rng.choice(gens))
        fs = m24_cycle_type(g)
        assert fs == frame_from_matrix(permutation_matrix(g))
        shapes.add(str(fs))
    assert "2^12" in shapes or "1^8 2^8" in shapes


def test_permute_vector(code):
    g = m24_generators()[0]
    for w in code.basis:
        assert weight(permute_vector(w, g)) == weight(w)


def test_docs_match_frozen_basis(code):
    from pathlib import Path

    text = (Path(__file__).resolve().parents[1] / "docs" / "golay.md").read_text()
    block = text.split("```")[1].split()
    assert [int(row[::-1], 2) for row in block] == list(code.basis)
