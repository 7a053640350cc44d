import random

import pytest

from co0chern.errors import NotALattice, SignsNotInCode
from co0chern.frame import determinant, frame_from_matrix
from co0chern.golay import build_golay, leech_basis, preserves_lattice
from co0chern.golay.leech import (
    LatticeBasis,
    SignedPermutation,
    hermite_rows,
    random_element,
    signed_cycle_frame,
    signed_perm_matrix,
    validate_lattice,
)
from co0chern.golay.permgroup import perm_identity

ID = perm_identity(24)


def ident(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def test_identity_element():
    assert signed_perm_matrix(SignedPermutation(ID, 0)) == ident(24)


def test_weight12_sign_change():
    code = build_golay()
    w = next(c for c in code.codewords() if bin(c).count("1") == 12)
    M = signed_perm_matrix(SignedPermutation(ID, w))
    assert sum(M[i][i] for i in range(24)) == 0
    sq = [[sum(M[i][k] * M[k][j] for k in range(24)) for j in range(24)] for i in range(24)]
    assert sq == ident(24)


def test_signs_must_be_codewords():
    with pytest.raises(SignsNotInCode):
        SignedPermutation(ID, 1)


def test_leech_basis():
    L = leech_basis()
    gram = L.gram()
    assert all(x.denominator == 1 for row in gram for x in row)
    assert all(gram[i][i] % 2 == 0 for i in range(24))
    assert determinant([[int(x) for x in row] for row in gram]) == 1


def test_not_a_lattice():
    with pytest.raises(NotALattice):
        validate_lattice(LatticeBasis(tuple(tuple(r) for r in ident(24)), 2))
    with pytest.raises(NotALattice):
        hermite_rows([[1, 0], [2, 0]], 2)


def test_preserves_identity():
    assert preserves_lattice(ident(24))


def test_non_automorphism():
    # a transposition of two coordinates is not in 2^12:M24 and misses the lattice
    p = (1, 0) + tuple(range(2, 24))
    M = [[0] * 24 for _ in range(24)]
    for i, j in enumerate(p):
        M[j][i] = 1
    assert not preserves_lattice(M)


@pytest.fixture(scope="module")
def samples():
    rng = random.Random(2024)
    return [random_element(rng) for _ in range(50)]


def test_random_elements_orthogonal(samples):
    for sp in samples:
        M = signed_perm_matrix(sp)
        MtM = [[sum(M[k][i] * M[k][j] for k in range(24)) for j in range(24)] for i in range(24)]
        assert MtM == ident(24)
        assert determinant(M) == 1
        assert preserves_lattice(M)


def test_signed_cycles_match_charpoly(samples):
    for sp in samples:
        assert signed_cycle_frame(sp) == frame_from_matrix(signed_perm_matrix(sp))


def test_seeded_determinism():
    a = [random_element(s) for s in range(5)]
    b = [random_element(s) for s in range(5)]
    assert a == b
