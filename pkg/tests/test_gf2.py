import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from co0chern.errors import DimensionOverflow
from co0chern.golay.gf2 import (
    MAX_DIM,
    BitMatrix,
    alt_power,
    filtration_dims,
    fixed_space,
    inverse,
    kernel,
    monomials,
    rank,
    sq1_exactness,
    sq1_matrix,
    squarefree,
    sym_power,
)


def rand_matrix(rng, n, invertible=False):
    while True:
        M = BitMatrix(n, n, tuple(rng.getrandbits(n) for _ in range(n)))
        if not invertible or rank(M) == n:
            return M


def test_identity_functors():
    I = BitMatrix.identity(4)
    for k in (1, 2, 3):
        assert sym_power(I, k) == BitMatrix.identity(len(monomials(4, k)))
        assert alt_power(I, k) == BitMatrix.identity(comb(4, k))


def test_alt2_of_swap():
    swap = BitMatrix.from_lists([[0, 1], [1, 0]])
    assert alt_power(swap, 2) == BitMatrix.identity(1)


def test_alt3_dimension():
    assert alt_power(BitMatrix.identity(12), 3).nrows == 220
    assert len(squarefree(12, 3)) == 220


def test_dimension_overflow():
    with pytest.raises(DimensionOverflow):
        sym_power(BitMatrix.identity(20), 5)
    assert len(monomials(20, 5)) > MAX_DIM
    with pytest.raises(DimensionOverflow):
        sq1_matrix(7, 1)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_functoriality(k):
    rng = random.Random(k)
    for _ in range(100):
        M, N = rand_matrix(rng, 5), rand_matrix(rng, 5)
        assert sym_power(M @ N, k) == sym_power(M, k) @ sym_power(N, k)
        assert alt_power(M @ N, k) == alt_power(M, k) @ alt_power(N, k)


def test_sq1_base_case():
    M = sq1_matrix(1, 1)
    assert (M.nrows, M.ncols) == (1, 1) and rank(M) == 1


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("d", range(1, 7))
def test_sq1_exact(n, d):
    rep = sq1_exactness(n, d)
    assert rep.square_zero
    assert rep.exact


@pytest.mark.parametrize("n", range(1, 5))
def test_filtration(n):
    lhs, rhs = filtration_dims(n)
    assert lhs == rhs == n + comb(n, 2) + comb(n, 3)


def test_fixed_space_identity():
    assert len(fixed_space([BitMatrix.identity(6)])) == 6


@given(st.integers(1, 10), st.randoms())
def test_rank_nullity(n, rnd):
    M = BitMatrix(n, n, tuple(rnd.getrandbits(n) for _ in range(n)))
    ker = kernel(M)
    assert rank(M) + len(ker) == n
    for v in ker:
        assert M.apply(v) == 0


@given(st.integers(1, 10), st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)), max_size=40))
def test_inverse(n, ops):
    rows = [1 << i for i in range(n)]
    for i, j in ops:
        i, j = i % n, j % n
        if i != j:
            rows[i] ^= rows[j]
    M = BitMatrix(n, n, tuple(rows))
    assert M @ inverse(M) == BitMatrix.identity(n)


@given(st.integers(1, 8), st.randoms())
def test_row_apply_is_transpose(n, rnd):
    M = rand_matrix(rnd, n)
    v = rnd.getrandbits(n)
    assert M.row_apply(v) == M.transpose().apply(v)
