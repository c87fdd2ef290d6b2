import random

import numpy as np
import pytest

import bruteforce as bf
from qgrass.field import make_field
from qgrass.linalg import (
    Subspace,
    as_matrix,
    kernel,
    matmul,
    matrix_inverse,
    random_invertible,
    random_matrix,
    rank,
    rref,
    row_space,
)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_rref_matches_naive(p):
    gf = make_field(p)
    rng = random.Random(p * 100)
    for _ in range(40):
        nrows = rng.randrange(1, 5)
        ncols = rng.randrange(1, 6)
        mat = random_matrix(gf, nrows, ncols, rng)
        R, rk, pivots = rref(gf, mat)
        form, naive_piv = bf.naive_rref([list(r) for r in mat], p)
        assert rk == len(form)
        assert pivots == naive_piv
        assert [list(map(int, r)) for r in R[:rk]] == [list(r) for r in form]
        assert not np.any(R[rk:])


def test_rref_structure_over_gf4(gf4):
    rng = random.Random(42)
    for _ in range(30):
        mat = random_matrix(gf4, rng.randrange(1, 5), rng.randrange(1, 6), rng)
        R, rk, pivots = rref(gf4, mat)
        # idempotent and structurally reduced
        R2, rk2, piv2 = rref(gf4, R)
        assert rk2 == rk and piv2 == pivots
        assert np.array_equal(R, R2)
        for i, c in enumerate(pivots):
            assert int(R[i, c]) == 1
            assert np.count_nonzero(R[:, c]) == 1
            assert not np.any(R[i, :c])
        # original rows lie in the span of the reduced rows
        S = Subspace.from_rows(gf4, R[:rk], ambient=mat.shape[1])
        for row in mat:
            assert S.contains_vector(row)


def test_row_space_is_canonical(gf3):
    rng = random.Random(9)
    for _ in range(25):
        mat = random_matrix(gf3, 3, 5, rng)
        basis, _ = row_space(gf3, mat)
        # scale rows and shuffle; canonical basis must not move
        scrambled = [list(gf3.mul(rng.randrange(1, 3), row)) for row in mat]
        rng.shuffle(scrambled)
        basis2, _ = row_space(gf3, scrambled)
        assert np.array_equal(basis, basis2)


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2)])
def test_kernel_annihilates(p, e):
    gf = make_field(p, e)
    rng = random.Random(31 * p + e)
    for _ in range(25):
        mat = random_matrix(gf, rng.randrange(1, 4), rng.randrange(1, 6), rng)
        ker = kernel(gf, mat)
        assert ker.dim == mat.shape[1] - rank(gf, mat)
        for vec in ker.basis:
            assert not np.any(matmul(gf, mat, vec[:, None]))


def test_kernel_edge_cases(gf2):
    assert kernel(gf2, np.eye(4, dtype=np.int64)).dim == 0
    assert kernel(gf2, np.zeros((2, 4), dtype=np.int64)).dim == 4


def test_matmul_matches_naive(gf4):
    rng = random.Random(5)
    a = random_matrix(gf4, 3, 4, rng)
    b = random_matrix(gf4, 4, 2, rng)
    out = matmul(gf4, a, b)
    for i in range(3):
        for j in range(2):
            acc = 0
            for k in range(4):
                acc = int(gf4.add(acc, gf4.mul(int(a[i, k]), int(b[k, j]))))
            assert int(out[i, j]) == acc
    with pytest.raises(ValueError):
        matmul(gf4, a, a)


@pytest.mark.parametrize("p,e", [(2, 1), (5, 1), (2, 2), (3, 2)])
def test_matrix_inverse(p, e):
    gf = make_field(p, e)
    rng = random.Random(17 * p + e)
    eye = np.eye(4, dtype=np.int64)
    for _ in range(10):
        mat = random_invertible(gf, 4, rng)
        inv = matrix_inverse(gf, mat)
        assert np.array_equal(matmul(gf, mat, inv), eye)
        assert np.array_equal(matmul(gf, inv, mat), eye)
    singular = np.vstack([mat[:3], mat[2][None, :]])
    with pytest.raises(ValueError):
        matrix_inverse(gf, singular)


def test_as_matrix_validation(gf3):
    with pytest.raises(ValueError):
        as_matrix(gf3, [[0, 3]])
    with pytest.raises(ValueError):
        as_matrix(gf3, [[0, -1]])
    assert as_matrix(gf3, [1, 2, 0]).shape == (1, 3)


# -- Subspace ----------------------------------------------------------------


def random_subspace_rows(gf, m, d, rng):
    return random_matrix(gf, d, m, rng)


@pytest.mark.parametrize("p", [2, 3])
def test_intersection_matches_span_sets(p):
    gf = make_field(p)
    m = 4
    rng = random.Random(p * 7)
    for _ in range(30):
        A = Subspace.from_rows(gf, random_subspace_rows(gf, m, 2, rng), ambient=m)
        B = Subspace.from_rows(gf, random_subspace_rows(gf, m, 2, rng), ambient=m)
        got = A & B
        sa = bf.span_set(A.to_rows(), p, m)
        sb = bf.span_set(B.to_rows(), p, m)
        expect = sa & sb
        assert bf.span_set(got.to_rows(), p, m) == expect
        assert p**got.dim == len(expect)
        # dimension formula against the join
        assert got.dim == A.dim + B.dim - (A + B).dim


def test_sum_and_containment(gf2):
    rng = random.Random(3)
    for _ in range(20):
        A = Subspace.from_rows(gf2, random_subspace_rows(gf2, 5, 2, rng), ambient=5)
        B = Subspace.from_rows(gf2, random_subspace_rows(gf2, 5, 2, rng), ambient=5)
        S = A + B
        assert A <= S and B <= S
        assert (A & B) <= A
        assert not (S < S)
        assert S <= S


def test_perp_matches_naive(gf2):
    rng = random.Random(11)
    m = 5
    for _ in range(20):
        A = Subspace.from_rows(gf2, random_subspace_rows(gf2, m, 2, rng), ambient=m)
        P = A.perp()
        assert P.dim == m - A.dim
        naive = {
            v
            for v in bf.span_set([list(r) for r in np.eye(m, dtype=int)], 2, m)
            if all(
                sum(x * y for x, y in zip(v, row)) % 2 == 0 for row in A.to_rows()
            )
        }
        assert bf.span_set(P.to_rows(), 2, m) == naive
        assert P.perp() == A


def test_perp_extremes(gf3):
    assert Subspace.zero(gf3, 4).perp() == Subspace.full(gf3, 4)
    assert Subspace.full(gf3, 4).perp() == Subspace.zero(gf3, 4)


def test_vector_enumeration(gf3):
    A = Subspace.from_rows(gf3, [[1, 0, 2, 0], [0, 1, 1, 0]], ambient=4)
    vecs = [tuple(map(int, v)) for v in A.vectors()]
    assert len(vecs) == 9
    assert len(set(vecs)) == 9
    assert vecs[0] == (0, 0, 0, 0)
    assert all(A.contains_vector(v) for v in vecs)
    nz = list(A.vectors(nonzero=True))
    assert len(nz) == 8
    span = bf.span_set(A.to_rows(), 3, 4)
    assert set(vecs) == set(span)
    with pytest.raises(ValueError):
        A.vector_at(9)


def test_subspace_identity(gf2, gf3):
    A = Subspace.from_rows(gf2, [[1, 0, 1], [0, 1, 1]], ambient=3)
    B = Subspace.from_rows(gf2, [[0, 1, 1], [1, 1, 0]], ambient=3)
    assert A == B
    assert hash(A) == hash(B)
    C = Subspace.from_rows(gf2, [[1, 0, 1]], ambient=3)
    assert A != C
    assert len({A, B, C}) == 2
    with pytest.raises(ValueError):
        A._check_ambient(Subspace.zero(gf3, 3))
    with pytest.raises(ValueError):
        A._check_ambient(Subspace.zero(gf2, 4))


def test_subspace_validation_and_immutability(gf2):
    with pytest.raises(ValueError):
        Subspace(gf2, [[0, 1], [1, 0]])  # pivots out of order
    with pytest.raises(ValueError):
        Subspace(gf2, [[1, 1], [0, 1]])  # pivot column not cleared
    with pytest.raises(ValueError):
        Subspace(gf2, [[0, 0, 0]])  # zero row
    A = Subspace.from_rows(gf2, [[1, 0, 1]], ambient=3)
    with pytest.raises(AttributeError):
        A.m = 7
    with pytest.raises(ValueError):
        A.basis[0, 0] = 0


def test_reduce_residual(gf3):
    A = Subspace.from_rows(gf3, [[1, 0, 2], [0, 1, 1]], ambient=3)
    res = A.reduce([2, 2, 1])
    # residual has zeros on pivot coordinates
    assert int(res[0]) == 0 and int(res[1]) == 0
    assert A.contains_vector([2, 2, 0]) == (not np.any(A.reduce([2, 2, 0])))
