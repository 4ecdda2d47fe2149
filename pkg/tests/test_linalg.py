import numpy as np
import pytest

from superpbw.linalg import (
    SparseMatrix,
    SubspaceBasis,
    det_mod,
    mat_pow_mod,
    matrix_from_columns,
    nullspace,
    rank,
    row_reduce_vector,
    rref,
    subspace_equal,
    supertrace,
)


def test_sparse_matrix_roundtrip():
    m = SparseMatrix(2, 3, 5)
    m[0, 1] = 7
    m[1, 2] = -1
    assert m[0, 1] == 2
    assert m[1, 2] == 4
    assert m[0, 0] == 0
    dense = m.to_dense()
    assert dense.shape == (2, 3)
    assert SparseMatrix.from_dense(dense, 5) == m
    assert m.transpose().to_dense().tolist() == dense.T.tolist()


def test_supertrace():
    eye = SparseMatrix.from_dense(np.eye(2, dtype=np.int64), 5)
    assert supertrace(eye, [0, 0]) == 2
    assert supertrace(eye, [0, 1]) == 0
    assert supertrace(SparseMatrix.from_dense(np.diag([2, 3]), 5), [0, 1]) == (2 - 3) % 5
    with pytest.raises(TypeError):
        supertrace(np.eye(2), [0, 0])


def test_rref_known_matrix():
    r, pivots = rref(np.array([[0, 2, 1], [1, 1, 0], [1, 3, 1]]), 3)
    assert pivots == [0, 1]
    assert r.tolist() == [[1, 0, 1], [0, 1, 2]]
    # every pivot column is a standard basis vector
    for i, c in enumerate(pivots):
        col = r[:, c]
        assert col[i] == 1 and np.count_nonzero(col) == 1


def test_row_reduce_vector():
    rows, pivots = rref(np.array([[1, 0, 1], [0, 1, 2]]), 3)
    assert not row_reduce_vector([1, 1, 0], rows, pivots, 3).any()
    rem = row_reduce_vector([0, 0, 1], rows, pivots, 3)
    assert rem.tolist() == [0, 0, 1]


def test_nullspace_frozen():
    # hand check over F_3: (1, 2) since 1 + 2*1 = 3 = 0
    ns = nullspace(np.array([[1, 1], [2, 2]]), 3)
    assert ns.dim == 1
    assert ns.vectors == ((1, 2),)
    assert ns.contains([1, 2])
    assert ns.contains([2, 1])  # scalar multiple
    assert not ns.contains([1, 0])


def test_rank_drops_and_nullity():
    rng = np.random.default_rng(0)
    for p in (3, 5):
        for _ in range(25):
            a = rng.integers(0, p, size=(4, 6))
            r = rank(a, p)
            assert r + nullspace(a, p).dim == 6
            # kernel vectors really do vanish
            for v in nullspace(a, p).vectors:
                assert not (a @ np.array(v) % p).any()


def test_subspace_basis_equality():
    a = SubspaceBasis.from_vectors([[1, 1, 0], [0, 0, 1]], 3, 3)
    b = SubspaceBasis.from_vectors([[2, 2, 1], [0, 0, 2]], 3, 3)
    assert a.dim == 2
    assert subspace_equal(a, b)
    assert a == b
    c = SubspaceBasis.from_vectors([[1, 0, 0]], 3, 3)
    assert not subspace_equal(a, c)


def test_matrix_from_columns():
    # columns are sparse dicts over arbitrary labels; rows come out sorted
    m, labels = matrix_from_columns([{"x": 1, "y": 2}, {"y": 4}], 3)
    assert labels == ["x", "y"]
    assert m.tolist() == [[1, 0], [2, 1]]


def test_mat_pow_mod():
    a = np.array([[1, 1], [0, 1]])
    assert mat_pow_mod(a, 5, 3).tolist() == [[1, 2], [0, 1]]
    assert mat_pow_mod(a, 0, 3).tolist() == [[1, 0], [0, 1]]


def test_det_mod():
    assert det_mod(np.array([[1, 2], [3, 4]]), 5) == (4 - 6) % 5
    assert det_mod(np.array([[1, 1], [2, 2]]), 3) == 0
    rng = np.random.default_rng(1)
    for _ in range(20):
        a = rng.integers(0, 3, size=(3, 3))
        assert det_mod(a, 3) == round(np.linalg.det(a)) % 3
