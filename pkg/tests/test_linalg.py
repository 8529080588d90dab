import numpy as np
from hypothesis import given, strategies as st

from wreath_hecke import linalg
from wreath_hecke.scalars import FieldSpec

F5 = FieldSpec(5)


def matrices(rows, cols, q=5):
    return st.lists(st.lists(st.integers(0, q - 1), min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows).map(lambda m: np.array(m, dtype=np.int64))


@given(matrices(4, 5))
def test_rank_nullity(A):
    N = linalg.nullspace(A, F5)
    assert linalg.rank(A, F5) + N.shape[1] == 5
    assert not F5.dot(A, N).any()


@given(matrices(4, 4), matrices(4, 1))
def test_solve_returns_a_solution_when_consistent(A, x):
    b = F5.dot(A, x)[:, 0]
    y = linalg.solve(A, b, F5)
    assert y is not None
    assert np.array_equal(F5.dot(A, y[:, None])[:, 0], b)


@given(matrices(3, 3))
def test_inverse_round_trip(A):
    if linalg.is_invertible(A, F5):
        assert np.array_equal(F5.dot(A, linalg.inverse(A, F5)), np.eye(3, dtype=np.int64))


@given(matrices(2, 5), matrices(2, 5))
def test_intersection_lies_in_both(U, W):
    I = linalg.intersect(U, W, F5)
    for v in I:
        assert linalg.rank(np.vstack([U, v]), F5) == linalg.rank(U, F5)
        assert linalg.rank(np.vstack([W, v]), F5) == linalg.rank(W, F5)
    dim_sum = linalg.rank(np.vstack([U, W]), F5)
    assert I.shape[0] == linalg.rank(U, F5) + linalg.rank(W, F5) - dim_sum


@given(matrices(4, 4), matrices(1, 4))
def test_spin_is_invariant_and_minimal(M, v):
    S = linalg.spin(v, [M], F5)
    if S.shape[0]:
        A = linalg.restrict(M, S, F5)
        assert A.shape == (S.shape[0], S.shape[0])
    naive = [v[0]]
    for _ in range(4):
        naive.append(F5.dot(M, naive[-1][:, None])[:, 0])
    assert S.shape[0] == linalg.rank(np.array(naive), F5)


def test_generalized_kernel_of_jordan_block():
    J = np.array([[2, 1, 0], [0, 2, 1], [0, 0, 2]])
    assert linalg.generalized_kernel(J, 2, F5).shape[0] == 3
    assert linalg.eigenvalues(J, F5) == [2]


def test_quotient_dimension():
    M = np.array([[1, 1], [0, 1]])
    S = np.array([[1, 0]])
    Q = linalg.quotient(M, S, F5)
    assert Q.shape == (1, 1) and Q[0, 0] == 1


def test_kron_over_extension_field():
    F = FieldSpec(2, 2)
    A = np.array([[2, 1], [0, 3]])
    B = np.array([[3]])
    K = linalg.kron(A, B, F)
    assert K.tolist() == [[F.mul(2, 3), F.mul(1, 3)], [0, F.mul(3, 3)]]
