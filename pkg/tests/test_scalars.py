import numpy as np
import pytest
from hypothesis import given, strategies as st

from wreath_hecke.scalars import (FieldSpec, InversionOfZero, OrderDivisibleByP, embed_int,
                                  find_splitting_field)

FIELDS = [FieldSpec(2), FieldSpec(3), FieldSpec(5), FieldSpec(7), FieldSpec(2, 2), FieldSpec(3, 2)]


def test_embedding_of_integers():
    F = FieldSpec(5)
    assert embed_int(0, F).code == 0
    assert embed_int(5, F).code == 0
    assert embed_int(7, F).code == 2
    assert embed_int(-1, F).code == 4


def test_gf4_generator_squares_to_generator_plus_one():
    F = FieldSpec(2, 2)
    x = F.from_coeffs([0, 1])
    assert F.mul(x, x) == F.from_coeffs([1, 1])


def test_inverse_of_zero_raises():
    with pytest.raises(InversionOfZero):
        FieldSpec(3).inv(0)


@pytest.mark.parametrize("p, orders, m", [(3, {2}, 1), (2, {3}, 2), (5, {1}, 1), (2, {7}, 3)])
def test_splitting_field_degree(p, orders, m):
    assert find_splitting_field(p, orders).m == m


def test_splitting_field_rejects_order_divisible_by_p():
    with pytest.raises(OrderDivisibleByP):
        find_splitting_field(3, {6})


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_multiplicative_inverses(F):
    for a in range(1, F.q):
        assert F.mul(a, F.inv(a)) == 1
        assert F.add(a, F.neg(a)) == 0


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_field_axioms_exhaustive(F):
    els = list(F.elements())
    for a in els:
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
    for a in els[:5]:
        for b in els[:5]:
            for c in els[:5]:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


@given(st.sampled_from(FIELDS), st.data())
def test_vectorized_ops_match_scalar_ops(F, data):
    a = np.array(data.draw(st.lists(st.integers(0, F.q - 1), min_size=1, max_size=6)))
    b = np.array(data.draw(st.lists(st.integers(0, F.q - 1), min_size=len(a), max_size=len(a))))
    assert list(F.vadd(a, b)) == [F.add(int(x), int(y)) for x, y in zip(a, b)]
    assert list(F.vmul(a, b)) == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
    assert list(F.vsub(a, b)) == [F.sub(int(x), int(y)) for x, y in zip(a, b)]


@given(st.sampled_from(FIELDS), st.integers(0, 10 ** 6))
def test_frobenius_fixes_prime_subfield(F, k):
    a = F.embed(k)
    assert F.in_prime_field(a)
    assert F.pow(a, F.p) == a


def test_dot_agrees_with_python_sum():
    F = FieldSpec(2, 2)
    rng = np.random.default_rng(0)
    A = rng.integers(0, 4, (3, 4))
    B = rng.integers(0, 4, (4, 2))
    D = F.dot(A, B)
    for i in range(3):
        for j in range(2):
            acc = 0
            for k in range(4):
                acc = F.add(acc, F.mul(int(A[i, k]), int(B[k, j])))
            assert D[i, j] == acc
