import math
import random

import pytest
from hypothesis import given, strategies as st

from wreath_hecke.cyclotomic import (CycloAlgebra, CycloWeight, ZeroScalar,
                                     corollary_subalgebra_check, cyclo_vs_group_algebra,
                                     lambda_bracket)
from wreath_hecke.groups import build_group, cyclic
from wreath_hecke.hecke import random_element
from wreath_hecke.scalars import FieldSpec


def test_weight_json():
    lam = CycloWeight.from_json(3, {"lambda": {"0": 1, "2": 1}})
    assert lam.d == 2 and lam[2] == 1 and lam[1] == 0
    assert CycloWeight.from_json(3, lam.to_json()) == lam
    with pytest.raises(ValueError):
        CycloWeight.from_map(3, {0: -1})


def test_lambda_bracket():
    L0 = CycloWeight.fundamental(3, 0)
    assert lambda_bracket(L0, 0, [2, 2]) == L0
    assert lambda_bracket(CycloWeight.fundamental(3, 1), 0, [2]) == CycloWeight.fundamental(3, 2)
    lam = CycloWeight.from_map(5, {1: 1, 3: 2})
    assert lambda_bracket(lam, 0, [1]) == lam
    with pytest.raises(ZeroScalar):
        lambda_bracket(L0, 0, [0])


def test_lambda0_kills_x1_and_x_k_become_group_algebra_elements():
    G = cyclic(2)
    A = CycloAlgebra(G, 3, CycloWeight.fundamental(3, 0), FieldSpec(3))
    assert A.reduce(A.H.x(1)).is_zero()
    for k in (2, 3):
        red = A.reduce(A.H.x(k))
        assert all(sum(key[0]) == 0 for key in red.terms)


def test_quadratic_reduction():
    A = CycloAlgebra(cyclic(1), 1, CycloWeight.from_map(3, {0: 1, 1: 1}), FieldSpec(3))
    x = A.H.x(1)
    assert A.reduce(x * x) == x


def test_bounded_element_is_fixed():
    A = CycloAlgebra(cyclic(2), 2, CycloWeight.from_map(3, {0: 1, 1: 1}), FieldSpec(3))
    a = A.H.monomial((1, 1), (1, 0), (1, 0)) + A.H.s(1)
    assert A.reduce(a) == a


@given(st.integers(0, 10 ** 6))
def test_reduction_is_multiplicative(seed):
    A = CycloAlgebra(cyclic(2), 2, CycloWeight.from_map(3, {0: 1, 2: 1}), FieldSpec(3),
                     check=False)
    rng = random.Random(seed)
    a, b = random_element(A.H, rng, 2, 3), random_element(A.H, rng, 2, 3)
    assert A.reduce(a * b) == A.reduce(A.reduce(a) * A.reduce(b))


@pytest.mark.parametrize("spec, n, lam, dim", [
    ("cyclic:2", 2, {0: 1}, 8), ("cyclic:2", 2, {0: 1, 1: 1}, 32),
    ("trivial", 3, {0: 1}, 6), ("trivial", 2, {0: 2}, 8), ("symmetric:3", 2, {1: 1}, 72)])
def test_dimensions(spec, n, lam, dim):
    G = build_group(spec)
    A = CycloAlgebra(G, n, CycloWeight.from_map(3, lam), FieldSpec(3))
    assert A.dim == dim == A.expected_dim()
    assert all(c["pass"] for c in A.module_checks())


def test_trivial_group_lambda0_has_factorial_dimension():
    for n in range(1, 4):
        A = CycloAlgebra(cyclic(1), n, CycloWeight.fundamental(2, 0), FieldSpec(2))
        assert A.dim == math.factorial(n)


@pytest.mark.parametrize("spec, n, p", [("trivial", 3, 2), ("cyclic:2", 2, 3),
                                        ("symmetric:3", 2, 2)])
def test_lambda0_is_the_group_algebra(spec, n, p):
    assert cyclo_vs_group_algebra(build_group(spec), n, FieldSpec(p))["pass"]


def test_subalgebra_dimension():
    A = CycloAlgebra(cyclic(2), 2, CycloWeight.from_map(3, {0: 1, 1: 1}), FieldSpec(3))
    assert corollary_subalgebra_check(A)["pass"]
