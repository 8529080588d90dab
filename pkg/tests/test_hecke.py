import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from wreath_hecke.groups import build_group, cyclic, symmetric
from wreath_hecke.hecke import (HeckeAlgebra, Mismatch, PolyModule, c_scalars,
                                center_coeff_check, divided_difference, elementary_symmetric,
                                is_central, pbw_extract, random_element, relation_suite,
                                tensor_t_action_check, triangularity_holds, verify_intertwiners)
from wreath_hecke.groups import irreps, splitting_field
from wreath_hecke.scalars import FieldSpec


def algebra(spec="cyclic:2", n=2, p=3):
    return HeckeAlgebra(build_group(spec), n, FieldSpec(p))


def test_t12_trivial_group_is_one():
    H = algebra("trivial")
    assert H.t(1, 2) == H.one()


def test_t12_c2_has_two_terms():
    assert len(algebra("cyclic:2").t(1, 2).terms) == 2


def test_basic_products():
    H = algebra("cyclic:2")
    x1, x2, s1, t = H.x(1), H.x(2), H.s(1), H.t(1, 2)
    assert s1 * x1 == x2 * s1 - t
    assert s1 * s1 == H.one()
    assert s1 * x2 == x1 * s1 + t


def test_omega_is_normalized():
    H = algebra("cyclic:2")
    O = H.omega(1)
    expected = H.s(1) * H.x(1) - H.s(1) * H.x(2) + H.t(1, 2)
    assert O == expected
    assert all(key[2] in (H.id_perm, (1, 0)) for key in O.terms)


def test_intertwiner_square_trivial_group():
    H = algebra("trivial")
    dx = H.x(1) - H.x(2)
    assert H.omega(1) * H.omega(1) == H.one() - dx * dx


@pytest.mark.parametrize("spec, n", [("cyclic:2", 2), ("trivial", 3), ("symmetric:3", 3)])
def test_intertwiner_identities(spec, n):
    assert verify_intertwiners(algebra(spec, n, 5))["pass"]


def test_divided_differences():
    H = algebra("trivial", 2, 5)
    assert divided_difference(H, (1, 1), 1) == H.zero()
    assert divided_difference(H, (1, 0), 1) == H.scalar(-1)
    assert divided_difference(H, (0, 2), 1) == H.x(1) + H.x(2)


def test_polynomial_module_generators():
    H = algebra("cyclic:2", 2, 3)
    M = PolyModule(H)
    v = M.basis_vector(h=(1, 0), beta=(1, 2))
    assert M.equal(M.act(H.x(1), v), M.basis_vector(h=(1, 0), beta=(2, 2)))
    w = M.basis_vector(h=(1, 0))
    assert M.equal(M.act(H.s(1), w), M.basis_vector(h=(0, 1)))


def test_polynomial_module_relation_on_random_vectors():
    H = algebra("cyclic:2", 2, 3)
    M = PolyModule(H)
    rng = random.Random(2)
    lhs_op = H.s(1) * H.x(1)
    rhs_op = H.x(2) * H.s(1) - H.t(1, 2)
    for _ in range(10):
        v = M.basis_vector(h=(rng.randrange(2), rng.randrange(2)),
                           beta=(rng.randrange(3), rng.randrange(3)))
        assert M.equal(M.act(H.s(1), M.act(H.x(1), v)), M.act(rhs_op, v))
        assert M.equal(M.act(lhs_op, v), M.act(rhs_op, v))


def test_pbw_extract_round_trips():
    H = algebra("symmetric:3", 2, 5)
    M = PolyModule(H)
    assert pbw_extract(lambda v: v, H, 0, M) == H.one()
    key = H.monomial((1, 0), (2, 0), (1, 0))
    assert pbw_extract(lambda v: M.act(key, v), H, 1, M) == key


@given(st.sampled_from(["trivial", "cyclic:2", "cyclic:3", "symmetric:3"]), st.integers(1, 3),
       st.sampled_from([2, 3, 5]), st.integers(0, 10 ** 6))
def test_pbw_oracle_property(spec, n, p, seed):
    H = algebra(spec, n, p)
    M = PolyModule(H)
    rng = random.Random(seed)
    a, b = random_element(H, rng, 2, 2), random_element(H, rng, 2, 2)
    got = pbw_extract(lambda v: M.act(a, M.act(b, v)), H, a.degree() + b.degree(), M)
    assert got == a * b


@given(st.sampled_from(["cyclic:2", "symmetric:3"]), st.integers(1, 3), st.integers(0, 10 ** 6))
def test_ring_axioms(spec, n, seed):
    H = algebra(spec, n, 5)
    rng = random.Random(seed)
    a, b, c = (random_element(H, rng, 2, 1) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert H.anti_involution(a * b) == H.anti_involution(b) * H.anti_involution(a)


@given(st.integers(0, 10 ** 6))
def test_json_round_trip(seed):
    H = algebra("symmetric:3", 2, 5)
    a = random_element(H, random.Random(seed), 3, 2)
    assert H.from_json(a.to_json()) == a


def test_json_rejects_wrong_length():
    H = algebra("cyclic:2", 2, 3)
    with pytest.raises(Mismatch):
        H.from_json([{"alpha": [0], "g": [0, 0], "w": [1, 2], "coeff": 1}])


@pytest.mark.parametrize("spec, n, p", [("trivial", 3, 2), ("cyclic:2", 3, 3),
                                        ("symmetric:3", 2, 2), ("cyclic:3", 3, 5)])
def test_relation_suite(spec, n, p):
    r = relation_suite(algebra(spec, n, p))
    assert r["pass"], [c for c in r["checks"] if not c["pass"]]


def test_triangularity():
    H = algebra("cyclic:2", 3, 3)
    for w in [(1, 0, 2), (2, 1, 0), (1, 2, 0)]:
        assert triangularity_holds(H, w, (1, 0, 1), (2, 0, 1))


def test_c_scalar_values():
    assert [c["c"] for c in c_scalars(cyclic(1), FieldSpec(3))] == [1]
    assert sorted(c["c"] for c in c_scalars(cyclic(2), FieldSpec(3))) == [2, 2]
    assert sorted(c["c"] for c in c_scalars(symmetric(3), FieldSpec(5))) == [1, 1, 3]


@pytest.mark.parametrize("spec, p", [("cyclic:2", 3), ("cyclic:3", 2), ("symmetric:3", 7)])
def test_c_times_dim_is_group_order(spec, p):
    G = build_group(spec)
    F = splitting_field(G, p)
    for c in c_scalars(G, F):
        assert F.mul(F.embed(c["dim"]), c["c"]) == F.embed(G.order)
    irr = irreps(G, F)
    for labels in ([0, 0], [0, len(irr) - 1], [len(irr) - 1, len(irr) - 1, 0]):
        assert all(ch["pass"] for ch in tensor_t_action_check(G, F, irr, labels))


def test_center_examples():
    H = algebra("symmetric:3", 2, 5)
    e1 = elementary_symmetric(H, 1)
    assert is_central(e1) and center_coeff_check(e1)
    assert not is_central(H.x(1)) and not center_coeff_check(H.x(1))
    H3 = algebra("cyclic:2", 3, 3)
    e2 = elementary_symmetric(H3, 2)
    assert is_central(e2) and center_coeff_check(e2)
