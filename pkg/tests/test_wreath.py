import itertools
import random

import pytest
from hypothesis import given, strategies as st

from wreath_hecke.groups import build_group, cyclic
from wreath_hecke.scalars import FieldSpec
from wreath_hecke.wreath import (WreathElement, brute_force_p_regular_count, class_count_series,
                                 conjugacy_classes, elements, ga_element, ga_slot, ga_s,
                                 jucys_murphy, p_regular_type_count, perm_inv, perm_mul,
                                 reduced_word, simple_reflection, twist, type_of,
                                 verify_jm_identities, wreath_inv, wreath_mul)


def perm_model(G, a):
    """G_n acting on G x {0..n-1} by (g, w).(h, i) = (g_{w(i)} h, w(i))."""
    n = len(a.w)
    return {(h, i): (G.mul(a.g[a.w[i]], h), a.w[i]) for h in range(G.order) for i in range(n)}


def compose(f, g):
    return {k: f[g[k]] for k in g}


def rand_elem(G, n, rng):
    w = list(range(n))
    rng.shuffle(w)
    return WreathElement(tuple(rng.randrange(G.order) for _ in range(n)), tuple(w))


@pytest.mark.parametrize("spec", ["cyclic:2", "cyclic:3", "symmetric:3"])
def test_product_matches_permutation_model(spec):
    G = build_group(spec)
    rng = random.Random(3)
    for n in (1, 2, 3):
        for _ in range(30):
            a, b = rand_elem(G, n, rng), rand_elem(G, n, rng)
            assert perm_model(G, wreath_mul(G, a, b)) == compose(perm_model(G, a), perm_model(G, b))


def test_c2_example_product():
    G = cyclic(2)
    a = WreathElement((1, 0), (1, 0))
    b = WreathElement((0, 1), (1, 0))
    ab = wreath_mul(G, a, b)
    assert perm_model(G, ab) == compose(perm_model(G, a), perm_model(G, b))
    assert ab == WreathElement((0, 0), (0, 1))


@given(st.permutations(range(4)), st.permutations(range(4)))
def test_permutation_group_laws(u, w):
    u, w = tuple(u), tuple(w)
    assert perm_mul(perm_mul(u, w), perm_inv(w)) == u
    word = reduced_word(w)
    x = tuple(range(4))
    for i in word:
        x = perm_mul(x, simple_reflection(4, i))
    assert x == w


@given(st.permutations(range(3)), st.permutations(range(3)), st.lists(st.integers(0, 5),
                                                                       min_size=3, max_size=3))
def test_twist_is_an_action(u, w, g):
    u, w, g = tuple(u), tuple(w), tuple(g)
    assert twist(perm_mul(u, w), g) == twist(u, twist(w, g))


def test_identity_and_inverse():
    G = build_group("symmetric:3")
    rng = random.Random(0)
    for _ in range(20):
        a = rand_elem(G, 3, rng)
        e = WreathElement((0, 0, 0), (0, 1, 2))
        assert wreath_mul(G, a, e) == a
        assert wreath_mul(G, a, wreath_inv(G, a)) == e


def test_types():
    G = cyclic(2)
    assert type_of(G, WreathElement((0, 0), (0, 1))) == ((1, 1), ())
    assert type_of(G, WreathElement((1, 0), (1, 0))) == ((), (2,))


@pytest.mark.parametrize("spec, n", [("cyclic:2", 3), ("cyclic:3", 2), ("symmetric:3", 2),
                                     ("cyclic:2", 2), ("symmetric:3", 3)])
def test_conjugate_iff_same_type(spec, n):
    G = build_group(spec)
    classes = conjugacy_classes(G, n)
    types = [{type_of(G, a) for a in c} for c in classes]
    assert all(len(t) == 1 for t in types)
    assert len({next(iter(t)) for t in types}) == len(classes)


def test_c2_mod_2_series():
    G = cyclic(2)
    assert class_count_series(G, 2, 5) == [1, 1, 1, 2, 2, 3]
    assert [p_regular_type_count(G, 2, n) for n in range(6)] == [1, 1, 1, 2, 2, 3]
    assert [brute_force_p_regular_count(G, 2, n) for n in range(1, 5)] == [1, 1, 2, 2]


def test_s3_mod_5_counts_all_types():
    G = build_group("symmetric:3")
    for n in range(1, 4):
        assert p_regular_type_count(G, 5, n) == len(conjugacy_classes(G, n))


def test_jucys_murphy_basics():
    F = FieldSpec(3)
    G = cyclic(1)
    assert jucys_murphy(G, 3, 1, F).terms == {}
    xi3 = jucys_murphy(G, 3, 3, F)
    assert set(xi3.terms) == {WreathElement((0, 0, 0), (2, 1, 0)),
                              WreathElement((0, 0, 0), (0, 2, 1))}


def test_c2_xi2_is_central_in_fg2():
    F = FieldSpec(3)
    G = cyclic(2)
    xi2 = jucys_murphy(G, 2, 2, F)
    assert len(xi2.terms) == 2
    for a in elements(G, 2):
        x = ga_element(G, 2, F, a.g, a.w)
        assert x * xi2 == xi2 * x


@pytest.mark.parametrize("spec, n, p", [("trivial", 3, 2), ("cyclic:2", 2, 3),
                                        ("symmetric:3", 2, 2), ("cyclic:3", 4, 3)])
def test_jm_identities(spec, n, p):
    assert verify_jm_identities(build_group(spec), n, FieldSpec(p))["pass"]


def test_c2_n2_relation_reduces_to_xi2_s1_equals_t12():
    F = FieldSpec(3)
    G = cyclic(2)
    s = ga_s(G, 2, F, 1)
    xi2 = jucys_murphy(G, 2, 2, F)
    t = ga_slot(G, 2, F, 0, 1)
    t = t - t
    for h in range(2):
        t = t + ga_element(G, 2, F, (h, G.inverse[h]), (0, 1))
    assert xi2 * s == t
