import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from wreath_hecke import linalg
from wreath_hecke.cyclotomic import CycloAlgebra, CycloWeight
from wreath_hecke.groups import build_group, cyclic, irreps, splitting_field
from wreath_hecke.repmod import (IncompleteSimpleList, MatrixModule, MoritaData, NotPRegular,
                                 adjunction_check, all_simples, branch_verify, compositions,
                                 composition_factors, coset_reps, cyclo_regular_module,
                                 e_dimension_audit, e_functor, eigen_block_decompose,
                                 endomorphism_dim, functor_F, functor_G, hom, is_isomorphic,
                                 isotypic_decompose, meataxe_cross_check, morita_round_trip,
                                 multipartitions, projections, random_affine_module,
                                 regular_module, simple_lists, simple_wreath_module, socle,
                                 specht_simple)
from wreath_hecke.scalars import FieldSpec
from wreath_hecke.wreath import SizeMismatch


@pytest.fixture(scope="module")
def c2p3():
    G = cyclic(2)
    return G, FieldSpec(3), irreps(G, FieldSpec(3))


def test_specht_dimensions():
    assert specht_simple((3,), 2).dim == 1
    assert specht_simple((2, 1), 2).dim == 2
    assert specht_simple((2, 1), 3).dim == 1
    assert specht_simple((2, 1), 5).dim == 2
    with pytest.raises(NotPRegular):
        specht_simple((1, 1), 2)


@pytest.mark.parametrize("mu, p", [((2, 1), 3), ((3, 1), 3), ((4, 1), 2), ((3, 2), 2),
                                   ((2, 1, 1), 3)])
def test_specht_quotients_are_simple_modules(mu, p):
    D = specht_simple(mu, p)
    D = MatrixModule("FSm", D.field, D.dim, D.gens, D.n)
    assert all(c["pass"] for c in D.check_relations())
    assert composition_factors(D)[0].dim == D.dim


def test_simple_wreath_module_shapes(c2p3):
    G, F, irr = c2p3
    M = simple_wreath_module(G, (1, 1), ((1,), (1,)), F, irr)
    assert M.dim == 2
    V = simple_wreath_module(G, (1, 0), ((1,), ()), F, irr)
    assert V.dim == 1 and np.array_equal(V.gens["g1:1"], irr[0].matrices[1])
    with pytest.raises(SizeMismatch):
        simple_wreath_module(G, (2, 0), ((1,), ()), F, irr)


def test_semisimple_sum_of_squares():
    G = cyclic(2)
    F = FieldSpec(5)
    Ms = all_simples(G, 2, F, irreps(G, F), 5)
    assert sum(M.dim ** 2 for M in Ms) == 8
    for i, A in enumerate(Ms):
        assert all(c["pass"] for c in A.check_relations())
        for j, B in enumerate(Ms):
            assert len(hom(A, B)) == (1 if i == j else 0)


def test_regular_module_isotypic_components():
    G = cyclic(2)
    data = MoritaData(G, 2, FieldSpec(3))
    reg = regular_module(G, 2, data.field)
    dec = isotypic_decompose(reg, data)
    assert {k: v[1].shape[0] for k, v in dec.items()} == {(2, 0): 2, (1, 1): 4, (0, 2): 2}
    for comp, (I, Mc) in dec.items():
        assert Mc.shape[0] == len(coset_reps(comp)) * I.shape[0]
    P = projections(dec, data.field)
    F = data.field
    total = np.zeros((8, 8), dtype=np.int64)
    for a, Pa in P.items():
        assert np.array_equal(F.dot(Pa, Pa), Pa)
        for b, Pb in P.items():
            if a != b:
                assert not F.dot(Pa, Pb).any()
        total = F.vadd(total, Pa)
    assert np.array_equal(total, np.eye(8, dtype=np.int64))


def test_eigenvalues_of_xi3_on_d21():
    F = FieldSpec(5)
    D = specht_simple((2, 1), 5, F)
    M = MatrixModule("FGn", F, D.dim, dict(D.gens), 3, cyclic(1))
    blocks = eigen_block_decompose(M, "last")
    assert set(blocks) <= {1, 4}
    assert sum(B.shape[0] for B in blocks.values()) == 2
    one = MatrixModule("FGn", F, 1, {}, 1, cyclic(1))
    assert len(eigen_block_decompose(one, "all")) == 1


def test_functor_f_multiplicity_dimension(c2p3):
    G, F, _ = c2p3
    data = MoritaData(G, 2, F)
    reg = regular_module(G, 2, F).with_jm()
    FM = functor_F(reg, data)
    dec = isotypic_decompose(reg, data)
    for comp, U in FM.items():
        assert U.dim == dec[comp][0].shape[0] // data.dimV(comp)
        assert all(c["pass"] for c in U.check_relations())


@given(st.sampled_from([3, 5]), st.integers(1, 2), st.integers(0, 10 ** 6))
def test_morita_round_trip_property(p, n, seed):
    data = MoritaData(cyclic(2), n, p=p)
    rng = random.Random(seed)
    fam = {comp: random_affine_module(comp, data.field, rng, dim=rng.choice([1, 2]),
                                      kind=rng.choice(["jordan", "upper"]))
           for comp in compositions(n, data.r)}
    GU = functor_G(fam, data)
    assert all(c["pass"] for c in GU.check_relations())
    assert all(c["pass"] for c in morita_round_trip(data, M=GU, family=fam))


def test_simple_goes_to_simple(c2p3):
    G, F, _ = c2p3
    data = MoritaData(G, 2, F)
    _, _, lists = simple_lists(G, 3, 2, F)
    for M in lists[2]:
        FM = functor_F(M.with_jm(), data)
        assert len(FM) == 1
        (U,) = FM.values()
        assert endomorphism_dim(U) == 1
        assert endomorphism_dim(functor_G(FM, data)) == 1


def test_isomorphism_detects_conjugate_modules():
    G = cyclic(2)
    F = FieldSpec(5)
    M = all_simples(G, 2, F, irreps(G, F), 5)[2]
    rng = np.random.default_rng(1)
    while True:
        T = rng.integers(0, 5, (M.dim, M.dim))
        if linalg.is_invertible(T, F):
            break
    Ti = linalg.inverse(T, F)
    N = MatrixModule(M.algebra, F, M.dim, {k: F.dot(T, F.dot(v, Ti)) for k, v in M.gens.items()},
                     M.n, G)
    assert is_isomorphic(M, N)
    other = all_simples(G, 2, F, irreps(G, F), 5)[0]
    assert not is_isomorphic(M, other)


def test_module_json_round_trip():
    G = cyclic(2)
    F = FieldSpec(3)
    M = simple_wreath_module(G, (1, 1), ((1,), (1,)), F)
    js = M.to_json()
    assert js["algebra"] == "FGn" and "s1" in js["generators"]
    back = MatrixModule.from_json(js, G)
    assert is_isomorphic(M, back)


def test_socle_n1_is_whole_module(c2p3):
    G, F, irr = c2p3
    field, irr, lists = simple_lists(G, 3, 1, F)
    for D in lists[1]:
        entries, soc = socle(D, lists[0], irr, [2, 2], field)
        assert soc.shape[0] == D.dim
        assert [e["a"] for e in entries] == [0]


def test_branching_multiplicity_free():
    r = branch_verify(cyclic(2), 3, 2)
    assert r.ok
    assert all(e["multiplicity"] in (0, 1) for e in r.entries)


def test_trivial_group_p2_n3_socle_of_d21():
    r = branch_verify(cyclic(1), 2, 3)
    edges = [e for e in r.entries if e["simple"] == ((2, 1),)]
    assert [(e["sub"], e["i"]) for e in edges] == [(((2,),), 1)]


def test_incomplete_simple_list_is_reported(monkeypatch):
    import wreath_hecke.repmod as rm
    monkeypatch.setattr(rm, "p_regular_type_count", lambda G, p, n: 99)
    with pytest.raises(IncompleteSimpleList):
        rm.simple_lists(cyclic(2), 3, 1)


def test_e_functor_zero_and_dimension_audit(c2p3):
    G, F, _ = c2p3
    d2 = MoritaData(G, 2, F)
    _, _, lists = simple_lists(G, 3, 2, F)
    for N in lists[2]:
        assert e_dimension_audit(N.with_jm(), d2)
    triv = lists[2][0].with_jm()
    assert e_functor(triv, 1, 1, d2).dim == 0


def test_adjunction_on_lambda0_simples(c2p3):
    G, F, _ = c2p3
    d1, d2 = MoritaData(G, 1, F), MoritaData(G, 2, F)
    _, _, lists = simple_lists(G, 3, 2, F)
    lam = CycloWeight.fundamental(3, 0)
    for M in lists[1]:
        for N in lists[2]:
            for i in range(3):
                for k in range(2):
                    assert adjunction_check(M.with_jm(), N.with_jm(), i, k, lam, d1, d2)["pass"]


def test_adjunction_on_level_two_regular_modules(c2p3):
    G, F, _ = c2p3
    d1, d2 = MoritaData(G, 1, F), MoritaData(G, 2, F)
    lam = CycloWeight.from_map(3, {0: 1, 1: 1})
    M = cyclo_regular_module(CycloAlgebra(G, 1, lam, F))
    N = cyclo_regular_module(CycloAlgebra(G, 2, lam, F))
    for i in range(3):
        for k in range(2):
            r = adjunction_check(M, N, i, k, lam, d1, d2)
            assert r["pass"], r


@pytest.mark.parametrize("spec, n, p", [("cyclic:2", 2, 3), ("trivial", 3, 2),
                                        ("cyclic:3", 2, 2), ("symmetric:3", 1, 5)])
def test_meataxe_agrees_with_constructed_simples(spec, n, p):
    assert meataxe_cross_check(build_group(spec), n, p)["pass"]


def test_multipartition_count_matches_class_count():
    from wreath_hecke.wreath import p_regular_type_count
    for spec, p in [("cyclic:2", 3), ("symmetric:3", 5), ("cyclic:3", 2)]:
        G = build_group(spec)
        for n in range(1, 5):
            assert len(multipartitions(n, len(G.classes), p)) == p_regular_type_count(G, p, n)
