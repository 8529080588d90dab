import pytest
from hypothesis import given, strategies as st

from wreath_hecke import crystal as C
from wreath_hecke.cyclotomic import CycloWeight, ZeroScalar
from wreath_hecke.groups import build_group
from wreath_hecke.groups import cyclic
from wreath_hecke.repmod import MatrixModule, specht_simple, standard_tableaux
from wreath_hecke.scalars import FieldSpec
from wreath_hecke import linalg


def count_regular(p, n):
    """Independent brute force: partitions of n with no part repeated p or more times."""
    def parts(m, top):
        if m == 0:
            yield ()
            return
        for k in range(min(m, top), 0, -1):
            for rest in parts(m - k, k):
                yield (k,) + rest
    return sum(1 for mu in parts(n, n) if all(mu.count(v) < p for v in set(mu)))


def test_residues():
    assert C.residue(1, 1, 0, 3) == 0
    assert C.residue(1, 2, 0, 2) == 1
    assert C.residue(2, 1, 1, 3) == 0


def test_first_step():
    B = C.PartitionCrystal(2)
    assert B.f((), 0) == (1,)
    assert B.f((), 1) is None
    assert all(B.e((), i) is None for i in range(2))


def test_depth_five_for_p2():
    layers, _ = C.component(C.PartitionCrystal(2), 5)
    assert sorted(layers[5]) == [(3, 2), (4, 1), (5,)]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_series_matches_brute_force(p):
    assert C.p_regular_series(p, 12) == [count_regular(p, n) for n in range(13)]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_counts_and_axioms(p):
    assert C.count_check(p, 10)["pass"]
    assert C.axiom_checks(C.PartitionCrystal(p), 8)["pass"]
    assert C.axiom_checks(C.FlatTensor(p, [0, 1 % p, 0]), 4)["pass"]


@given(st.sampled_from([2, 3, 5]),
       st.lists(st.integers(0, 4), min_size=3, max_size=3))
def test_tensor_associativity(p, shifts):
    assert C.associativity_check(p, [s % p for s in shifts], 4)["pass"]


def test_mirrored_reading_breaks_regularity():
    B = C.PartitionCrystal(2, reading="bottom_up")
    layers, _ = C.component(B, 4)
    assert not all(C.is_p_regular(mu, 2) for layer in layers for mu in layer)


def test_build_crystal_counts():
    g = C.build_crystal(CycloWeight.fundamental(2, 0), [1], 3)
    assert g.counts() == [1, 1, 1, 2]
    g = C.build_crystal(CycloWeight.fundamental(3, 0), [2, 2], 4)
    expect = [sum(count_regular(3, a) * count_regular(3, n - a) for a in range(n + 1))
              for n in range(5)]
    assert g.counts() == expect


def test_highest_node_has_no_incoming_edges():
    g = C.build_crystal(CycloWeight.from_map(3, {0: 1, 2: 1}), [1, 2], 3)
    root = g.layers[0][0]
    assert all(b != root for _, b, _, _ in g.edges)
    assert g.counts()[1] == 4


def test_zero_scalar_rejected():
    with pytest.raises(ZeroScalar):
        C.build_crystal(CycloWeight.fundamental(3, 0), [0], 2)


def test_dot_and_json():
    g = C.build_crystal(CycloWeight.fundamental(2, 0), [1], 0)
    assert g.to_dot().count("->") == 0 and "n0" in g.to_dot()
    g = C.build_crystal(CycloWeight.fundamental(3, 0), [2, 2], 2)
    js = g.to_json()
    assert len(js["nodes"]) == sum(g.counts())
    assert {e["k"] for e in js["edges"]} == {0, 1}
    assert all('label="' in line for line in g.to_dot().splitlines()[1:-1])


def test_jm_eigenvalue_is_residue_of_last_cell():
    """For p = 5 and n = 3 the Specht modules are simple; the spectrum of the last
    Jucys-Murphy element is the set of residues of removable cells."""
    F = FieldSpec(5)
    for mu in [(3,), (2, 1), (1, 1, 1)]:
        D = specht_simple(mu, 5, F)
        M = MatrixModule("FGn", F, D.dim, dict(D.gens), 3, cyclic(1))
        eig = set(linalg.eigenvalues(M.jm_matrix(3), F))
        expected = {C.residue(r, c, 0, 5) for r, c in C.removable_cells(mu)}
        assert eig == expected
        assert len(standard_tableaux(mu)) == D.dim


@pytest.mark.parametrize("spec, p, n", [("cyclic:2", 3, 3), ("trivial", 2, 4),
                                        ("trivial", 3, 4), ("cyclic:3", 2, 3)])
def test_crystal_equals_branching(spec, p, n):
    r = C.crystal_vs_branching(build_group(spec), p, n)
    assert r["pass"], r
    assert r["nodes"][1] == len(build_group(spec).classes)
