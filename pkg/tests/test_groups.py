import numpy as np
import pytest

from wreath_hecke.groups import (InvalidTable, build_group, cyclic, hom_space, irreps,
                                 p_regular_classes, splitting_field, symmetric, table_group)
from wreath_hecke.scalars import FieldSpec


def test_cyclic_one_is_trivial():
    G = cyclic(1)
    assert G.order == 1 and len(G.classes) == 1


def test_symmetric_three_classes():
    G = symmetric(3)
    assert G.order == 6 and len(G.classes) == 3


def test_non_associative_table_rejected():
    # identity 0, Latin square on {0,1,2} that is not a group
    with pytest.raises(InvalidTable):
        table_group([[0, 1, 2], [1, 2, 0], [2, 1, 0]])


def test_shorthand_specs():
    assert build_group("cyclic:4").order == 4
    assert build_group("dihedral:3").order == 6
    assert build_group({"kind": "symmetric", "m": 3}).order == 6


@pytest.mark.parametrize("spec, p, count", [
    ("trivial", 2, 1), ("trivial", 5, 1), ("cyclic:4", 2, 1), ("symmetric:3", 3, 2),
    ("symmetric:3", 2, 2), ("symmetric:3", 5, 3)])
def test_p_regular_classes(spec, p, count):
    assert len(p_regular_classes(build_group(spec), p)) == count


def test_c2_characters_mod_3():
    G = cyclic(2)
    chars = sorted(ir.character for ir in irreps(G, FieldSpec(3)))
    assert chars == [(1, 1), (1, 2)]


def test_s3_irreps_mod_5():
    G = symmetric(3)
    dims = sorted(ir.dim for ir in irreps(G, FieldSpec(5)))
    assert dims == [1, 1, 2] and sum(d * d for d in dims) == 6


def test_trivial_group_irreps():
    (ir,) = irreps(cyclic(1), FieldSpec(7))
    assert ir.dim == 1


@pytest.mark.parametrize("spec, p", [("cyclic:3", 2), ("cyclic:4", 3), ("symmetric:3", 5),
                                     ("dihedral:4", 3), ("cyclic:6", 5)])
def test_irreps_are_pairwise_distinct_simple_representations(spec, p):
    G = build_group(spec)
    F = splitting_field(G, p)
    irr = irreps(G, F)
    assert sum(ir.dim ** 2 for ir in irr) == G.order
    assert len(irr) == len(G.classes)
    for ir in irr:
        for a in range(G.order):
            for b in range(G.order):
                assert np.array_equal(F.dot(ir.matrices[a], ir.matrices[b]),
                                      ir.matrices[G.mul(a, b)])
    gens = G.generators
    for i, A in enumerate(irr):
        for j, B in enumerate(irr):
            h = hom_space([A.matrices[g] for g in gens], [B.matrices[g] for g in gens], F)
            assert len(h) == (1 if i == j else 0)
