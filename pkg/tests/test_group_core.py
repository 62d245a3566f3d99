"""Structural subgroup machinery on the regular action."""

import pytest

from mfdeg import group_core as gc
from mfdeg.presentation import enumerate_regular, parse_presentation

XSP27 = "gens a,b,c; rels [a,b]=c, [a,c], [b,c], a^3, b^3, c^3;"
MOD27 = "gens x,y; rels x^9, y^3, [y,x]=x^3;"
C3xC9 = "gens a,b; rels a^3, b^9, [a,b];"
SD16 = "gens r,s; rels r^8, s^2, s^-1*r*s=r^3;"


def _G(text):
    return enumerate_regular(parse_presentation(text))


def test_center_and_derived_extraspecial():
    G = _G(XSP27)
    Z = gc.center(G)
    D = gc.derived_subgroup(G)
    F = gc.frattini_subgroup(G, gc.whole_group(G))
    assert Z.order == D.order == F.order == 3
    assert Z == D == F  # extraspecial: all three coincide


def test_conjugacy_classes_partition():
    G = _G(MOD27)
    cls = gc.conjugacy_classes(G)
    assert sum(cls.sizes) == G.order
    assert cls.class_of[0] == 0 and cls.sizes[0] == 1
    # class equation: sizes divide |G|
    assert all(G.order % s == 0 for s in cls.sizes)
    # power map consistency: k-th power of a class rep lands in claimed class
    for c in range(cls.nclasses):
        rep = int(cls.reps[c])
        for k in (2, 3):
            assert cls.class_of[G.power(rep, k)] == cls.power_map(c, k)


def test_centralizer_and_class_sizes():
    G = _G(XSP27)
    cls = gc.conjugacy_classes(G)
    for c in range(cls.nclasses):
        rep = int(cls.reps[c])
        C = gc.centralizer(G, [rep])
        assert C.order * int(cls.sizes[c]) == G.order


def test_abelian_invariants():
    G = _G(C3xC9)
    inv = gc.abelian_invariants(G, gc.whole_group(G))
    assert tuple(sorted(inv.factors)) == (3, 9)
    assert inv.rank == 2


def test_exponent():
    assert gc.exponent(_G(XSP27)) == 3
    assert gc.exponent(_G(MOD27)) == 9
    assert gc.exponent(_G(SD16)) == 8


def test_maximal_subgroups_count():
    # number of maximal subgroups of a p-group is (p^d - 1)/(p - 1)
    G = _G(XSP27)
    top = gc.whole_group(G)
    maxs = gc.maximal_subgroups(G, top)
    d = gc.frattini_quotient_rank(G, top)
    assert d == 2
    assert len(maxs) == (3**d - 1) // 2
    for M in maxs:
        assert M.order == 9 and gc.is_normal(G, M)


def test_core_is_largest_normal_inside():
    G = _G(SD16)
    for H in gc.all_subgroups(G):
        C = gc.core(G, H)
        assert gc.is_normal(G, C)
        assert C.eset <= H.eset
        if gc.is_normal(G, H):
            assert C == H


def test_normal_closure_and_intersection():
    G = _G(MOD27)
    Z = gc.center(G)
    D = gc.derived_subgroup(G)
    assert gc.intersection(G, Z, D) == D  # D <= Z here
    N = gc.normal_closure(G, [int(next(iter(D.eset - {0})))])
    assert D.eset <= N.eset


def test_minimal_normal_subgroups():
    G = _G(C3xC9)
    mins = gc.minimal_normal_subgroups(G)
    # socle of C3 x C9 is C3 x C3: four subgroups of order 3
    assert len(mins) == 4
    assert all(N.order == 3 for N in mins)
    G2 = _G(XSP27)
    mins2 = gc.minimal_normal_subgroups(G2)
    assert len(mins2) == 1 and mins2[0] == gc.center(G2)


def test_all_subgroups_lattice_size():
    # C3 x C3: 1 + 4 + 1 subgroups
    G = _G("gens a,b; rels a^3, b^3, [a,b];")
    assert len(gc.all_subgroups(G)) == 6
    # semidihedral group of order 16: 15 subgroups (5 of order 2, 5 of order 4)
    subs = gc.all_subgroups(_G(SD16))
    assert len(subs) == 15
    assert sum(1 for H in subs if H.order == 2) == 5
    assert sum(1 for H in subs if H.order == 4) == 5


def test_max_abelian_normal():
    G = _G(XSP27)
    A = gc.max_abelian_normal(G)
    assert A.order == 9
    assert A.is_abelian() and gc.is_normal(G, A)


def test_nilpotency_class():
    assert gc.nilpotency_class(_G(C3xC9)) == 1
    assert gc.nilpotency_class(_G(XSP27)) == 2
    assert gc.nilpotency_class(_G(SD16)) == 3


def test_subgroup_closure_and_order():
    G = _G(MOD27)
    H = gc.subgroup_closure(G, [1])
    assert H.order == G.element_order(1)
    assert H.order * H.index == G.order
