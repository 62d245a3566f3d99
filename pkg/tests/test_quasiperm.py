"""Galois orbit sums and the minimal faithful quasi-permutation degree."""

import pytest

from mfdeg.chartab import character_table
from mfdeg.presentation import enumerate_regular, parse_presentation
from mfdeg.quasiperm import base_p_digits, galois_orbits, solve_c

XSP27 = "gens a,b,c; rels [a,b]=c, [a,c], [b,c], a^3, b^3, c^3;"
C3xC9 = "gens a,b; rels a^3, b^9, [a,b];"
SD16 = "gens r,s; rels r^8, s^2, s^-1*r*s=r^3;"


def _table(text):
    return character_table(enumerate_regular(parse_presentation(text)))


def test_base_p_digits():
    assert base_p_digits(0, 3) == []
    assert base_p_digits(12, 3) == [0, 1, 1]
    assert base_p_digits(625, 5) == [0, 0, 0, 0, 1]
    assert sum(base_p_digits(50, 5)) == 2


def test_orbit_sums_partition_characters():
    t = _table(XSP27)
    sums = galois_orbits(t)
    members = [i for s in sums for i in s.members]
    assert sorted(members) == list(range(t.nchars))
    for s in sums:
        assert s.degree == s.orbit_size * s.member_degree
        assert all(isinstance(v, int) for v in s.values)
        assert s.values[0] == s.degree  # value at the identity class


def test_orbit_structure_extraspecial():
    t = _table(XSP27)
    sums = galois_orbits(t)
    # trivial orbit, 4 orbits of linear pairs, 1 orbit of the two deg-3 chars
    sizes = sorted((s.orbit_size, s.member_degree) for s in sums)
    assert sizes == [(1, 1), (2, 1), (2, 1), (2, 1), (2, 1), (2, 3)]


def test_kernel_mask_trivial_orbit():
    t = _table(C3xC9)
    sums = galois_orbits(t)
    full = (1 << t.nclasses) - 1
    trivial = [s for s in sums if s.degree == 1]
    assert len(trivial) == 1 and trivial[0].kernel_mask == full


def test_solve_c_extraspecial():
    s = solve_c(_table(XSP27))
    assert s.value == 9
    assert s.orbit_count == 1 and s.m * 2 == s.xi_degree
    assert min(s.xi_values) == -s.m  # m is tight


def test_solve_c_abelian():
    s = solve_c(_table(C3xC9))
    assert s.value == 12  # 3 + 9
    assert s.orbit_count == 2


def test_solve_c_sd16():
    s = solve_c(_table(SD16))
    assert s.value == 8


def test_exhaustive_agrees_with_fast():
    for text in (XSP27, C3xC9, SD16):
        t = _table(text)
        assert solve_c(t).value == solve_c(t, exhaustive=True).value


def test_witness_is_faithful_and_quasi_permutation():
    t = _table(C3xC9)
    s = solve_c(t)
    # faithful: only the identity class evaluates to xi(1)
    joint = 0
    for orb in s.sums:
        joint |= ~orb.kernel_mask
    assert joint & ((1 << t.nclasses) - 1) == (1 << t.nclasses) - 2
    # quasi-permutation after adding m copies of the trivial character
    assert all(v + s.m >= 0 for v in s.xi_values)
    assert s.value == s.xi_degree + s.m


def test_trivial_group_c_is_one():
    s = solve_c(_table("gens a; rels a;"))
    assert s.value == 1
