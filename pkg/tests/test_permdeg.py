"""Minimal faithful permutation degree and realized coset actions."""

import pytest

from mfdeg._tc_core import BudgetExceeded
from mfdeg.chartab import character_table
from mfdeg.permdeg import cross_check_c_mu, mu_bruteforce, realize_permutation, solve_mu
from mfdeg.presentation import enumerate_regular, parse_presentation

XSP27 = "gens a,b,c; rels [a,b]=c, [a,c], [b,c], a^3, b^3, c^3;"
C3xC9 = "gens a,b; rels a^3, b^9, [a,b];"
SD16 = "gens r,s; rels r^8, s^2, s^-1*r*s=r^3;"
Q8 = "gens i,j; rels i^4, i^2=j^2, j^-1*i*j=i^3;"


def _G(text):
    return enumerate_regular(parse_presentation(text))


def test_mu_known_values():
    assert solve_mu(_G(XSP27)).value == 9
    assert solve_mu(_G(C3xC9)).value == 12
    assert solve_mu(_G(SD16)).value == 8
    assert solve_mu(_G(Q8)).value == 8  # Q8 needs the regular action


def test_mu_matches_bruteforce():
    for text in (XSP27, C3xC9, SD16, Q8):
        G = _G(text)
        assert solve_mu(G).value == mu_bruteforce(G)


def test_solution_stabilizers_have_jointly_trivial_core():
    from mfdeg.group_core import core

    G = _G(C3xC9)
    sol = solve_mu(G)
    acc = set(range(G.order))
    for H in sol.subgroups:
        acc &= core(G, H).eset
    assert acc == {0}
    assert sol.value == sum(sol.indexes)


def test_realize_permutation_faithful():
    for text in (XSP27, C3xC9, SD16):
        G = _G(text)
        sol = solve_mu(G)
        degree, perms, cycles = realize_permutation(G, sol)
        assert degree == sol.value
        assert len(perms) == G.ngens
        for perm in perms:
            assert sorted(perm) == list(range(degree))
        assert len(cycles) == G.ngens


def test_trivial_group_mu():
    sol = solve_mu(_G("gens a; rels a;"))
    assert sol.value == 1


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        solve_mu(_G(XSP27), budget=3)


def test_upper_hint_early_exit_is_exact():
    G = _G(C3xC9)
    plain = solve_mu(G)
    hinted = solve_mu(G, upper_hint=12)
    assert plain.value == hinted.value == 12
    assert hinted.nodes <= plain.nodes


def test_cross_check_c_mu():
    t = character_table(_G(XSP27))
    csol, msol = cross_check_c_mu(t)
    assert csol.value == msol.value == 9
