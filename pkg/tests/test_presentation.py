"""Presentation parsing and regular-action realization."""

import numpy as np
import pytest

from mfdeg._tc_core import COMPILED, BudgetExceeded, enumerate_cosets
from mfdeg.presentation import (
    GroupSpec,
    PresentationError,
    commutator,
    enumerate_regular,
    inverse_word,
    parse_presentation,
    word_pow,
)

XSP27 = "gens a,b,c; rels [a,b]=c, [a,c], [b,c], a^3, b^3, c^3;"


def test_word_helpers():
    assert inverse_word((1, -2, 3)) == (-3, 2, -1)
    assert word_pow((1, 2), 3) == (1, 2, 1, 2, 1, 2)
    assert word_pow((1,), 0) == ()
    # [x, y] = x^-1 y^-1 x y
    assert commutator((1,), (2,)) == (-1, -2, 1, 2)


def test_parse_basic():
    spec = parse_presentation(XSP27)
    assert spec.generators == ("a", "b", "c")
    assert len(spec.relators) == 6


def test_parse_rejects_garbage():
    with pytest.raises(PresentationError):
        parse_presentation("gens a; rels [a;")  # unclosed commutator
    with pytest.raises(PresentationError):
        parse_presentation("gens a; rels b^3;")  # unknown generator
    with pytest.raises(PresentationError):
        parse_presentation("gens a; rels a$3;")


def test_spec_validates_letters():
    with pytest.raises(ValueError):
        GroupSpec(generators=("a",), relators=((2,),))


def test_regular_action_group_axioms():
    G = enumerate_regular(parse_presentation(XSP27))
    assert G.order == 27
    # identity, inverses, associativity on a sample
    rng = np.random.default_rng(7)
    xs = rng.integers(0, 27, size=12)
    for x in xs:
        x = int(x)
        assert G.mul(0, x) == x == G.mul(x, 0)
        assert G.mul(x, G.inv_elem(x)) == 0
    for x, y, z in zip(xs[:4], xs[4:8], xs[8:12]):
        x, y, z = int(x), int(y), int(z)
        assert G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))


def test_regular_action_satisfies_relators():
    spec = parse_presentation(XSP27)
    G = enumerate_regular(spec)
    for w in spec.relators:
        for x in range(G.order):
            assert G.apply_signed_word(x, w) == x


def test_element_orders_and_powers():
    G = enumerate_regular(parse_presentation(XSP27))
    orders = sorted({G.element_order(x) for x in range(G.order)})
    assert orders == [1, 3]  # exponent-p extraspecial group
    for x in range(G.order):
        assert G.power(x, 3) == 0
        assert G.power(x, -1) == G.inv_elem(x)


def test_cyclic_group_orders():
    for n in (1, 2, 5, 8):
        G = enumerate_regular(parse_presentation("gens a; rels a^%d;" % n))
        assert G.order == n


def test_budget_exceeded():
    spec = parse_presentation(XSP27)
    with pytest.raises(BudgetExceeded):
        enumerate_regular(spec, limit=5)


def test_coset_enumeration_trivial_relator_free():
    # free group on one generator has no finite closure within the budget
    with pytest.raises(BudgetExceeded):
        enumerate_cosets(2, [], 100)


def test_compiled_flag_is_boolean():
    assert COMPILED in (True, False)


def test_interpreted_kernel_matches_installed():
    # the pure-Python source must agree with whichever kernel is installed
    import importlib.util
    import pathlib

    import mfdeg._tc_core as installed

    src = pathlib.Path(installed.__file__).parent / "_tc_core.py"
    spec_ = importlib.util.spec_from_file_location("_tc_core_interp", src)
    interp = importlib.util.module_from_spec(spec_)
    spec_.loader.exec_module(interp)
    assert not interp.COMPILED

    pres = parse_presentation(XSP27)
    relators = [
        tuple(2 * (s - 1) if s > 0 else 2 * (-s - 1) + 1 for s in w)
        for w in pres.relators
    ]
    a = installed.enumerate_cosets(6, relators, 10_000)
    b = interp.enumerate_cosets(6, relators, 10_000)
    assert a[0] == b[0] == 27
    assert a[1] == b[1]
