"""Built-in group families: construction, validation and claimed invariants."""

import pytest

from mfdeg import group_core as gc
from mfdeg.catalog import (
    CATALOG,
    expand_catalog,
    expected_values,
    hyperbola_point,
    smallest_nonresidue,
)
from mfdeg.presentation import enumerate_regular


def test_smallest_nonresidue():
    assert smallest_nonresidue(3) == 2
    assert smallest_nonresidue(5) == 2
    assert smallest_nonresidue(7) == 3
    # returned value really is a non-residue
    for p in (3, 5, 7, 11, 13):
        nu = smallest_nonresidue(p)
        assert all(pow(x, 2, p) != nu for x in range(p))


def test_hyperbola_point():
    for p in (5, 7, 11):
        for k in range(1, p):
            a, b = hyperbola_point(p, k, 1)
            assert (a * a - b * b) % p == k % p
            nu = smallest_nonresidue(p)
            a, b = hyperbola_point(p, k, pow(nu, -1, p))
            assert (a * a - pow(nu, -1, p) * b * b) % p == k % p


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        expand_catalog("nope", 5, {})


def test_prime_bounds_enforced():
    with pytest.raises(ValueError):
        expand_catalog("phi9", 3, {})  # needs p >= 5
    with pytest.raises(ValueError):
        expand_catalog("sd16", 3, {})  # fixed-prime entry


def test_tower_parameter_validation():
    with pytest.raises(ValueError):
        expand_catalog("tower", 5, {"n": 6, "i": 2})  # needs p >= n
    with pytest.raises(ValueError):
        expand_catalog("tower", 5, {"n": 4, "i": 4})  # needs i <= n-1
    with pytest.raises(ValueError):
        expand_catalog("tower", 5, {"n": 4, "i": 1})  # needs i >= 2
    with pytest.raises(ValueError):
        expand_catalog("phi42_3k", 5, {"k": 5})  # needs 1 <= k <= p-1


def test_missing_parameter_rejected():
    with pytest.raises(ValueError):
        expand_catalog("tower", 5, {"n": 4})


def test_every_family_builds_to_claimed_order():
    for fam, entry in sorted(CATALOG.items()):
        p = entry.default_p
        params = {}
        if fam == "tower":
            params = {"n": 4, "i": 2}
        elif fam.endswith("_3k") or fam.endswith("_2k"):
            params = {"k": 1}
        spec = expand_catalog(fam, p, params)
        G = enumerate_regular(spec)
        want, _claim = expected_values(fam, p, params)["order"]
        assert G.order == want, fam


def test_structural_claims_on_small_entries():
    # spot-check center size / exponent claims where cheap (order <= 243)
    for fam in ("xsp_p3_expP", "xsp_p3_expP2", "hxcp", "hxcp2", "abelian"):
        entry = CATALOG[fam]
        params = {"r1": 1, "r2": 2} if fam == "abelian" else {}
        spec = expand_catalog(fam, entry.default_p, params)
        G = enumerate_regular(spec)
        claims = expected_values(fam, entry.default_p, params)
        if "Z_order" in claims:
            assert gc.center(G).order == claims["Z_order"][0], fam
        if "exp" in claims:
            assert gc.exponent(G) == claims["exp"][0], fam
        if "dZ" in claims:
            Z = gc.center(G)
            assert gc.abelian_invariants(G, Z).rank == claims["dZ"][0], fam


def test_meta_is_populated():
    spec = expand_catalog("phi43_1", 5, {})
    assert spec.meta["family"] == "phi43_1"
    assert spec.meta["p"] == 5
    assert "not_nontrivial_split" in spec.meta
    assert spec.meta["nu"] == smallest_nonresidue(5)
    spec2 = expand_catalog("phi42_3k", 5, {"k": 2})
    a, b = spec2.meta["ab"]
    assert (a * a - b * b) % 5 == 2


def test_abelian_defaults():
    spec = expand_catalog("abelian", None, None)
    G = enumerate_regular(spec)
    assert G.order == 27  # C_3 x C_9 default
