"""Shipped group families as parameterized presentation builders.

Every entry renders a presentation in the package's text format.  Families
stated with the convention "all relations [x, y] = 1 omitted" get every
unlisted generator-pair commutator inserted explicitly.  Expected values
are closed forms in p (and the family parameters) carried together with
the claim text they come from, for audit output; they are never consulted
by the solvers themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .presentation import parse_presentation

__all__ = [
    "CatalogEntry",
    "CATALOG",
    "expand_catalog",
    "instantiate",
    "expected_values",
    "smallest_nonresidue",
    "hyperbola_point",
]


def smallest_nonresidue(p):
    """Smallest positive non-quadratic residue modulo p (p odd prime)."""
    squares = {(x * x) % p for x in range(1, p)}
    for v in range(2, p):
        if v not in squares:
            return v
    raise ValueError("no non-residue mod %d" % p)


def hyperbola_point(p, k, coef):
    """Smallest positive (a, b) with a^2 - coef*b^2 = k (mod p)."""
    for a in range(1, p + 1):
        for b in range(1, p + 1):
            if (a * a - coef * b * b) % p == k % p:
                return a, b
    raise ValueError("no solution of a^2 - %d b^2 = %d mod %d" % (coef, k, p))


def _pc_source(gens, commutators, extra):
    """Presentation text with all unlisted commutators set trivial.

    commutators: list of (x, y, rhs or None) meaning [x, y] = rhs.
    extra: list of additional relator strings (powers, identifications).
    """
    listed = {frozenset((x, y)) for x, y, _ in commutators}
    rels = []
    for x, y, rhs in commutators:
        rels.append("[%s,%s]=%s" % (x, y, rhs) if rhs else "[%s,%s]" % (x, y))
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            pair = frozenset((gens[i], gens[j]))
            if pair not in listed:
                rels.append("[%s,%s]" % (gens[i], gens[j]))
    rels.extend(extra)
    return "gens %s; rels %s;" % (",".join(gens), ", ".join(rels))


@dataclass(frozen=True)
class CatalogEntry:
    family: str
    description: str
    min_p: int  # smallest allowed prime (0 = fixed-prime entry)
    default_p: int
    param_schema: tuple  # parameter names beyond p
    flags: dict  # hypothesis flags (stated, not computed)
    build: callable  # (p, params) -> presentation text
    expected: dict  # quantity -> (fn(p, params) -> value, claim text)
    check_params: callable = None  # optional extra validation


def _simple(fn):
    return lambda p, params: fn(p)


# ---- small standard groups ----------------------------------------------


def _xsp_expP(p, params):
    return _pc_source(
        ["a", "b", "c"], [("a", "b", "c")], ["a^%d" % p, "b^%d" % p, "c^%d" % p]
    )


def _xsp_expP2(p, params):
    # modular group of order p^3: y^-1 x^-1 y x = x^p
    return "gens x,y; rels y^-1*x^-1*y*x=x^%d, x^%d, y^%d;" % (p, p * p, p)


def _abelian(p, params):
    rs = _abelian_ranks(params)
    gens = ["g%d" % i for i in range(1, len(rs) + 1)]
    extra = ["%s^%d" % (g, p**r) for g, r in zip(gens, rs)]
    return _pc_source(gens, [], extra)


def _abelian_ranks(params):
    rs = sorted(v for k, v in params.items() if k.startswith("r"))
    if not rs or any(r < 1 for r in rs):
        raise ValueError("abelian entry needs positive parameters r1, r2, ...")
    return rs


def _hxcp(p, params):
    return _pc_source(
        ["a", "b", "c", "z"],
        [("a", "b", "c")],
        ["a^%d" % p, "b^%d" % p, "c^%d" % p, "z^%d" % p],
    )


def _hxcp2(p, params):
    return (
        "gens x,y,z; rels y^-1*x^-1*y*x=x^%d, x^%d, y^%d, z^%d, [x,z], [y,z];"
        % (p, p * p, p, p * p)
    )


def _sd16(p, params):
    return "gens r,s; rels r^8, s^2, s^-1*r*s=r^3;"


# ---- order p^5 families --------------------------------------------------


def _phi4_221b(p, params):
    return _pc_source(
        ["a", "a1", "a2", "b1", "b2"],
        [("a1", "a", "b1"), ("a2", "a", "b2")],
        ["a^%d=b2" % p, "a2^%d=b1" % p, "a1^%d" % p, "b1^%d" % p, "b2^%d" % p],
    )


def _phi4_221f0(p, params):
    nu = smallest_nonresidue(p)
    return _pc_source(
        ["a", "a1", "a2", "b1", "b2"],
        [("a1", "a", "b1"), ("a2", "a", "b2")],
        ["a1^%d=b2" % p, "a2^%d=b1^%d" % (p, nu), "a^%d" % p, "b1^%d" % p, "b2^%d" % p],
    )


def _phi4_2111a(p, params):
    return _pc_source(
        ["a", "a1", "a2", "b1", "b2"],
        [("a1", "a", "b1"), ("a2", "a", "b2")],
        ["a^%d=b2" % p, "a1^%d" % p, "a2^%d" % p, "b1^%d" % p, "b2^%d" % p],
    )


# ---- order p^6 families --------------------------------------------------


def _phi9(p, params):
    return _pc_source(
        ["a1", "a2", "a3", "a4", "a5", "b1", "b2"],
        [("a4", "a5", "a3"), ("a3", "a5", "a2"), ("a2", "a5", "a1")],
        [
            "a1=b1",
            "a4^%d=b2" % p,
            "a5^%d=b1" % p,
            "a2^%d" % p,
            "a3^%d" % p,
            "b1^%d" % p,
            "b2^%d" % p,
        ],
    )


def _phi10_g1(p, params):
    return _pc_source(
        ["a1", "a2", "a3", "a4", "a5", "b1"],
        [
            ("a4", "a5", "a3"),
            ("a3", "a5", "a2"),
            ("a2", "a5", "a1"),
            ("a3", "a4", "a1"),
        ],
        [
            "a1=b1^%d" % p,
            "a2^%d" % p,
            "a3^%d" % p,
            "a4^%d" % p,
            "a5^%d" % p,
            "b1^%d" % (p * p),
        ],
    )


def _phi10_g2(p, params):
    return _pc_source(
        ["a1", "a2", "a3", "a4", "a5", "b1", "b2"],
        [
            ("a4", "a5", "a3"),
            ("a3", "a5", "a2"),
            ("a2", "a5", "a1"),
            ("a3", "a4", "a1"),
        ],
        [
            "a1=b1",
            "a5^%d=b2" % p,
            "a2^%d" % p,
            "a3^%d" % p,
            "a4^%d" % p,
            "b1^%d" % p,
            "b2^%d" % p,
        ],
    )


def _phi12(powers):
    def build(p, params):
        return _pc_source(
            ["a1", "a2", "a3", "a4", "a5", "a6"],
            [("a3", "a4", "a1"), ("a5", "a6", "a2")],
            [s % {"p": p} for s in powers],
        )

    return build


_phi12_ex_g1 = _phi12(
    ["a3^%(p)d=a2", "a1^%(p)d", "a2^%(p)d", "a4^%(p)d", "a5^%(p)d", "a6^%(p)d"]
)
_phi12_ex_g2 = _phi12(
    ["a3^%(p)d=a1", "a1^%(p)d", "a2^%(p)d", "a4^%(p)d", "a5^%(p)d", "a6^%(p)d"]
)
_phi12_ex_g3 = _phi12(
    [
        "a4^%(p)d=a1*a2",
        "a5^%(p)d=a1*a2",
        "a1^%(p)d",
        "a2^%(p)d",
        "a3^%(p)d",
        "a6^%(p)d",
    ]
)


def _phi17(p, params):
    return _pc_source(
        ["a1", "a2", "a3", "a4", "a5", "a6"],
        [("a5", "a6", "a3"), ("a4", "a5", "a2"), ("a3", "a6", "a1")],
        [
            "a4^%d=a1" % p,
            "a5^%d=a2" % p,
            "a1^%d" % p,
            "a2^%d" % p,
            "a3^%d" % p,
            "a6^%d" % p,
        ],
    )


def _phi42_43(a5_rhs, a6_rhs, comm_exp):
    """Common shape of the cyclic-center order-p^6 families.

    a5_rhs / a6_rhs produce the right sides of a5^p and a6^p; comm_exp
    gives the exponent t in [a2, a5] = a1^t.
    """

    def build(p, params):
        comms = [
            ("a5", "a6", "a4"),
            ("a4", "a6", "a3"),
            ("a4", "a5", "a2"),
            ("a3", "a6", "a1"),
            ("a2", "a5", "a1^%d" % (comm_exp(p, params) % p)),
        ]
        extra = [
            "a4^%d=a1" % p,
            "a5^%d=%s" % (p, a5_rhs(p, params)),
            "a6^%d=%s" % (p, a6_rhs(p, params)),
            "a1^%d" % p,
            "a2^%d" % p,
            "a3^%d" % p,
        ]
        return _pc_source(["a1", "a2", "a3", "a4", "a5", "a6"], comms, extra)

    return build


_phi42_1 = _phi42_43(
    lambda p, _: "a3*a1",
    lambda p, _: "a2*a1^%d" % (p - 1),
    lambda p, _: -1,
)
_phi42_2 = _phi42_43(lambda p, _: "a3", lambda p, _: "a2", lambda p, _: -1)


def _ab42(p, params):
    return hyperbola_point(p, params["k"], 1)


def _phi42_3k_a5(p, params):
    a, _b = _ab42(p, params)
    return "a3*a1^%d" % ((-a - 1) % p)


def _phi42_3k_a6(p, params):
    _a, b = _ab42(p, params)
    return "a2*a1^%d" % ((1 - b) % p)


_phi42_3k = _phi42_43(_phi42_3k_a5, _phi42_3k_a6, lambda p, _: -1)


def _nu_inv_neg(p, params):
    return -pow(smallest_nonresidue(p), -1, p)


_phi43_1 = _phi42_43(
    lambda p, _: "a3*a1^%d" % (p - 1),
    lambda p, _: "a2^%d*a1" % smallest_nonresidue(p),
    _nu_inv_neg,
)


def _ab43(p, params):
    return hyperbola_point(p, params["k"], pow(smallest_nonresidue(p), -1, p))


def _phi43_2k_a5(p, params):
    a, _b = _ab43(p, params)
    return "a3*a1^%d" % ((-a - 1) % p)


def _phi43_2k_a6(p, params):
    _a, b = _ab43(p, params)
    return "a2^%d*a1^%d" % (smallest_nonresidue(p), (1 - b) % p)


_phi43_2k = _phi42_43(_phi43_2k_a5, _phi43_2k_a6, _nu_inv_neg)


# ---- tower families -------------------------------------------------------


def _tower(p, params):
    n, i = params["n"], params["i"]
    if i == 2:
        gens = ["a"] + ["a%d" % j for j in range(1, n)]
        comms = [("a%d" % j, "a", "a%d" % (j + 1)) for j in range(1, n - 1)]
        extra = ["a^%d" % p] + ["a%d^%d" % (j, p) for j in range(1, n)]
    else:
        top = n - i + 2
        gens = ["a"] + ["a%d" % j for j in range(1, top + 1)]
        comms = [("a%d" % j, "a", "a%d" % (j + 1)) for j in range(1, top)]
        extra = (
            ["a1^%d=a%d" % (p ** (i - 2), top), "a^%d" % p]
            + ["a%d^%d" % (j, p) for j in range(2, top + 1)]
        )
    return _pc_source(gens, comms, extra)


def _check_tower(p, params):
    n = params.get("n")
    i = params.get("i")
    if n is None or i is None:
        raise ValueError("tower entry needs parameters n and i")
    if not (3 <= n):
        raise ValueError("tower entry needs n >= 3")
    if not (2 <= i <= n - 1):
        raise ValueError("tower parameter i must satisfy 2 <= i <= n-1, got %r" % (i,))
    if p < n:
        raise ValueError("tower families require p >= n (got p=%d, n=%d)" % (p, n))


def _check_k(p, params):
    k = params.get("k")
    if k is None or not (1 <= k <= p - 1):
        raise ValueError("parameter k must lie in 1..p-1, got %r" % (k,))


# ---- registry -------------------------------------------------------------


def _flags(cyclic=False, nosplit=True, metab=True):
    return {
        "cyclic_center_expected": cyclic,
        "not_nontrivial_split": nosplit,
        "metabelian_expected": metab,
    }


CATALOG = {
    "xsp_p3_expP": CatalogEntry(
        "xsp_p3_expP",
        "extraspecial group of order p^3, exponent p (p >= 3)",
        3,
        3,
        (),
        _flags(cyclic=True),
        _xsp_expP,
        {
            "order": (_simple(lambda p: p**3), "|H| = p^3"),
            "c": (_simple(lambda p: p**2), "c(G) = |G/Z(G)|^(1/2) |Z(G)| = p^2"),
            "mu": (_simple(lambda p: p**2), "mu(G) = c(G) = p^2"),
            "exp": (_simple(lambda p: p), "exp(H) = p"),
            "dZ": (_simple(lambda p: 1), "Z(G) cyclic of order p"),
            "Z_order": (_simple(lambda p: p), "|Z(G)| = p"),
            "cd": (_simple(lambda p: (1, p)), "cd(G) = {1, p}"),
        },
    ),
    "xsp_p3_expP2": CatalogEntry(
        "xsp_p3_expP2",
        "modular group of order p^3, exponent p^2 (p >= 3)",
        3,
        3,
        (),
        _flags(cyclic=True),
        _xsp_expP2,
        {
            "order": (_simple(lambda p: p**3), "|H| = p^3"),
            "c": (_simple(lambda p: p**2), "c(G) = |G/Z(G)|^(1/2) |Z(G)| = p^2"),
            "mu": (_simple(lambda p: p**2), "mu(H) = p^2"),
            "exp": (_simple(lambda p: p**2), "x^(p^2) = 1, o(x) = p^2"),
            "dZ": (_simple(lambda p: 1), "Z(G) cyclic of order p"),
            "Z_order": (_simple(lambda p: p), "|Z(G)| = p"),
            "cd": (_simple(lambda p: (1, p)), "cd(G) = {1, p}"),
        },
    ),
    "abelian": CatalogEntry(
        "abelian",
        "abelian product of C_{p^{r_i}} from parameters r1, r2, ... (p >= 3)",
        3,
        3,
        ("r1", "r2"),
        _flags(nosplit=False),
        _abelian,
        {
            "order": (
                lambda p, params: p ** sum(_abelian_ranks(params)),
                "|G| = p^(sum r_i)",
            ),
            "c": (
                lambda p, params: sum(p**r for r in _abelian_ranks(params)),
                "c(G) = mu(G) = sum p^(r_i)",
            ),
            "mu": (
                lambda p, params: sum(p**r for r in _abelian_ranks(params)),
                "c(G) = mu(G) = sum p^(r_i)",
            ),
            "exp": (
                lambda p, params: p ** max(_abelian_ranks(params)),
                "exponent of the largest cyclic factor",
            ),
            "dZ": (
                lambda p, params: len(_abelian_ranks(params)),
                "number of cyclic factors",
            ),
        },
    ),
    "hxcp": CatalogEntry(
        "hxcp",
        "extraspecial p^3 exponent p times C_p (p >= 3)",
        3,
        3,
        (),
        _flags(nosplit=False),
        _hxcp,
        {
            "order": (_simple(lambda p: p**4), "|G| = p^4"),
            "c": (_simple(lambda p: p**2 + p), "c(G) = p^2 + p"),
            "mu": (_simple(lambda p: p**2 + p), "mu(G) = c(G), p odd"),
            "exp": (_simple(lambda p: p), "exp(H) = p, exp(K) = p"),
            "dZ": (_simple(lambda p: 2), "Z(G) = Z(H) x K"),
        },
    ),
    "hxcp2": CatalogEntry(
        "hxcp2",
        "modular p^3 exponent p^2 times C_{p^2} (p >= 3)",
        3,
        3,
        (),
        _flags(nosplit=False),
        _hxcp2,
        {
            "order": (_simple(lambda p: p**5), "|G| = p^5"),
            "mu": (_simple(lambda p: 2 * p**2), "mu(G) = mu(H) + mu(K) = 2p^2"),
            "c": (_simple(lambda p: 2 * p**2), "c(G) = mu(G), p odd"),
            "exp": (_simple(lambda p: p**2), "exp = p^2"),
            "dZ": (_simple(lambda p: 2), "Z(G) = Z(H) x K"),
        },
    ),
    "sd16": CatalogEntry(
        "sd16",
        "semidihedral group of order 16",
        0,
        2,
        (),
        _flags(cyclic=True),
        _sd16,
        {
            "order": (_simple(lambda p: 16), "|SD_16| = 16"),
            "c": (_simple(lambda p: 8), "least-degree witness uses d_i >= 2 form"),
            "mu": (_simple(lambda p: 8), "minimal faithful degree of SD_16"),
        },
    ),
    "phi4_221b": CatalogEntry(
        "phi4_221b",
        "order p^5, exponent p^2, d(Z) = 2 (p >= 5)",
        5,
        5,
        (),
        _flags(),
        _phi4_221b,
        {
            "order": (_simple(lambda p: p**5), "|G| = p^5"),
            "c": (_simple(lambda p: p**3 + p**2), "c(G_1) = p^3 + p^2"),
            "mu": (_simple(lambda p: p**3 + p**2), "mu = c, p odd"),
            "exp": (_simple(lambda p: p**2), "exp(G_i) = p^2"),
            "dZ": (_simple(lambda p: 2), "d(Z(G_i)) = 2"),
            "Z_order": (_simple(lambda p: p**2), "Z(G_i) = <b1, b2>"),
            "cd": (_simple(lambda p: (1, p)), "cd(G_i) = {1, p}"),
        },
    ),
    "phi4_221f0": CatalogEntry(
        "phi4_221f0",
        "order p^5, exponent p^2, d(Z) = 2 (p >= 5)",
        5,
        5,
        (),
        _flags(),
        _phi4_221f0,
        {
            "order": (_simple(lambda p: p**5), "|G| = p^5"),
            "c": (_simple(lambda p: 2 * p**3), "c(G_2) = 2p^3"),
            "mu": (_simple(lambda p: 2 * p**3), "mu = c, p odd"),
            "exp": (_simple(lambda p: p**2), "exp(G_i) = p^2"),
            "dZ": (_simple(lambda p: 2), "d(Z(G_i)) = 2"),
            "Z_order": (_simple(lambda p: p**2), "Z(G_i) = <b1, b2>"),
            "cd": (_simple(lambda p: (1, p)), "cd(G_i) = {1, p}"),
        },
    ),
    "phi4_2111a": CatalogEntry(
        "phi4_2111a",
        "order p^5, exponent p^2, d(Z) = 2 (p >= 5)",
        5,
        5,
        (),
        _flags(),
        _phi4_2111a,
        {
            "order": (_simple(lambda p: p**5), "|G| = p^5"),
            "c": (_simple(lambda p: 2 * p**2), "c(G_3) = 2p^2"),
            "mu": (_simple(lambda p: 2 * p**2), "mu = c, p odd"),
            "exp": (_simple(lambda p: p**2), "exp(G_i) = p^2"),
            "dZ": (_simple(lambda p: 2), "d(Z(G_i)) = 2"),
            "Z_order": (_simple(lambda p: p**2), "Z(G_i) = <b1, b2>"),
            "cd": (_simple(lambda p: (1, p)), "cd(G_i) = {1, p}"),
        },
    ),
    "phi9": CatalogEntry(
        "phi9",
        "order p^6 with d(Z cap G') = 1 < d(Z) = 2 (p >= 5)",
        5,
        5,
        (),
        _flags(),
        _phi9,
        {
            "order": (_simple(lambda p: p**6), "|G| = p^6"),
            "c": (_simple(lambda p: 2 * p**2), "c(G) = 2p^2"),
            "mu": (_simple(lambda p: 2 * p**2), "c(G) = mu(G)"),
            "exp": (_simple(lambda p: p**2), "o(a5) = p^2"),
            "dZ": (_simple(lambda p: 2), "Z(G) = <a5^p, a4^p> = C_p x C_p"),
            "Z_order": (_simple(lambda p: p**2), "Z(G) = C_p x C_p"),
            "cd": (_simple(lambda p: (1, p)), "cd(G) = {1, p}"),
        },
    ),
    "phi10_g1": CatalogEntry(
        "phi10_g1",
        "order p^6 with cyclic center C_{p^2} (p >= 5)",
        5,
        5,
        (),
        _flags(cyclic=True),
        _phi10_g1,
        {
            "order": (_simple(lambda p: p**6), "|G_1| = p^6"),
            "c": (_simple(lambda p: p**4), "c(G_1) = p^4"),
            "mu": (_simple(lambda p: p**4), "mu = c, p odd"),
            "exp": (_simple(lambda p: p**2), "exp(G_i) = p^2"),
            "dZ": (_simple(lambda p: 1), "Z(G_1) = <b1> = C_{p^2}"),
            "Z_order": (_simple(lambda p: p**2), "Z(G_1) = C_{p^2}"),
            "cd": (_simple(lambda p: (1, p, p**2)), "cd(G_i) = {1, p, p^2}"),
        },
    ),
    "phi10_g2": CatalogEntry(
        "phi10_g2",
        "order p^6 with center C_p x C_p (p >= 5)",
        5,
        5,
        (),
        _flags(),
        _phi10_g2,
        {
            "order": (_simple(lambda p: p**6), "|G_2| = p^6"),
            "c": (_simple(lambda p: p**3 + p**2), "c(G_2) = p^3 + p^2"),
            "mu": (_simple(lambda p: p**3 + p**2), "mu = c, p odd"),
            "exp": (_simple(lambda p: p**2), "exp(G_i) = p^2"),
            "dZ": (_simple(lambda p: 2), "Z(G_2) = <b1, b2> = C_p x C_p"),
            "Z_order": (_simple(lambda p: p**2), "Z(G_2) = C_p x C_p"),
            "cd": (_simple(lambda p: (1, p, p**2)), "cd(G_i) = {1, p, p^2}"),
        },
    ),
    "phi12_ex_g1": CatalogEntry(
        "phi12_ex_g1",
        "order p^6, d(Z) = 2, cd = {1, p, p^2} (p >= 5)",
        5,
        5,
        (),
        _flags(),
        _phi12_ex_g1,
        {
            "order": (_simple(lambda p: p**6), "|G_i| = p^6"),
            "c": (_simple(lambda p: p**3 + p**2), "c(G_1) = p^3 + p^2"),
            "mu": (_simple(lambda p: p**3 + p**2), "mu = c, p odd"),
            "exp": (_simple(lambda p: p**2), "exp(G_i) = p^2"),
            "dZ": (_simple(lambda p: 2), "Z(G_i) = <a1, a2>"),
            "Z_order": (_simple(lambda p: p**2), "Z(G_i) = <a1, a2>"),
            "cd": (_simple(lambda p: (1, p, p**2)), "cd(G_i) = {1, p, p^2}"),
        },
    ),
    "phi12_ex_g2": CatalogEntry(
        "phi12_ex_g2",
        "order p^6, d(Z) = 2, cd = {1, p, p^2} (p >= 5)",
        5,
        5,
        (),
        _flags(),
        _phi12_ex_g2,
        {
            "order": (_simple(lambda p: p**6), "|G_i| = p^6"),
            "c": (_simple(lambda p: 2 * p**2), "c(G_2) = 2p^2"),
            "mu": (_simple(lambda p: 2 * p**2), "mu = c, p odd"),
            "exp": (_simple(lambda p: p**2), "exp(G_i) = p^2"),
            "dZ": (_simple(lambda p: 2), "Z(G_i) = <a1, a2>"),
            "Z_order": (_simple(lambda p: p**2), "Z(G_i) = <a1, a2>"),
            "cd": (_simple(lambda p: (1, p, p**2)), "cd(G_i) = {1, p, p^2}"),
        },
    ),
    "phi12_ex_g3": CatalogEntry(
        "phi12_ex_g3",
        "order p^6, d(Z) = 2, cd = {1, p, p^2} (p >= 5)",
        5,
        5,
        (),
        _flags(),
        _phi12_ex_g3,
        {
            "order": (_simple(lambda p: p**6), "|G_i| = p^6"),
            "c": (_simple(lambda p: 2 * p**3), "c(G_3) = 2p^3"),
            "mu": (_simple(lambda p: 2 * p**3), "mu = c, p odd"),
            "exp": (_simple(lambda p: p**2), "exp(G_i) = p^2"),
            "dZ": (_simple(lambda p: 2), "Z(G_i) = <a1, a2>"),
            "Z_order": (_simple(lambda p: p**2), "Z(G_i) = <a1, a2>"),
            "cd": (_simple(lambda p: (1, p, p**2)), "cd(G_i) = {1, p, p^2}"),
        },
    ),
    "phi17": CatalogEntry(
        "phi17",
        "order p^6 without elementary abelian subgroup of index p^2 (p >= 5)",
        5,
        5,
        (),
        _flags(),
        _phi17,
        {
            "order": (_simple(lambda p: p**6), "|G| = p^6"),
            "exp": (_simple(lambda p: p**2), "exp(A) must be p^2"),
            "dZ": (_simple(lambda p: 2), "d(Z(G)) >= 2"),
            "cd": (_simple(lambda p: (1, p, p**2)), "cd(G) = {1, p, p^2}"),
        },
    ),
}

_P4_CLAIM = "c(G) = p^4"
for _fid, _builder, _schema, _chk in [
    ("phi42_1", _phi42_1, (), None),
    ("phi42_2", _phi42_2, (), None),
    ("phi42_3k", _phi42_3k, ("k",), _check_k),
    ("phi43_1", _phi43_1, (), None),
    ("phi43_2k", _phi43_2k, ("k",), _check_k),
]:
    CATALOG[_fid] = CatalogEntry(
        _fid,
        "order p^6 with cyclic center and exp(G') = p^2 (p >= 5)",
        5,
        5,
        _schema,
        _flags(cyclic=True),
        _builder,
        {
            "order": (_simple(lambda p: p**6), "groups of order p^6"),
            "c": (_simple(lambda p: p**4), _P4_CLAIM),
            "mu": (_simple(lambda p: p**4), "mu = c, p odd"),
            "dZ": (_simple(lambda p: 1), "Z(G) = <a1> = C_p"),
            "Z_order": (_simple(lambda p: p), "Z(G) = C_p"),
            "cd": (_simple(lambda p: (1, p, p**2)), "cd(G) = {1, p, p^2}"),
            "derived_invariants": (
                _simple(lambda p: (p, p, p**2)),
                "G' = <a4, a3, a2> = C_{p^2} x C_p x C_p",
            ),
        },
        check_params=_chk,
    )

CATALOG["tower"] = CatalogEntry(
    "tower",
    "order p^n with cyclic center and mu = p^i (parameters n, i; p >= n)",
    3,
    5,
    ("n", "i"),
    _flags(cyclic=True),
    _tower,
    {
        "order": (lambda p, params: p ** params["n"], "|G_i| = p^n"),
        "mu": (lambda p, params: p ** params["i"], "mu(G_i) = p^i"),
        "c": (lambda p, params: p ** params["i"], "c(G) = mu(G), p odd"),
        "dZ": (lambda p, params: 1, "Z(G_i) cyclic"),
        "Z_order": (
            lambda p, params: p ** max(params["i"] - 2, 1),
            "Z(G_i) = C_{p^{i-2}} (i >= 3), C_p (i = 2)",
        ),
        "cd": (lambda p, params: (1, p), "cd(G_i) = {1, p}"),
        "class": (
            lambda p, params: params["n"] + 2 - params["i"]
            if params["i"] >= 3
            else params["n"] - 1,
            "nilpotency class n+2-i (i >= 3), n-1 (i = 2)",
        ),
    },
    check_params=_check_tower,
)


_PRIMES = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}


def _is_prime(p):
    if p in _PRIMES:
        return True
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _validate(entry, p, params):
    if not _is_prime(p):
        raise ValueError("p = %r is not prime" % (p,))
    if entry.min_p == 0:
        if p != entry.default_p:
            raise ValueError("entry %s has a fixed group; p is not a parameter" % entry.family)
    elif p < entry.min_p:
        raise ValueError(
            "family %s requires p >= %d (got p = %d)" % (entry.family, entry.min_p, p)
        )
    if entry.check_params is not None:
        entry.check_params(p, params)
    for name in entry.param_schema:
        if entry.family != "abelian" and name not in params:
            raise ValueError("family %s needs parameter %s" % (entry.family, name))


def expand_catalog(family_id, p=None, params=None):
    """Build the fully expanded GroupSpec of a catalog family."""
    if family_id not in CATALOG:
        raise ValueError("unknown catalog family %r" % (family_id,))
    entry = CATALOG[family_id]
    if p is None:
        p = entry.default_p
    params = dict(params or {})
    if entry.family == "abelian" and not params:
        params = {"r1": 1, "r2": 2}
    _validate(entry, p, params)
    spec = parse_presentation(entry.build(p, params))
    meta = {"family": family_id, "p": p, "params": dict(params)}
    meta.update(entry.flags)
    if family_id in ("phi42_3k", "phi43_2k", "phi43_1", "phi4_221f0"):
        meta["nu"] = smallest_nonresidue(p)
    if family_id == "phi42_3k":
        meta["ab"] = _ab42(p, params)
    if family_id == "phi43_2k":
        meta["ab"] = _ab43(p, params)
    return replace(spec, meta=meta)


def instantiate(entry, p=None, params=None):
    fid = entry.family if isinstance(entry, CatalogEntry) else entry
    return expand_catalog(fid, p, params)


def expected_values(family_id, p=None, params=None):
    """Closed-form claimed values at (p, params): quantity -> (value, claim)."""
    if family_id not in CATALOG:
        raise ValueError("unknown catalog family %r" % (family_id,))
    entry = CATALOG[family_id]
    if p is None:
        p = entry.default_p
    params = dict(params or {})
    if entry.family == "abelian" and not params:
        params = {"r1": 1, "r2": 2}
    _validate(entry, p, params)
    return {name: (fn(p, params), claim) for name, (fn, claim) in entry.expected.items()}
