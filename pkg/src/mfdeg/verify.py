"""Reproduction suite: value checks against the catalog and theorem-level
property checks computed from structure alone.

Every check returns a CheckResult; a property whose hypotheses fail is
reported as skipped with the failed hypothesis named.  Verdicts never read
catalog expected values except in the dedicated value checks.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import group_core as gc
from ._tc_core import BudgetExceeded
from .catalog import CATALOG, expand_catalog, expected_values
from .chartab import character_table, check_orthogonality
from .permdeg import realize_permutation, solve_mu
from .presentation import enumerate_regular
from .quasiperm import base_p_digits, galois_orbits, solve_c

__all__ = ["CheckResult", "GroupContext", "run_corpus", "check_property", "SUITES"]


@dataclass
class CheckResult:
    check_id: str
    group_id: str
    claim: str
    computed: object
    expected: object
    status: str  # pass | fail | skipped
    reason: str = ""
    seconds: float = 0.0

    def line(self):
        tag = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[self.status]
        extra = ""
        if self.status == "fail":
            extra = "  computed=%r expected=%r" % (self.computed, self.expected)
        elif self.status == "skipped":
            extra = "  (%s)" % self.reason
        return "%s  %-28s %-22s %s%s" % (tag, self.group_id, self.check_id, self.claim, extra)


# ---- lazily computed per-group quantities ---------------------------------


class GroupContext:
    """Caches the computed structure of one corpus group."""

    def __init__(self, family, p, params, table_budget=20_000, mu_budget=1_000_000,
                 mu_order_limit=3_200):
        self.family = family
        self.p = p
        self.params = dict(params)
        self.table_budget = table_budget
        self.mu_budget = mu_budget
        self.mu_order_limit = mu_order_limit
        self.spec = expand_catalog(family, p, params)
        self.G = enumerate_regular(self.spec)
        self._cache = {}

    @property
    def group_id(self):
        bits = [self.family, "p=%d" % self.p]
        bits += ["%s=%s" % (k, v) for k, v in sorted(self.params.items())]
        return "[" + " ".join(bits) + "]"

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def table(self):
        return self._get("table", lambda: character_table(self.G, self.table_budget))

    @property
    def Z(self):
        return self._get("Z", lambda: gc.center(self.G))

    @property
    def dZ(self):
        return len(gc.abelian_invariants(self.G, self.Z).factors)

    @property
    def derived(self):
        return self._get("derived", lambda: gc.derived_subgroup(self.G))

    @property
    def exponent(self):
        return gc.exponent(self.G)

    @property
    def cd(self):
        return tuple(sorted({ch.degree for ch in self.table.chars}))

    @property
    def is_abelian(self):
        return self.derived.order == 1

    @property
    def csol(self):
        return self._get("csol", lambda: solve_c(self.table))

    @property
    def musol(self):
        def run():
            if self.G.order > self.mu_order_limit:
                raise BudgetExceeded(
                    "mu search not attempted at order %d (limit %d)"
                    % (self.G.order, self.mu_order_limit)
                )
            return solve_mu(self.G, budget=self.mu_budget, upper_hint=self.csol.value)

        return self._get("musol", run)

    @property
    def max_abelian_normal(self):
        return self._get("man", lambda: gc.max_abelian_normal(self.G))

    @property
    def nilpotency_class(self):
        return gc.nilpotency_class(self.G)

    @property
    def d_Z_cap_derived(self):
        inter = gc.intersection(self.G, self.Z, self.derived)
        if inter.order == 1:
            return 0
        return len(gc.abelian_invariants(self.G, inter).factors)

    @property
    def flags(self):
        return self.spec.meta

    def elementary_abelian_normal_of_index(self, idx):
        """Existence of an elementary abelian normal subgroup of index idx."""
        G, p = self.G, self.p
        level = [gc.whole_group(G)]
        seen = {level[0].fingerprint}
        want = G.order // idx
        while level and level[0].order > want:
            nxt = []
            for H in level:
                for M in gc.maximal_subgroups(G, H):
                    if M.fingerprint not in seen:
                        seen.add(M.fingerprint)
                        nxt.append(M)
            level = nxt
        for H in level:
            if (
                H.order == want
                and H.is_abelian()
                and gc._subgroup_exponent(G, H) == p
                and gc.is_normal(G, H)
            ):
                return True
        return False


# ---- corpus ---------------------------------------------------------------

_SMOKE = [
    ("xsp_p3_expP", 3, {}),
    ("xsp_p3_expP", 5, {}),
    ("xsp_p3_expP2", 3, {}),
    ("abelian", 3, {"r1": 1, "r2": 2}),
    ("hxcp", 3, {}),
    ("hxcp2", 3, {}),
    ("sd16", 2, {}),
    ("tower", 5, {"n": 4, "i": 2}),
    ("tower", 5, {"n": 4, "i": 3}),
]

_PAPER_P5 = _SMOKE + [
    ("phi4_221b", 5, {}),
    ("phi4_221f0", 5, {}),
    ("phi4_2111a", 5, {}),
    ("tower", 5, {"n": 5, "i": 2}),
    ("tower", 5, {"n": 5, "i": 3}),
    ("tower", 5, {"n": 5, "i": 4}),
]

_STRETCH = _PAPER_P5 + [
    ("phi9", 5, {}),
    ("phi10_g1", 5, {}),
    ("phi10_g2", 5, {}),
    ("phi12_ex_g1", 5, {}),
    ("phi12_ex_g2", 5, {}),
    ("phi12_ex_g3", 5, {}),
    ("phi17", 5, {}),
    ("phi42_1", 5, {}),
    ("phi42_2", 5, {}),
    ("phi42_3k", 5, {"k": 1}),
    ("phi43_1", 5, {}),
    ("phi43_2k", 5, {"k": 1}),
]

SUITES = {"smoke": _SMOKE, "paper-p5": _PAPER_P5, "stretch": _STRETCH}

PROPERTY_IDS = [
    "table-orthogonality",
    "galois-integral",
    "L1ii",
    "digit-sum",
    "c-eq-mu",
    "L2-orbit-count",
    "class2-cyclic-value",
    "linear-exclusion",
    "digit-range",
    "expP-cd1p-value",
    "cyclic-center-range",
    "cyclic-center-divisibility",
    "normmon-divisibility",
    "normmon-expP-value",
    "expP-cd1ps-value",
    "elem-index-p-value",
    "class2-witness",
    "no-split-mu-divisibility",
    "two-digit-form",
    "derived-max-abelian-divisibility",
]


def _result(check_id, ctx, claim, computed, expected, t0):
    ok = computed == expected
    return CheckResult(
        check_id,
        ctx.group_id,
        claim,
        computed,
        expected,
        "pass" if ok else "fail",
        seconds=time.time() - t0,
    )


def _skip(check_id, ctx, claim, reason, t0):
    return CheckResult(
        check_id, ctx.group_id, claim, None, None, "skipped", reason, time.time() - t0
    )


def check_value(ctx, quantity):
    """Compare one computed quantity against the catalog claim."""
    t0 = time.time()
    exp = expected_values(ctx.family, ctx.p, ctx.params)
    value, claim = exp[quantity]
    try:
        computed = {
            "order": lambda: ctx.G.order,
            "c": lambda: ctx.csol.value,
            "mu": lambda: ctx.musol.value,
            "exp": lambda: ctx.exponent,
            "dZ": lambda: ctx.dZ,
            "Z_order": lambda: ctx.Z.order,
            "cd": lambda: ctx.cd,
            "derived_invariants": lambda: tuple(
                sorted(gc.abelian_invariants(ctx.G, ctx.derived).factors)
            ),
            "class": lambda: ctx.nilpotency_class,
        }[quantity]()
    except BudgetExceeded as e:
        return _skip("value:" + quantity, ctx, claim, str(e), t0)
    return _result("value:" + quantity, ctx, claim, computed, value, t0)


def check_property(ctx, property_id):
    """Evaluate one theorem-level property from computed structure only."""
    t0 = time.time()
    G, p = ctx.G, ctx.p

    def skip(reason, claim):
        return _skip(property_id, ctx, claim, reason, t0)

    def res(claim, computed, expected=True):
        return _result(property_id, ctx, claim, computed, expected, t0)

    if property_id == "table-orthogonality":
        claim = "rows orthonormal; sum of squared degrees = |G|"
        ok = check_orthogonality(ctx.table) and int(
            sum(ch.degree**2 for ch in ctx.table.chars)
        ) == G.order
        return res(claim, ok)

    if property_id == "galois-integral":
        claim = "all Galois orbit sums take rational integer values"
        sums = galois_orbits(ctx.table)  # integrality asserted inside
        return res(claim, all(isinstance(v, int) for s in sums for v in s.values))

    if property_id == "L1ii":
        claim = "m(xi) = xi(1)/(p-1) and |X_G| = d(Z(G))"
        if ctx.is_abelian and G.order == 1:
            return skip("trivial group", claim)
        s = ctx.csol
        ok = s.m * (p - 1) == s.xi_degree and s.orbit_count == ctx.dZ
        return res(claim, ok)

    if property_id == "digit-sum":
        claim = "base-p digits of c(G) sum to d(Z(G))"
        if ctx.is_abelian:
            return skip("stated for non-abelian groups", claim)
        return res(claim, sum(base_p_digits(ctx.csol.value, p)), ctx.dZ)

    if property_id == "c-eq-mu":
        claim = "c(G) = mu(G) for odd p"
        if p == 2:
            return skip("p = 2", claim)
        try:
            return res(claim, ctx.csol.value, ctx.musol.value)
        except BudgetExceeded as e:
            return skip(str(e), claim)

    if property_id == "L2-orbit-count":
        claim = "minimal faithful action has d(Z(G)) orbits (odd p)"
        try:
            n = ctx.musol.orbit_count
        except BudgetExceeded as e:
            return skip(str(e), claim)
        if p == 2:
            return res(
                "d(Z)/2 <= orbit count <= d(Z) (p = 2)",
                ctx.dZ / 2 <= n <= ctx.dZ,
            )
        return res(claim, n, ctx.dZ)

    if property_id == "class2-cyclic-value":
        claim = "c(G) = |G/Z(G)|^(1/2) |Z(G)| (class 2, cyclic center, p >= 3)"
        if ctx.is_abelian:
            return skip("abelian group", claim)
        if p == 2:
            return skip("p = 2", claim)
        if ctx.nilpotency_class != 2:
            return skip("nilpotency class != 2", claim)
        if ctx.dZ != 1:
            return skip("center not cyclic", claim)
        quot = G.order // ctx.Z.order
        return res(claim, ctx.csol.value, math.isqrt(quot) * ctx.Z.order)

    if property_id == "linear-exclusion":
        claim = "X_G has no linear part and p^(s+1) | c(G) when d(Z cap G') = d(Z)"
        if ctx.is_abelian:
            return skip("abelian group", claim)
        if ctx.d_Z_cap_derived != ctx.dZ:
            return skip("d(Z cap G') = %d != d(Z) = %d" % (ctx.d_Z_cap_derived, ctx.dZ), claim)
        s_min = min(ch.degree for ch in ctx.table.chars if not ch.is_linear)
        ok = all(not t.has_linear_member for t in ctx.csol.sums) and (
            ctx.csol.value % (s_min * p) == 0
        )
        return res(claim, ok)

    if property_id == "digit-range":
        claim = "b <= r; and r <= b+e when d(Z(G)) < p"
        if ctx.is_abelian:
            return skip("stated for non-abelian groups", claim)
        digits = base_p_digits(ctx.csol.value, p)
        r = len(digits) - 1
        b = _log(ctx.exponent, p)
        e = _log(max(ctx.cd), p)
        ok = b <= r and (ctx.dZ >= p or r <= b + e)
        return res(claim, ok)

    if property_id == "expP-cd1p-value":
        claim = "c(G) = d(Z(G)) p^2 when exp = p, cd = {1, p}, no abelian factor"
        if ctx.is_abelian:
            return skip("abelian group", claim)
        if ctx.exponent != p or ctx.cd != (1, p):
            return skip("needs exp(G) = p and cd(G) = {1, p}", claim)
        if p < 3:
            return skip("p = 2", claim)
        if not ctx.flags.get("not_nontrivial_split"):
            return skip("group splits off an abelian factor", claim)
        return res(claim, ctx.csol.value, ctx.dZ * p**2)

    if property_id == "cyclic-center-range":
        claim = "c(G) = mu(G) in {p^2, ..., p^(n-1)} (cyclic center, p >= 3)"
        if ctx.is_abelian or p == 2 or ctx.dZ != 1:
            return skip("needs non-abelian, odd p, cyclic center", claim)
        n = _log(G.order, p)
        allowed = {p**i for i in range(2, n)}
        return res(claim, ctx.csol.value in allowed)

    if property_id == "cyclic-center-divisibility":
        claim = "p^alpha |Z| divides c(G) and c(G) divides (max cd) exp(G)"
        if ctx.is_abelian or ctx.dZ != 1:
            return skip("needs non-abelian group with cyclic center", claim)
        faithful = [ch.degree for ch in ctx.table.chars if ch.is_faithful and not ch.is_linear]
        if not faithful:
            return skip("no faithful nonlinear irreducible", claim)
        c = ctx.csol.value
        ok = c % (min(faithful) * ctx.Z.order) == 0 and (max(ctx.cd) * ctx.exponent) % c == 0
        return res(claim, ok)

    if property_id == "normmon-divisibility":
        claim = "(max cd)|Z| divides c(G) and c(G) divides (max cd) exp(A)"
        if ctx.is_abelian or ctx.dZ != 1:
            return skip("needs non-abelian group with cyclic center", claim)
        if not ctx.derived.is_abelian():
            return skip("G' non-abelian: normal monomiality not established", claim)
        A = ctx.max_abelian_normal
        c = ctx.csol.value
        ok = c % (max(ctx.cd) * ctx.Z.order) == 0 and (
            max(ctx.cd) * gc._subgroup_exponent(G, A)
        ) % c == 0
        return res(claim, ok)

    if property_id == "normmon-expP-value":
        claim = "c(G) = p^(a+1) when exp(G) = p and max cd = p^a (cyclic center)"
        if ctx.is_abelian or ctx.dZ != 1 or ctx.exponent != p:
            return skip("needs non-abelian, cyclic center, exp(G) = p", claim)
        if not ctx.derived.is_abelian():
            return skip("G' non-abelian: normal monomiality not established", claim)
        return res(claim, ctx.csol.value, max(ctx.cd) * p)

    if property_id == "expP-cd1ps-value":
        claim = "c(G) = d(Z) p^(s+1) when exp = p, cd = {1, p^s}, s > 1, d(Z cap G') = d(Z)"
        if ctx.is_abelian or ctx.exponent != p:
            return skip("needs non-abelian group of exponent p", claim)
        if len(ctx.cd) != 2 or ctx.cd[1] == p:
            return skip("needs cd(G) = {1, p^s} with s > 1", claim)
        if ctx.d_Z_cap_derived != ctx.dZ:
            return skip("d(Z cap G') != d(Z)", claim)
        return res(claim, ctx.csol.value, ctx.dZ * ctx.cd[1] * p)

    if property_id == "elem-index-p-value":
        claim = "c(G) = d(Z) p^2 (elementary abelian index-p subgroup, nonlinear X_G)"
        if ctx.is_abelian:
            return skip("abelian group", claim)
        if any(t.has_linear_member for t in ctx.csol.sums):
            return skip("witness contains a linear character", claim)
        if not ctx.elementary_abelian_normal_of_index(p):
            return skip("no elementary abelian subgroup of index p", claim)
        return res(claim, ctx.csol.value, ctx.dZ * p**2)

    if property_id == "class2-witness":
        claim = "some maximum abelian normal subgroup has exponent |Z(G)|"
        if ctx.is_abelian or p == 2:
            return skip("needs non-abelian group, odd p", claim)
        if ctx.nilpotency_class != 2 or ctx.dZ != 1:
            return skip("needs class 2 with cyclic center", claim)
        exps = _max_abelian_normal_exponents(G)
        return res(claim, ctx.Z.order in exps)

    if property_id == "no-split-mu-divisibility":
        claim = "p^2 divides mu(G) when no abelian direct factor (p >= 3)"
        if ctx.is_abelian or p == 2:
            return skip("needs non-abelian group, odd p", claim)
        if not ctx.flags.get("not_nontrivial_split"):
            return skip("group splits off an abelian factor", claim)
        try:
            return res(claim, ctx.musol.value % (p * p), 0)
        except BudgetExceeded as e:
            return skip(str(e), claim)

    if property_id == "two-digit-form":
        claim = "c(G) = a p^2 + b p^3 with a + b = d(Z(G))"
        if ctx.is_abelian or p == 2:
            return skip("needs non-abelian group, odd p", claim)
        if ctx.exponent not in (p, p * p):
            return skip("needs exp(G) in {p, p^2}", claim)
        if not ctx.flags.get("not_nontrivial_split"):
            return skip("group splits off an abelian factor", claim)
        if ctx.cd == (1, p):
            if ctx.dZ >= p:
                return skip("needs d(Z(G)) < p", claim)
        elif ctx.cd == (1, p, p * p):
            if ctx.dZ < 2:
                return skip("needs d(Z(G)) >= 2", claim)
            if not ctx.elementary_abelian_normal_of_index(p * p):
                return skip("no elementary abelian normal subgroup of index p^2", claim)
        else:
            return skip("needs cd(G) = {1, p} or {1, p, p^2}", claim)
        digits = base_p_digits(ctx.csol.value, p)
        ok = (
            len(digits) in (3, 4)
            and digits[0] == 0
            and digits[1] == 0
            and sum(digits) == ctx.dZ
        )
        return res(claim, ok)

    if property_id == "derived-max-abelian-divisibility":
        claim = "(max cd)|Z| divides c(G) and c(G) divides (max cd) exp(G')"
        if ctx.is_abelian or ctx.dZ != 1:
            return skip("needs non-abelian group with cyclic center", claim)
        if not ctx.derived.is_abelian():
            return skip("G' non-abelian", claim)
        A = ctx.max_abelian_normal
        if A.order != ctx.derived.order or not ctx.derived.is_abelian():
            return skip("G' is not of maximum order among abelian subgroups", claim)
        c = ctx.csol.value
        ok = c % (max(ctx.cd) * ctx.Z.order) == 0 and (
            max(ctx.cd) * gc._subgroup_exponent(G, ctx.derived)
        ) % c == 0
        return res(claim, ok)

    raise ValueError("unknown property id %r" % (property_id,))


def _max_abelian_normal_exponents(G, budget=200_000):
    """Exponents attained by abelian normal subgroups of maximal order.

    Same upward search as group_core.max_abelian_normal, but keeps every
    maximal-order terminal subgroup instead of a single best one.
    """
    Z = gc.center(G)
    perms = gc._gen_conj_perms(G)
    seen = set()
    nodes = [0]
    found = {}  # order -> set of exponents

    def extensions(A):
        C = gc.centralizer(G, A.gens)
        cand = {}
        for x in C.elems:
            x = int(x)
            if x in A.eset:
                continue
            if all(G.mul(int(G.inv[x]), int(perm[x])) in A.eset for perm in perms):
                B = gc.subgroup_closure(G, list(A.gens) + [x])
                cand.setdefault(B.elems.tobytes(), B)
        return [cand[k] for k in sorted(cand)]

    def dfs(A):
        nodes[0] += 1
        if nodes[0] > budget:
            raise BudgetExceeded("abelian normal subgroup search budget exceeded")
        if A.fingerprint in seen:
            return
        seen.add(A.fingerprint)
        ext = extensions(A)
        if not ext:
            found.setdefault(A.order, set()).add(gc._subgroup_exponent(G, A))
            return
        for B in ext:
            dfs(B)

    dfs(Z)
    return found[max(found)]


def _log(n, p):
    b = 0
    while n % p == 0 and n > 1:
        n //= p
        b += 1
    return b


def _group_checks(entry, timeout=None):
    family, p, params = entry
    ctx = GroupContext(family, p, params)
    t0 = time.time()
    results = []
    pending = [("value", q) for q in expected_values(family, p, params)]
    pending += [("property", pid) for pid in PROPERTY_IDS]
    for kind, name in pending:
        if timeout is not None and time.time() - t0 > timeout:
            check_id = ("value:" + name) if kind == "value" else name
            results.append(
                CheckResult(
                    check_id, ctx.group_id, "", None, None, "skipped",
                    "group timeout of %ds exhausted" % timeout,
                )
            )
            continue
        if kind == "value":
            results.append(check_value(ctx, name))
        else:
            results.append(check_property(ctx, name))
    return results


def run_corpus(suite, workers=None, timeout=None):
    """Run all checks of a suite; canonical ordering regardless of workers.

    ``timeout`` is a per-group wall-clock budget in seconds: checks that
    would start after the budget is spent are reported as skipped, never
    as failures.
    """
    if suite not in SUITES:
        raise ValueError("unknown suite %r (choose from %s)" % (suite, sorted(SUITES)))
    entries = SUITES[suite]
    if workers is None or workers <= 1:
        blocks = [_group_checks(e, timeout) for e in entries]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(lambda e: _group_checks(e, timeout), entries))
    out = []
    for block in blocks:
        out.extend(block)
    return out
