"""Minimal faithful permutation degree mu(G).

A faithful permutation representation of minimal degree is a disjoint
union of coset actions G/H_1, ..., G/H_n whose cores intersect trivially;
equivalently every minimal normal subgroup must avoid some core.  The
solver enumerates subgroups top-down (a subgroup below one with trivial
core is always dominated), keeps the cheapest subgroup per avoidance
pattern, and finishes with an exact weighted set cover.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._tc_core import BudgetExceeded
from .group_core import (
    Subgroup,
    abelian_invariants,
    center,
    core,
    maximal_subgroups,
    minimal_normal_subgroups,
    trivial_subgroup,
    whole_group,
)

__all__ = [
    "MuSolution",
    "solve_mu",
    "mu_bruteforce",
    "realize_permutation",
    "cross_check_c_mu",
]


@dataclass
class MuSolution:
    """A minimizing faithful collection of point stabilizers."""

    value: int  # mu(G) = sum of indexes
    subgroups: tuple  # chosen stabilizers, sorted by index
    indexes: tuple
    nodes: int  # search nodes spent

    @property
    def orbit_count(self):
        return len(self.subgroups)


def _avoid_mask(targets, C):
    mask = 0
    for j, N in enumerate(targets):
        if not (N.eset <= C.eset):
            mask |= 1 << j
    return mask


def solve_mu(G, budget=1_000_000, upper_hint=None):
    """Exact mu(G); ``upper_hint`` is a known lower bound used to exit early
    once it is attained (for odd-order p-groups, c(G) qualifies)."""
    if G.order == 1:
        return MuSolution(1, (whole_group(G),), (1,), 0)
    targets = minimal_normal_subgroups(G)
    s = len(targets)
    full = (1 << s) - 1
    nodes = 0

    # enumerate candidate stabilizers; stop descending below trivial cores
    reps = {}  # avoid mask -> (index, Subgroup)
    seen = set()
    root = whole_group(G)
    stack = [root]
    seen.add(root.fingerprint)
    while stack:
        H = stack.pop()
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("subgroup enumeration exceeded %d nodes" % budget)
        C = core(G, H)
        mask = _avoid_mask(targets, C)
        idx = H.index
        if mask not in reps or idx < reps[mask][0]:
            reps[mask] = (idx, H)
        if C.order == 1 or H.order == 1:
            continue
        for M in maximal_subgroups(G, H):
            if M.fingerprint not in seen:
                seen.add(M.fingerprint)
                stack.append(M)

    # exact weighted set cover over avoidance patterns
    cands = sorted(
        ((idx, mask, H) for mask, (idx, H) in reps.items() if mask),
        key=lambda t: (t[0], -bin(t[1]).count("1")),
    )
    best = {"value": None, "sets": None}

    def dfs(i, covered, total, chosen):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("cover search exceeded %d nodes" % budget)
        if best["value"] is not None and total >= best["value"]:
            return
        if covered == full:
            best["value"] = total
            best["sets"] = list(chosen)
            return
        for k in range(i, len(cands)):
            idx, mask, H = cands[k]
            if covered | mask == covered:
                continue
            dfs(k + 1, covered | mask, total + idx, chosen + [H])
            if best["value"] is not None and upper_hint is not None and best["value"] <= upper_hint:
                return

    dfs(0, 0, 0, [])
    assert best["value"] is not None, "no faithful collection found"
    chosen = sorted(best["sets"], key=lambda H: H.index)
    acc = None
    for H in chosen:
        C = core(G, H)
        acc = C.eset if acc is None else acc & C.eset
    assert acc == {0}, "chosen collection is not faithful"
    return MuSolution(
        best["value"], tuple(chosen), tuple(H.index for H in chosen), nodes
    )


def mu_bruteforce(G, max_order=800):
    """Independent mu oracle: exhaustive search over all subgroups."""
    from .group_core import all_subgroups

    if G.order > max_order:
        raise ValueError("brute-force oracle limited to order <= %d" % max_order)
    if G.order == 1:
        return 1
    targets = minimal_normal_subgroups(G)
    full = (1 << len(targets)) - 1
    items = []
    for H in all_subgroups(G):
        C = core(G, H)
        mask = _avoid_mask(targets, C)
        if mask:
            items.append((H.index, mask))
    items.sort()
    best = [None]

    def dfs(i, covered, total):
        if best[0] is not None and total >= best[0]:
            return
        if covered == full:
            best[0] = total
            return
        for k in range(i, len(items)):
            idx, mask = items[k]
            if covered | mask != covered:
                dfs(k + 1, covered | mask, total + idx)

    dfs(0, 0, 0)
    return best[0]


def realize_permutation(G, solution):
    """Concrete faithful action for a MuSolution.

    Returns (degree, gen_perms, cycles) where gen_perms[i] is the image of
    generator i on 0..degree-1 and cycles renders each image in cycle
    notation.  Faithfulness is re-verified from scratch.
    """
    blocks = []
    offset = 0
    ngens = G.gen_perms.shape[0]
    gen_images = [[] for _ in range(ngens)]
    for H in solution.subgroups:
        helems = np.array(sorted(H.eset), dtype=np.int64)
        # right cosets Hx, labelled by their minimal element
        coset_rep = np.full(G.order, -1, dtype=np.int64)
        labels = {}
        for x in range(G.order):
            if coset_rep[x] >= 0:
                continue
            cos = G.apply_word(helems, G.word(x)) if x else helems
            lead = int(cos.min())
            coset_rep[cos] = lead
            labels[lead] = len(labels) + offset
        assert len(labels) == H.index
        for i in range(ngens):
            img = np.empty(H.index, dtype=np.int64)
            for lead, pt in labels.items():
                img[pt - offset] = labels[int(coset_rep[G.gen_perms[i][lead]])]
            gen_images[i].append(img)
        offset += H.index
    degree = offset
    perms = [np.concatenate(parts) for parts in gen_images]

    # independent faithfulness check: the images generate a group of order |G|
    ident = tuple(range(degree))
    closure = {ident}
    frontier = [np.arange(degree, dtype=np.int64)]
    gen_arrs = perms
    while frontier:
        cur = frontier.pop()
        for g in gen_arrs:
            nxt = g[cur]
            key = tuple(int(v) for v in nxt)
            if key not in closure:
                closure.add(key)
                frontier.append(nxt)
                assert len(closure) <= G.order
    assert len(closure) == G.order, "realized action is not faithful"
    assert degree == solution.value
    cycles = [_cycle_string(p) for p in perms]
    return degree, perms, cycles


def _cycle_string(perm):
    n = len(perm)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = int(perm[i])
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = int(perm[j])
        out.append("(" + " ".join(str(x) for x in cyc) + ")")
    return "".join(out) or "()"


def cross_check_c_mu(table, budget=1_000_000):
    """Compute (c, mu) and assert equality for odd-order groups."""
    from .group_core import _group_prime
    from .quasiperm import solve_c

    G = table.G
    csol = solve_c(table)
    msol = solve_mu(G, budget=budget, upper_hint=csol.value)
    if G.order > 1 and _group_prime(G) % 2 == 1:
        assert csol.value == msol.value, (
            "c = %d but mu = %d" % (csol.value, msol.value)
        )
    return csol, msol
