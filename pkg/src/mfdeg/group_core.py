"""Structural algorithms on a realized group.

All operations are pure functions of immutable inputs; subgroups carry
their full element sets (orders in scope are at most 5**6), a small
generating set, and a canonical fingerprint used for memoization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Subgroup",
    "Classes",
    "AbelianInvariants",
    "subgroup_closure",
    "trivial_subgroup",
    "whole_group",
    "conjugacy_classes",
    "center",
    "derived_subgroup",
    "exponent",
    "centralizer",
    "core",
    "normal_closure",
    "intersection",
    "is_normal",
    "maximal_subgroups",
    "frattini_subgroup",
    "frattini_quotient_rank",
    "abelian_invariants",
    "max_abelian_normal",
    "nilpotency_class",
    "minimal_normal_subgroups",
    "all_subgroups",
]


class Subgroup:
    """A subgroup given by its full element set."""

    __slots__ = ("parent", "elems", "eset", "gens", "_fp")

    def __init__(self, parent, elems, gens):
        self.parent = parent
        self.elems = np.sort(np.asarray(elems, dtype=np.int64))
        self.eset = frozenset(int(x) for x in self.elems)
        self.gens = tuple(int(g) for g in gens)
        self._fp = None

    @property
    def order(self):
        return len(self.elems)

    @property
    def index(self):
        return self.parent.order // self.order

    @property
    def fingerprint(self):
        if self._fp is None:
            self._fp = hash(self.elems.tobytes())
        return self._fp

    def __contains__(self, x):
        return int(x) in self.eset

    def __eq__(self, other):
        return self.eset == other.eset

    def __hash__(self):
        return self.fingerprint

    def __le__(self, other):
        return self.eset <= other.eset

    def is_trivial(self):
        return self.order == 1

    def is_abelian(self):
        G = self.parent
        for i, a in enumerate(self.gens):
            for b in self.gens[i + 1 :]:
                if G.mul(a, b) != G.mul(b, a):
                    return False
        return True

    def __repr__(self):
        return "Subgroup(order=%d of %d)" % (self.order, self.parent.order)


def subgroup_closure(G, gens):
    """Smallest subgroup of G containing the given element ids."""
    gens = sorted({int(g) for g in gens} - {0})
    elems = {0}
    frontier = [0]
    words = [G.word(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for w in words:
                y = int(G.apply_word(x, w))
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, list(elems), gens)


def trivial_subgroup(G):
    return Subgroup(G, [0], ())


def whole_group(G):
    # generator element ids: image of identity under each generator
    gens = [int(G.gen_perms[i][0]) for i in range(G.ngens)]
    return Subgroup(G, np.arange(G.order), gens)


def _gen_conj_perms(G):
    perms = getattr(G, "_conj_perms", None)
    if perms is None:
        perms = [G.conj_perm(int(G.gen_perms[i][0])) for i in range(G.ngens)]
        G._conj_perms = perms
    return perms


# -- conjugacy ----------------------------------------------------------


@dataclass
class Classes:
    """Conjugacy classes with representatives, sizes and power maps."""

    class_of: np.ndarray
    reps: np.ndarray
    sizes: np.ndarray
    orders: np.ndarray
    pow_class: list
    inv_class: np.ndarray

    @property
    def nclasses(self):
        return len(self.reps)

    def power_map(self, c, k):
        row = self.pow_class[c]
        return int(row[k % len(row)])


def conjugacy_classes(G):
    """Partition elements into conjugacy classes (orbit algorithm)."""
    cached = getattr(G, "_classes", None)
    if cached is not None:
        return cached
    n = G.order
    perms = _gen_conj_perms(G)
    class_of = np.full(n, -1, dtype=np.int64)
    reps = []
    sizes = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        cid = len(reps)
        class_of[x] = cid
        orbit = [x]
        qi = 0
        while qi < len(orbit):
            y = orbit[qi]
            qi += 1
            for perm in perms:
                z = int(perm[y])
                if class_of[z] < 0:
                    class_of[z] = cid
                    orbit.append(z)
        reps.append(x)
        sizes.append(len(orbit))
    reps = np.array(reps, dtype=np.int64)
    sizes = np.array(sizes, dtype=np.int64)
    # power classes: pow_class[c][k] = class of rep**k, k < order(rep)
    pow_class = []
    orders = []
    for r in reps:
        w = G.word(int(r))
        row = [0]
        y = int(G.apply_word(0, w))
        while y != 0:
            row.append(int(class_of[y]))
            y = int(G.apply_word(y, w))
        pow_class.append(np.array(row, dtype=np.int64))
        orders.append(len(row))
    orders = np.array(orders, dtype=np.int64)
    inv_class = np.array(
        [pow_class[c][-1 % orders[c]] if orders[c] > 1 else 0 for c in range(len(reps))],
        dtype=np.int64,
    )
    for c in range(len(reps)):
        inv_class[c] = pow_class[c][(orders[c] - 1) % orders[c]]
    cls = Classes(class_of, reps, sizes, orders, pow_class, inv_class)
    G._classes = cls
    return cls


def center(G):
    cls = conjugacy_classes(G)
    central = cls.reps[cls.sizes == 1]
    return Subgroup(G, central, _small_gens(G, central))


def _small_gens(G, elems):
    """Greedy small generating set for a subgroup given by its elements."""
    elems = sorted(int(x) for x in elems)
    have = {0}
    gens = []
    for x in elems:
        if x not in have:
            gens.append(x)
            have = subgroup_closure(G, gens).eset
            if len(have) == len(elems):
                break
    return gens


def derived_subgroup(G):
    cached = getattr(G, "_derived", None)
    if cached is not None:
        return cached
    gens = [int(G.gen_perms[i][0]) for i in range(G.ngens)]
    comms = set()
    inv = G.inv
    for a in gens:
        for b in gens:
            ab = G.mul(a, b)
            ba = G.mul(b, a)
            comms.add(G.mul(int(inv[ba]), ab))  # (ba)^-1 (ab) = [a,b]
    D = normal_closure(G, comms)
    G._derived = D
    return D


def exponent(G):
    cls = conjugacy_classes(G)
    return int(math.lcm(*(int(o) for o in cls.orders)))


def centralizer(G, elems):
    """Centralizer of a set of element ids, as a Subgroup."""
    mask = np.ones(G.order, dtype=bool)
    idx = np.arange(G.order)
    for s in elems:
        cp = G.conj_perm(int(s))
        mask &= cp == idx
    fixed = idx[mask]
    return Subgroup(G, fixed, _small_gens(G, fixed))


def conjugate_subgroup(G, H, perm):
    """Image of H under a precomputed conjugation permutation."""
    elems = perm[H.elems]
    return Subgroup(G, elems, [int(perm[g]) for g in H.gens])


def is_normal(G, H):
    perms = _gen_conj_perms(G)
    for perm in perms:
        for g in H.gens:
            if int(perm[g]) not in H.eset:
                return False
    return True


def core(G, H):
    """Largest normal subgroup of G contained in H."""
    perms = _gen_conj_perms(G)
    elems = H.elems
    while True:
        cur = elems
        for perm in perms:
            cur = np.intersect1d(cur, np.sort(perm[cur]), assume_unique=True)
        if len(cur) == len(elems):
            break
        elems = cur
    eset = frozenset(int(x) for x in elems)
    gens = [g for g in H.gens if g in eset]
    if subgroup_closure(G, gens).order != len(elems):
        gens = _small_gens(G, elems)
    return Subgroup(G, elems, gens)


def normal_closure(G, seed):
    """Smallest normal subgroup of G containing the seed elements."""
    perms = _gen_conj_perms(G)
    gens = sorted({int(x) for x in seed} - {0})
    K = subgroup_closure(G, gens)
    while True:
        new = []
        for perm in perms:
            for g in K.gens:
                c = int(perm[g])
                if c not in K.eset:
                    new.append(c)
        if not new:
            return K
        gens = list(K.gens) + new
        K = subgroup_closure(G, gens)


def intersection(G, H, K):
    elems = np.intersect1d(H.elems, K.elems, assume_unique=True)
    return Subgroup(G, elems, _small_gens(G, elems))


# -- p-group structure --------------------------------------------------


def _group_prime(G):
    n = G.order
    if n == 1:
        return None
    for p in range(2, n + 1):
        if n % p == 0:
            q = n
            while q % p == 0:
                q //= p
            if q != 1:
                raise ValueError("group of order %d is not a p-group" % n)
            return p
    return None


def frattini_subgroup(G, H):
    """Frattini subgroup of a p-subgroup H: H' * H^p."""
    p = _group_prime(G)
    seed = set()
    inv = G.inv
    for a in H.gens:
        seed.add(G.power(a, p))
        for b in H.gens:
            ab = G.mul(a, b)
            ba = G.mul(b, a)
            seed.add(G.mul(int(inv[ba]), ab))
    # normal closure inside H
    K = subgroup_closure(G, seed)
    while True:
        new = []
        for h in H.gens:
            cp = None
            for g in K.gens:
                if cp is None:
                    cp = G.conj_perm(h)
                c = int(cp[g])
                if c not in K.eset:
                    new.append(c)
        if not new:
            return K
        K = subgroup_closure(G, list(K.gens) + new)


def frattini_quotient_rank(G, H):
    """Minimal number of generators d(H) of a p-subgroup H."""
    if H.order == 1:
        return 0
    p = _group_prime(G)
    phi = frattini_subgroup(G, H)
    return round(math.log(H.order // phi.order, p))


def _coset_vectors(G, H, phi, p):
    """Label elements of H with F_p vectors for their coset mod phi."""
    coset_of = {}
    reps = []
    for x in H.elems:
        x = int(x)
        if x in coset_of:
            continue
        cid = len(reps)
        reps.append(x)
        for y in phi.elems:
            coset_of[G.mul(int(y), x)] = cid
    nc = len(reps)
    d = round(math.log(nc, p))
    vec = {coset_of[0]: (0,) * d}
    basis = []
    for cid in range(nc):
        if cid in vec:
            continue
        i = len(basis)
        basis.append(reps[cid])
        b = reps[cid]
        for c0, v0 in list(vec.items()):
            x = reps[c0]
            for k in range(1, p):
                x = G.mul(x, b)
                v = list(v0)
                v[i] = k
                vec[coset_of[x]] = tuple(v)
    assert len(vec) == nc and len(basis) == d
    elem2vec = {int(x): vec[coset_of[int(x)]] for x in H.elems}
    return elem2vec, basis, d


def maximal_subgroups(G, H):
    """All index-p subgroups of a p-subgroup H."""
    p = _group_prime(G)
    if H.order == 1:
        raise ValueError("trivial subgroup has no maximal subgroups")
    phi = frattini_subgroup(G, H)
    elem2vec, basis, d = _coset_vectors(G, H, phi, p)
    out = []
    # hyperplanes = kernels of nonzero functionals, one per projective point
    for a in _projective_points(d, p):
        kern_elems = [x for x, v in elem2vec.items() if sum(ai * vi for ai, vi in zip(a, v)) % p == 0]
        gens = list(phi.gens) + _hyperplane_reps(a, basis, G, p, d)
        M = Subgroup(G, kern_elems, gens)
        if subgroup_closure(G, M.gens).order != M.order:
            M = Subgroup(G, kern_elems, _small_gens(G, kern_elems))
        out.append(M)
    assert len(out) == (p**d - 1) // (p - 1)
    return out


def _projective_points(d, p):
    pts = []
    for first in range(d):
        vec = [0] * d
        vec[first] = 1
        tails = [[]]
        for _ in range(d - first - 1):
            tails = [t + [c] for t in tails for c in range(p)]
        for t in tails:
            pts.append(tuple(vec[: first + 1] + t))
    return pts


def _hyperplane_reps(a, basis, G, p, d):
    """Preimages of a basis of the kernel of functional a."""
    pivot = next(i for i, ai in enumerate(a) if ai % p)
    reps = []
    inv_piv = pow(a[pivot], -1, p)
    for j in range(d):
        if j == pivot:
            continue
        # kernel vector e_j - (a_j / a_pivot) e_pivot
        coef = (-a[j] * inv_piv) % p
        x = basis[j]
        if coef:
            x = G.mul(x, G.power(basis[pivot], coef))
        reps.append(x)
    return reps


@dataclass(frozen=True)
class AbelianInvariants:
    """Primary decomposition of an abelian p-group as prime powers."""

    factors: tuple  # sorted tuple of prime powers

    @property
    def rank(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)


def abelian_invariants(G, A):
    """Primary decomposition of an abelian subgroup from its layer ranks."""
    if not A.is_abelian():
        raise ValueError("subgroup is not abelian")
    if A.order == 1:
        return AbelianInvariants(())
    p = _group_prime(G)
    orders = [G.element_order(int(x)) for x in A.elems]
    emax = round(math.log(max(orders), p))
    # n_i = number of elements of order dividing p^i
    d_prev = None
    counts = []
    for i in range(emax + 1):
        n_i = sum(1 for o in orders if p**i % o == 0)
        counts.append(round(math.log(n_i, p)))
    factors = []
    for i in range(1, emax + 1):
        d_i = counts[i] - counts[i - 1]
        d_next = counts[i + 1] - counts[i] if i < emax else 0
        factors.extend([p**i] * (d_i - d_next))
    fac = tuple(sorted(factors))
    assert math.prod(fac) == A.order
    return AbelianInvariants(fac)


def max_abelian_normal(G, budget=200_000):
    """An abelian normal subgroup of maximal order (ties: larger exponent).

    Upward search from Z(G): every maximal abelian normal subgroup contains
    the center, and each non-maximal stage extends by a coset that is
    central modulo the current stage.
    """
    Z = center(G)
    best = [Z, _subgroup_exponent(G, Z)]
    seen = set()
    nodes = [0]
    perms = _gen_conj_perms(G)

    def extensions(A):
        # candidates x with x in C_G(A), x central mod A; one per coset of A
        C = centralizer(G, A.gens)
        cand = {}
        for x in C.elems:
            x = int(x)
            if x in A.eset:
                continue
            if all(G.mul(int(G.inv[x]), int(perm[x])) in A.eset for perm in perms):
                B = subgroup_closure(G, list(A.gens) + [x])
                cand.setdefault(B.elems.tobytes(), B)
        return [cand[k] for k in sorted(cand)]

    def dfs(A):
        nodes[0] += 1
        if nodes[0] > budget:
            raise RuntimeError("max_abelian_normal search budget exceeded")
        if A.fingerprint in seen:
            return
        seen.add(A.fingerprint)
        ext = extensions(A)
        if not ext:
            e = _subgroup_exponent(G, A)
            if (A.order, e) > (best[0].order, best[1]):
                best[0], best[1] = A, e
            return
        for B in ext:
            assert B.is_abelian() and is_normal(G, B)
            dfs(B)

    dfs(Z)
    return best[0]


def _subgroup_exponent(G, A):
    return int(math.lcm(*(G.element_order(int(x)) for x in A.gens))) if A.gens else 1


def nilpotency_class(G):
    if whole_group(G).order == 1:
        return 0
    Gw = whole_group(G)
    prev = Gw
    cur = derived_subgroup(G)
    c = 1
    gens = [int(G.gen_perms[i][0]) for i in range(G.ngens)]
    inv = G.inv
    while cur.order > 1:
        c += 1
        seed = set()
        for a in cur.gens:
            for b in gens:
                ab = G.mul(a, b)
                ba = G.mul(b, a)
                seed.add(G.mul(int(inv[ba]), ab))
        nxt = normal_closure(G, seed)
        if nxt.order == cur.order:
            raise ValueError("group is not nilpotent")
        cur = nxt
    return c


def minimal_normal_subgroups(G):
    """Minimal normal subgroups of a p-group: order-p subgroups of soc(Z)."""
    p = _group_prime(G)
    Z = center(G)
    socle = [int(x) for x in Z.elems if G.element_order(int(x)) in (1, p)]
    seen = set()
    out = []
    for x in socle:
        if x == 0 or x in seen:
            continue
        H = subgroup_closure(G, [x])
        key = H.elems.tobytes()
        if key not in seen:
            seen.add(key)
            seen.update({int(y) for y in H.elems} - {0})
            out.append(H)
    return out


def all_subgroups(G, max_order=None):
    """Every subgroup of G by index-p extension (test oracle; small G only).

    In a p-group every subgroup is reached from the trivial group through a
    chain of index-p steps, and each step adjoins an element x that
    normalizes the current subgroup H with x**p in H; then H<x> is the union
    of the p cosets H x**i.
    """
    if max_order is None:
        max_order = G.order
    if G.order == 1:
        return [trivial_subgroup(G)]
    p = _group_prime(G)
    inv = G.inv
    xpow = [G.power(x, p) for x in range(G.order)]
    triv = trivial_subgroup(G)
    found = {triv.elems.tobytes(): triv}
    frontier = [triv]
    while frontier:
        nxt = []
        for H in frontier:
            if H.order * p > max_order:
                continue
            for x in range(1, G.order):
                if x in H.eset or xpow[x] not in H.eset:
                    continue
                xi = int(inv[x])
                if any(G.mul(G.mul(xi, h), x) not in H.eset for h in H.gens):
                    continue
                elems = list(H.eset)
                coset = H.elems
                for _ in range(p - 1):
                    coset = G.right_perm(x)[coset]
                    elems.extend(int(y) for y in coset)
                K = Subgroup(G, elems, list(H.gens) + [x])
                key = K.elems.tobytes()
                if key not in found:
                    found[key] = K
                    nxt.append(K)
        frontier = nxt
    return sorted(found.values(), key=lambda s: (s.order, s.elems.tobytes()))
