"""Exact character tables via the finite-field (Dixon-Schneider) method.

Class-matrix eigenspaces are split over F_q with q = 1 (mod exp(G)) and
q > 2*sqrt(|G|); eigenvalue data is lifted to exact cyclotomic integers
through discrete Fourier inversion at a fixed primitive root of unity
mod q.  No floating point is involved anywhere.
"""

from __future__ import annotations

import math

import numpy as np

from . import group_core
from .cyclotomic import CycInt, prime_power_radical
from .group_core import Subgroup, conjugacy_classes

__all__ = [
    "Character",
    "CharTable",
    "character_table",
    "check_orthogonality",
    "degree_set",
    "min_faithful_degree",
    "min_nonlinear_degree",
]


# -- linear algebra mod q -------------------------------------------------


def _rref(mat, q):
    """Row echelon form mod q; returns (rows, pivot_columns)."""
    m = mat % q
    rows = []
    pivots = []
    for r in m:
        r = r.copy()
        for piv, row in zip(pivots, rows):
            f = int(r[piv])
            if f:
                r = (r - f * row) % q
        nz = np.nonzero(r)[0]
        if len(nz):
            piv = int(nz[0])
            r = (r * pow(int(r[piv]), -1, q)) % q
            # back-substitute to keep reduced form
            for k, (p2, row2) in enumerate(zip(pivots, rows)):
                f = int(row2[piv])
                if f:
                    rows[k] = (row2 - f * r) % q
            rows.append(r)
            pivots.append(piv)
    return rows, pivots


def _nullspace(A, q):
    """Basis (columns) of the kernel of A mod q."""
    d = A.shape[1]
    rows, pivots = _rref(A, q)
    free = [j for j in range(d) if j not in pivots]
    basis = np.zeros((d, len(free)), dtype=np.int64)
    for idx, j in enumerate(free):
        basis[j, idx] = 1
        for piv, row in zip(pivots, rows):
            basis[piv, idx] = (-row[j]) % q
    return basis


def _minpoly_roots(A, q):
    """All eigenvalues of a diagonalizable matrix A over F_q."""
    d = A.shape[0]
    roots = set()
    covered = 0
    starts = [np.ones(d, dtype=np.int64)]
    starts += [np.eye(d, dtype=np.int64)[i] for i in range(d)]
    xs = np.arange(q, dtype=np.int64)
    for v in starts:
        poly = _minpoly_vector(A, v, q)
        acc = np.full(q, int(poly[-1]), dtype=np.int64)
        for c in poly[-2::-1]:
            acc = (acc * xs + int(c)) % q
        new = {int(x) for x in xs[acc == 0]}
        roots |= new
        # quick sufficiency test: do the eigenspaces fill the space?
        covered = sum(_nullspace((A - lam * np.eye(d, dtype=np.int64)) % q, q).shape[1] for lam in roots)
        if covered == d:
            break
    assert covered == d, "eigenvalue search failed to span (modular inconsistency)"
    return sorted(roots)


def _minpoly_vector(A, v, q):
    d = A.shape[0]
    rows = []
    combos = []
    pivots = []
    cur = v % q
    k = 0
    while True:
        c = np.zeros(d + 1, dtype=np.int64)
        c[k] = 1
        r = cur.copy()
        for piv, row, cm in zip(pivots, rows, combos):
            f = int(r[piv])
            if f:
                r = (r - f * row) % q
                c = (c - f * cm) % q
        nz = np.nonzero(r)[0]
        if len(nz) == 0:
            return c[: k + 1]
        piv = int(nz[0])
        inv = pow(int(r[piv]), -1, q)
        rows.append((r * inv) % q)
        combos.append((c * inv) % q)
        pivots.append(piv)
        cur = (A @ cur) % q
        k += 1


# -- table objects --------------------------------------------------------


class Character:
    """One irreducible character with exact cyclotomic values."""

    __slots__ = ("table", "index", "degree", "kernel_classes", "_kernel")

    def __init__(self, table, index, degree, kernel_classes):
        self.table = table
        self.index = index
        self.degree = degree
        self.kernel_classes = kernel_classes
        self._kernel = None

    @property
    def values(self):
        t = self.table
        return [CycInt(t.exponent, tuple(int(a) for a in t.coeffs[self.index, k])) for k in range(t.nclasses)]

    def value(self, k):
        t = self.table
        return CycInt(t.exponent, tuple(int(a) for a in t.coeffs[self.index, k]))

    @property
    def is_linear(self):
        return self.degree == 1

    @property
    def is_faithful(self):
        return self.kernel_classes == frozenset([0])

    def kernel(self):
        """Kernel as a Subgroup (union of kernel classes)."""
        if self._kernel is None:
            t = self.table
            cls = t.classes
            mask = np.isin(cls.class_of, sorted(self.kernel_classes))
            elems = np.nonzero(mask)[0]
            self._kernel = Subgroup(t.G, elems, group_core._small_gens(t.G, elems))
        return self._kernel


class CharTable:
    """Complete exact character table of a realized group."""

    def __init__(self, G, classes, exponent, q, coeffs, valmod, degrees):
        self.G = G
        self.classes = classes
        self.exponent = exponent
        self.prime_modulus = q
        self.coeffs = coeffs  # (nchars, nclasses, e) canonical cyclotomic coeffs
        self.valmod = valmod  # (nchars, nclasses) values mod q
        self.degrees = degrees
        self.nclasses = classes.nclasses
        kernel_sets = []
        for i in range(self.nclasses):
            row = coeffs[i]
            ker = frozenset(
                int(k)
                for k in range(self.nclasses)
                if row[k, 0] == degrees[i] and not row[k, 1:].any()
            )
            kernel_sets.append(ker)
        self.chars = [
            Character(self, i, int(degrees[i]), kernel_sets[i]) for i in range(self.nclasses)
        ]
        self._power_cols = None

    @property
    def nchars(self):
        return len(self.chars)

    def power_columns(self, t):
        """Column permutation sending class k to the class of rep**t."""
        cls = self.classes
        return np.array(
            [cls.power_map(k, t) for k in range(self.nclasses)], dtype=np.int64
        )

    def dump(self):
        """Human-readable table; values are polynomials in w = w_exponent."""
        cls = self.classes
        lines = []
        heads = []
        for k in range(self.nclasses):
            w = self.G.word(int(cls.reps[k]))
            name = "".join(self.G.spec.generators[g] for g in w) or "1"
            heads.append("%s(|%d|)" % (name, int(cls.sizes[k])))
        lines.append("classes: " + " ".join(heads))
        for ch in self.chars:
            vals = " ".join(str(ch.value(k)) for k in range(self.nclasses))
            lines.append("deg %d: %s" % (ch.degree, vals))
        return "\n".join(lines)


# -- construction ---------------------------------------------------------


def _choose_modulus(order, e):
    q = max(2 * math.isqrt(order) + 1, e + 1)
    q += (1 - q) % e
    while True:
        if q > 2 and all(q % d for d in range(2, math.isqrt(q) + 1)):
            return q
        q += e


def _primitive_root_of_unity(q, e):
    for g in range(2, q):
        z = pow(g, (q - 1) // e, q)
        # order must be exactly e
        p, _ = prime_power_radical(e)
        if pow(z, e // p, q) != 1:
            return z
    raise AssertionError("no primitive root found")


def _class_elements(G, cls):
    order = np.argsort(cls.class_of, kind="stable")
    bounds = np.cumsum(cls.sizes)
    out = []
    start = 0
    for b in bounds:
        out.append(np.sort(order[start:b]))
        start = int(b)
    return out


def _class_matrix(G, cls, celems, i, q):
    """M[j, k] = #{(x, y) in C_i x C_j : x*y = rep_k}, reduced mod q."""
    r = cls.nclasses
    M = np.zeros((r, r), dtype=np.int64)
    xs_inv = G.inv[celems[i]]
    for k in range(r):
        ys = G.apply_word(xs_inv, G.word(int(cls.reps[k])))
        np.add.at(M[:, k], cls.class_of[ys], 1)
    return M % q


def character_table(G, budget=20_000):
    """Compute the exact irreducible character table of G."""
    if G.order > budget:
        raise ValueError(
            "order %d exceeds character-table budget %d" % (G.order, budget)
        )
    cls = conjugacy_classes(G)
    r = cls.nclasses
    e = group_core.exponent(G)
    if e == 1:
        # trivial group
        coeffs = np.ones((1, 1, 1), dtype=np.int64)
        return CharTable(G, cls, 1, 2, coeffs, np.ones((1, 1), np.int64), np.array([1]))
    prime_power_radical(e)  # p-group scope check
    q = _choose_modulus(G.order, e)
    z = _primitive_root_of_unity(q, e)
    celems = _class_elements(G, cls)

    # split common eigenspaces of the class algebra
    spaces = [(np.eye(r, dtype=np.int64), list(range(r)))]
    class_order = sorted(range(1, r), key=lambda k: (int(cls.sizes[k]), k))
    for i in class_order:
        if all(B.shape[1] == 1 for B, _ in spaces):
            break
        M = _class_matrix(G, cls, celems, i, q)
        nxt = []
        for B, piv in spaces:
            d = B.shape[1]
            if d == 1:
                nxt.append((B, piv))
                continue
            A = (M @ B % q)[piv, :]
            if not ((A - A[0, 0] * np.eye(d, dtype=np.int64)) % q).any():
                nxt.append((B, piv))
                continue
            for lam in _minpoly_roots(A, q):
                C = _nullspace((A - lam * np.eye(d, dtype=np.int64)) % q, q)
                if C.shape[1] == 0:
                    continue
                B2 = (B @ C) % q
                rows, piv2 = _rref(B2.T, q)
                B2 = np.array(rows, dtype=np.int64).T
                nxt.append((B2, piv2))
        spaces = nxt
    assert all(B.shape[1] == 1 for B, _ in spaces), "eigenspace splitting incomplete"
    assert len(spaces) == r

    # central character vectors, normalized at the identity class
    lam = np.zeros((r, r), dtype=np.int64)
    for idx, (B, _) in enumerate(spaces):
        u = B[:, 0] % q
        assert u[0] % q != 0, "eigenvector vanishes at identity (inconsistency)"
        lam[idx] = (u * pow(int(u[0]), -1, q)) % q

    sizes_mod = cls.sizes % q
    inv_sizes = np.array([pow(int(s), -1, q) for s in sizes_mod], dtype=np.int64)
    invc = cls.inv_class
    # degrees: chi(1)^2 = |G| / sum_k lam_k lam_{k'} / |C_k|
    degs = np.zeros(r, dtype=np.int64)
    max_deg = math.isqrt(G.order)
    for idx in range(r):
        s = int((lam[idx] * lam[idx][invc] % q * inv_sizes % q).sum() % q)
        d2 = G.order % q * pow(s, -1, q) % q
        cand = [t for t in range(1, max_deg + 1) if t * t % q == d2 and G.order % t == 0]
        assert len(cand) == 1, "ambiguous degree lift (modulus too small)"
        degs[idx] = cand[0]

    # values mod q and exact lift
    X = lam * degs[:, None] % q * inv_sizes[None, :] % q
    coeffs = np.zeros((r, r, e), dtype=np.int64)
    inv_mod = {o: pow(o, -1, q) for o in {int(x) for x in cls.orders}}
    for k in range(r):
        o = int(cls.orders[k])
        pcls = cls.pow_class[k]
        zo = pow(z, e // o, q)
        tt = np.arange(o, dtype=np.int64)
        D = np.zeros((o, o), dtype=np.int64)
        zo_inv = pow(zo, q - 2, q)
        pows = np.array([pow(zo_inv, int(t), q) for t in range(o)], dtype=np.int64)
        for j in range(o):
            D[:, j] = pows[(tt * j) % o]
        mj = X[:, pcls] @ D % q * inv_mod[o] % q
        assert (mj <= degs[:, None]).all(), "lift out of range (inconsistency)"
        assert (mj.sum(axis=1) == degs).all(), "multiplicities do not sum to degree"
        coeffs[:, k, :: e // o] = mj
    _canonicalize_inplace(coeffs, e)

    # canonical row order: by degree, then lexicographic on coefficient rows
    order = sorted(range(r), key=lambda i: (int(degs[i]), coeffs[i].tobytes()))
    coeffs = coeffs[order]
    X = X[order]
    degs = degs[order]

    assert int((degs.astype(object) ** 2).sum()) == G.order, "degree sum check failed"
    table = CharTable(G, cls, e, q, coeffs, X, degs)
    full_kernel = frozenset(range(r))
    inter = full_kernel
    for ch in table.chars:
        inter &= ch.kernel_classes
    assert inter == frozenset([0]), "irreducibles do not separate the group"
    return table


def _canonicalize_inplace(coeffs, e):
    p, _ = prime_power_radical(e)
    m = e // p
    for j in range((p - 1) * m, e):
        a = coeffs[..., j].copy()
        if not a.any():
            continue
        s = j - (p - 1) * m
        for i in range(p - 1):
            coeffs[..., i * m + s] -= a
        coeffs[..., j] = 0


# -- queries --------------------------------------------------------------


def degree_set(table):
    return sorted({int(d) for d in table.degrees})


def min_faithful_degree(table):
    faithful = [ch.degree for ch in table.chars if ch.is_faithful]
    if not faithful:
        raise ValueError("no faithful irreducible character (center is not cyclic)")
    return min(faithful)


def min_nonlinear_degree(table):
    nl = [ch.degree for ch in table.chars if not ch.is_linear]
    if not nl:
        raise ValueError("group is abelian: no nonlinear characters")
    return min(nl)


def check_orthogonality(table):
    """Exact first/second orthogonality; False aborts the pipeline."""
    G = table.G
    cls = table.classes
    q = table.prime_modulus
    e = table.exponent
    w = cls.sizes
    invc = cls.inv_class
    n = table.nchars

    if e == 1:  # trivial group: single character with value 1
        return G.order == 1 and n == 1 and int(table.coeffs[0, 0, 0]) == 1

    # second orthogonality against the identity column, exact integers
    col = np.einsum("i,ikj->kj", table.degrees, table.coeffs)
    expected = np.zeros_like(col)
    expected[0, 0] = G.order
    if not (col == expected).all():
        return False

    # first orthogonality, all pairs, mod q (necessary condition)
    V = table.valmod
    g = V * w[None, :] % q @ V[:, invc].T % q
    if not ((g - np.eye(n, dtype=np.int64) * (G.order % q)) % q == 0).all():
        return False

    # exact diagonal norms via coefficient convolution
    for i in range(n):
        a = table.coeffs[i].astype(object)
        b = table.coeffs[i][invc].astype(object)
        T = np.einsum("ku,kv->uv", a * w[:, None].astype(object), b)
        c = np.zeros(e, dtype=object)
        for u in range(e):
            for v in range(e):
                if T[u, v]:
                    c[(u + v) % e] += T[u, v]
        cy = _reduce_obj(c, e)
        if cy[0] != G.order or any(cy[1:]):
            return False

    # exact all-pairs check for small tables
    if G.order <= 2000:
        for i in range(n):
            a = table.coeffs[i].astype(object) * w[:, None].astype(object)
            for j in range(i + 1, n):
                b = table.coeffs[j][invc].astype(object)
                T = np.einsum("ku,kv->uv", a, b)
                c = np.zeros(e, dtype=object)
                for u in range(e):
                    for v in range(e):
                        if T[u, v]:
                            c[(u + v) % e] += T[u, v]
                if any(_reduce_obj(c, e)):
                    return False
    return True


def _reduce_obj(c, e):
    p, _ = prime_power_radical(e)
    m = e // p
    c = list(c)
    for j in range((p - 1) * m, e):
        a = c[j]
        if a:
            c[j] = 0
            s = j - (p - 1) * m
            for i in range(p - 1):
                c[i * m + s] -= a
    return c
