"""Coset enumeration kernel (HLT with coincidence handling).

This file is plain Python that is also valid Cython pure-mode source; the
build compiles it to an extension module when Cython is available and the
package falls back to interpreting it otherwise.  `COMPILED` reports which
variant is in use.

Cosets are rows of a table over the alphabet of generators and inverses:
column 2*i is generator i, column 2*i+1 its inverse.  Relators are given as
sequences of column indices.
"""

try:
    import cython

    COMPILED = cython.compiled
except ImportError:  # pragma: no cover - cython is a build convenience only
    COMPILED = False


class BudgetExceeded(RuntimeError):
    """Raised when the coset table outgrows the row budget before closure."""


def enumerate_cosets(ncols, relators, limit):
    """Run HLT coset enumeration over the trivial subgroup.

    Returns (nlive, table) where table is a list of rows over all ncols
    columns, restricted and renumbered to live cosets in breadth-first
    order (definition order from coset 0 through generator columns).
    """
    UNDEF = -1
    tab = [[UNDEF] * ncols]
    p = [0]

    def rep(k):
        # union-find representative with path compression
        r = k
        while p[r] != r:
            r = p[r]
        while p[k] != r:
            p[k], k = r, p[k]
        return r

    def define(a, x):
        if len(tab) >= limit:
            raise BudgetExceeded(
                "coset table exceeded %d rows before closure" % limit
            )
        b = len(tab)
        tab.append([UNDEF] * ncols)
        p.append(b)
        tab[a][x] = b
        tab[b][x ^ 1] = a
        return b

    def coincidence(a, b):
        queue = []

        def merge(k, l):
            k = rep(k)
            l = rep(l)
            if k != l:
                if k > l:
                    k, l = l, k
                p[l] = k
                queue.append(l)

        merge(a, b)
        qi = 0
        while qi < len(queue):
            y = queue[qi]
            qi += 1
            row = tab[y]
            for x in range(ncols):
                d = row[x]
                if d != UNDEF:
                    tab[d][x ^ 1] = UNDEF
                    mu = rep(y)
                    nu = rep(d)
                    t = tab[mu][x]
                    if t != UNDEF:
                        merge(nu, t)
                    else:
                        t = tab[nu][x ^ 1]
                        if t != UNDEF:
                            merge(mu, t)
                        else:
                            tab[mu][x] = nu
                            tab[nu][x ^ 1] = mu

    def scan_and_fill(a, w):
        n = len(w)
        f = a
        i = 0
        b = a
        j = n - 1
        while True:
            while i <= j:
                t = tab[f][w[i]]
                if t == UNDEF:
                    break
                f = t
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i:
                t = tab[b][w[j] ^ 1]
                if t == UNDEF:
                    break
                b = t
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                tab[f][w[i]] = b
                tab[b][w[i] ^ 1] = f
                return
            define(f, w[i])

    alpha = 0
    while alpha < len(tab):
        if p[alpha] == alpha:
            for w in relators:
                scan_and_fill(alpha, w)
                if p[alpha] != alpha:
                    break
            if p[alpha] == alpha:
                for x in range(ncols):
                    if tab[alpha][x] == UNDEF:
                        define(alpha, x)
        alpha += 1

    # breadth-first renumbering of live cosets through generator columns
    start = rep(0)
    order = [start]
    newid = {start: 0}
    qi = 0
    while qi < len(order):
        y = order[qi]
        qi += 1
        row = tab[y]
        for g in range(0, ncols, 2):
            d = rep(row[g])
            if d not in newid:
                newid[d] = len(order)
                order.append(d)
    n = len(order)
    out = [[0] * ncols for _ in range(n)]
    for a in range(n):
        row = tab[order[a]]
        orow = out[a]
        for x in range(ncols):
            orow[x] = newid[rep(row[x])]
    return n, out
