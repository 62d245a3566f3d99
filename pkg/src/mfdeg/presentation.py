"""Group presentations and their regular realization.

Words over the generators are stored as tuples of signed integers:
``+(i+1)`` is generator ``i`` and ``-(i+1)`` its inverse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from ._tc_core import BudgetExceeded, enumerate_cosets

__all__ = [
    "GroupSpec",
    "RegularGroup",
    "PresentationError",
    "BudgetExceeded",
    "parse_presentation",
    "enumerate_regular",
    "inverse_word",
    "commutator",
    "word_pow",
]


class PresentationError(ValueError):
    """Malformed presentation text; carries the byte offset of the error."""

    def __init__(self, message, offset):
        super().__init__("%s (at offset %d)" % (message, offset))
        self.offset = offset


def inverse_word(w):
    return tuple(-s for s in reversed(w))


def word_pow(w, k):
    if k < 0:
        return inverse_word(word_pow(w, -k))
    return tuple(w) * k


def commutator(x, y):
    """[x, y] = x^-1 y^-1 x y."""
    return inverse_word(x) + inverse_word(y) + tuple(x) + tuple(y)


@dataclass(frozen=True)
class GroupSpec:
    """A finite presentation plus catalog metadata."""

    generators: tuple
    relators: tuple
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        ngens = len(self.generators)
        for w in self.relators:
            for s in w:
                if s == 0 or abs(s) > ngens:
                    raise ValueError("relator letter %d out of range" % s)


_TOKEN = re.compile(
    r"\s+|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>-?\d+)|(?P<punc>[;,^*=\[\]()])"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PresentationError("unexpected character %r" % text[pos], pos)
        if m.lastgroup is not None:
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        # blank out comments, preserving offsets
        text = re.sub(r"#[^\n]*", lambda m: " " * len(m.group()), text)
        self.toks = _tokenize(text)
        self.i = 0
        self.gens = {}

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        k, v, off = self.toks[self.i]
        if (kind is not None and k != kind) or (value is not None and v != value):
            raise PresentationError(
                "expected %s, found %r" % (value or kind, v or "end of input"), off
            )
        self.i += 1
        return v, off

    def parse(self):
        v, off = self.take("name")
        if v != "gens":
            raise PresentationError("presentation must start with 'gens'", off)
        names = [self.take("name")[0]]
        while self.peek()[1] == ",":
            self.take()
            names.append(self.take("name")[0])
        if len(set(names)) != len(names):
            raise PresentationError("duplicate generator name", off)
        self.gens = {nm: i for i, nm in enumerate(names)}
        self.take("punc", ";")
        v, off = self.take("name")
        if v != "rels":
            raise PresentationError("expected 'rels'", off)
        rels = [self.relation()]
        while self.peek()[1] == ",":
            self.take()
            rels.append(self.relation())
        if self.peek()[1] == ";":
            self.take()
        self.take("end")
        return GroupSpec(tuple(names), tuple(rels))

    def relation(self):
        lhs = self.word()
        if self.peek()[1] == "=":
            self.take()
            rhs = self.word()
            return lhs + inverse_word(rhs)
        return lhs

    def word(self):
        w = list(self.factor())
        while True:
            k, v, _ = self.peek()
            if v == "*":
                self.take()
                continue
            if k == "name" or v in ("[", "("):
                w.extend(self.factor())
            else:
                return tuple(w)

    def factor(self):
        atom = self.atom()
        if self.peek()[1] == "^":
            self.take()
            v, off = self.take("int")
            return word_pow(atom, int(v))
        return atom

    def atom(self):
        k, v, off = self.peek()
        if k == "name":
            self.take()
            if v not in self.gens:
                raise PresentationError("unknown generator %r" % v, off)
            return (self.gens[v] + 1,)
        if v == "(":
            self.take()
            w = self.word()
            self.take("punc", ")")
            return w
        if v == "[":
            self.take()
            x = self.word()
            self.take("punc", ",")
            y = self.word()
            self.take("punc", "]")
            return commutator(x, y)
        raise PresentationError("expected a word", off)


def parse_presentation(text):
    """Parse presentation text (`gens a,b; rels [a,b], a^3 = b;`)."""
    return _Parser(text).parse()


def _word_to_cols(w):
    return tuple(2 * (s - 1) if s > 0 else 2 * (-s - 1) + 1 for s in w)


class RegularGroup:
    """Frozen regular action of a finite presented group.

    Elements are ids ``0..order-1`` with 0 the identity.  ``gen_perms[i]``
    is the permutation x -> x * g_i; multiplication routes through the
    breadth-first definition word of the right factor, so no |G| x |G|
    table is ever materialized.
    """

    def __init__(self, spec, order, table):
        self.spec = spec
        self.order = order
        ngens = len(spec.generators)
        self.ngens = ngens
        self.gen_perms = np.array(
            [[table[a][2 * i] for a in range(order)] for i in range(ngens)],
            dtype=np.int64,
        )
        self.inv_gen_perms = np.array(
            [[table[a][2 * i + 1] for a in range(order)] for i in range(ngens)],
            dtype=np.int64,
        )
        # breadth-first spanning tree: def words
        parent = np.full(order, -1, dtype=np.int64)
        pgen = np.full(order, -1, dtype=np.int64)
        seen = np.zeros(order, dtype=bool)
        seen[0] = True
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for i in range(ngens):
                    y = int(self.gen_perms[i][x])
                    if not seen[y]:
                        seen[y] = True
                        parent[y] = x
                        pgen[y] = i
                        nxt.append(y)
            frontier = nxt
        if not seen.all():
            raise AssertionError("regular action not transitive")
        self._parent = parent
        self._pgen = pgen
        self._words = {}
        self._inv = None
        self._right_perm_cache = {}

    # -- words ---------------------------------------------------------

    def word(self, x):
        """Definition word of element x as a tuple of generator indices."""
        w = self._words.get(x)
        if w is None:
            rev = []
            y = x
            while y != 0:
                rev.append(int(self._pgen[y]))
                y = int(self._parent[y])
            w = tuple(reversed(rev))
            self._words[x] = w
        return w

    def apply_word(self, x, word):
        """Apply a generator-index word to element(s) x (scalar or array)."""
        for g in word:
            x = self.gen_perms[g][x]
        return x

    def apply_signed_word(self, x, word):
        """Apply a signed presentation word (for relator checks)."""
        for s in word:
            if s > 0:
                x = self.gen_perms[s - 1][x]
            else:
                x = self.inv_gen_perms[-s - 1][x]
        return x

    # -- arithmetic ------------------------------------------------------

    def mul(self, x, y):
        return int(self.apply_word(x, self.word(int(y))))

    @property
    def inv(self):
        """Permutation array of inversion."""
        if self._inv is None:
            inv = np.zeros(self.order, dtype=np.int64)
            for x in range(self.order):
                y = 0
                for g in reversed(self.word(x)):
                    y = int(self.inv_gen_perms[g][y])
                inv[x] = y
            self._inv = inv
        return self._inv

    def inv_elem(self, x):
        return int(self.inv[x])

    def right_perm(self, y):
        """Permutation x -> x*y as an array over all elements."""
        y = int(y)
        perm = self._right_perm_cache.get(y)
        if perm is None:
            perm = self.apply_word(np.arange(self.order), self.word(y))
            if len(self._right_perm_cache) < 64:
                self._right_perm_cache[y] = perm
        return perm

    def power(self, x, k):
        x = int(x)
        if k < 0:
            x = self.inv_elem(x)
            k = -k
        acc = 0
        base = x
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    def element_order(self, x):
        n = 1
        y = int(x)
        while y != 0:
            y = self.mul(y, x)
            n += 1
        return n

    def conj_perm(self, g):
        """Permutation x -> g^-1 x g."""
        rg = self.right_perm(g)
        inv = self.inv
        return rg[inv[rg[inv]]]


def enumerate_regular(spec, limit=200_000):
    """Realize the presented group's regular action by coset enumeration."""
    relators = [_word_to_cols(w) for w in spec.relators if w]
    order, table = enumerate_cosets(2 * len(spec.generators), relators, limit)
    return RegularGroup(spec, order, table)
