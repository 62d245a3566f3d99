"""Exact cyclotomic integers with prime-power conductor.

Values live in Z[w] with w a primitive e-th root of unity, e = p**b.  The
canonical form zeroes the top coefficient block using the relation
Phi_{p^b}(w) = sum_{i<p} w**(i * p**(b-1)) = 0.  Only addition, negation
and integer extraction are supported; the degree pipeline never multiplies
character values.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["CycInt", "reduce_vector", "int_embed", "prime_power_radical"]


def prime_power_radical(e):
    """Return (p, b) with e = p**b, or raise ValueError."""
    if e < 2:
        raise ValueError("conductor must be >= 2, got %d" % e)
    p = 2
    while p * p <= e and e % p:
        p += 1
    if e % p:
        p = e
    b = 0
    m = e
    while m % p == 0:
        m //= p
        b += 1
    if m != 1:
        raise ValueError("conductor %d is not a prime power" % e)
    return p, b


def _canonical(coeffs, e, p):
    """Zero the top block [ (p-1)*e/p, e ) via the cyclotomic relation."""
    m = e // p
    out = list(coeffs)
    for j in range((p - 1) * m, e):
        a = out[j]
        if a:
            out[j] = 0
            s = j - (p - 1) * m
            for i in range(p - 1):
                out[i * m + s] -= a
    return tuple(out)


@dataclass(frozen=True)
class CycInt:
    """Canonical cyclotomic integer sum_j coeffs[j] * w_e**j."""

    conductor: int
    coeffs: tuple

    def __add__(self, other):
        if self.conductor != other.conductor:
            raise ValueError("conductor mismatch: %d vs %d" % (self.conductor, other.conductor))
        p, _ = prime_power_radical(self.conductor)
        return CycInt(
            self.conductor,
            _canonical(
                [a + b for a, b in zip(self.coeffs, other.coeffs)], self.conductor, p
            ),
        )

    def __neg__(self):
        return CycInt(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def as_integer(self):
        """Exact integer value; error if the value is irrational."""
        if not self.is_rational():
            raise ValueError("cyclotomic value %r is not a rational integer" % (self,))
        return self.coeffs[0]

    def is_zero(self):
        return not any(self.coeffs)

    def conjugate_exponents(self, t):
        """Image under w -> w**t as a new CycInt (t coprime to conductor)."""
        e = self.conductor
        out = [0] * e
        for j, a in enumerate(self.coeffs):
            out[(j * t) % e] += a
        return reduce_vector(out, e)

    def complex_value(self):
        """Float rendering for display only (never used in logic)."""
        import cmath

        e = self.conductor
        return sum(a * cmath.exp(2j * cmath.pi * j / e) for j, a in enumerate(self.coeffs))

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for j, a in enumerate(self.coeffs):
            if not a:
                continue
            if j == 0:
                terms.append(str(a))
            else:
                mon = "w" if j == 1 else "w^%d" % j
                if a == 1:
                    terms.append(mon)
                elif a == -1:
                    terms.append("-" + mon)
                else:
                    terms.append("%d*%s" % (a, mon))
        s = "+".join(terms).replace("+-", "-")
        return s or "0"


def reduce_vector(coeffs, e):
    """Canonicalize a raw coefficient vector (indices taken mod e)."""
    p, _ = prime_power_radical(e)
    folded = [0] * e
    for j, a in enumerate(coeffs):
        folded[j % e] += a
    return CycInt(e, _canonical(folded, e, p))


def int_embed(n, e):
    """The rational integer n as a CycInt with conductor e."""
    prime_power_radical(e)
    coeffs = [0] * e
    coeffs[0] = n
    return CycInt(e, tuple(coeffs))
