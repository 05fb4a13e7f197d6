"""Exact arithmetic in rings of cyclotomic integers Z[zeta_m].

Values are integer coordinate vectors over the power basis
1, zeta, ..., zeta^(phi(m)-1) after reduction mod the m-th cyclotomic
polynomial. Mixed conductors promote to the lcm, so character values from
different tables can be compared and multiplied directly.

Coefficients are python ints: no overflow, no floating point, ever.
"""

from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def cyclotomic_poly(m):
    """Coefficients of the m-th cyclotomic polynomial, ascending, monic."""
    if m == 1:
        return (-1, 1)
    # divide x^m - 1 by the product of Phi_d over proper divisors d of m
    num = [0] * (m + 1)
    num[0] = -1
    num[m] = 1
    for d in range(1, m):
        if m % d == 0:
            num = _polydiv_exact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _polydiv_exact(num, den):
    """Exact division of integer polynomials with monic divisor."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        out[i - dd] = c
        for j, dc in enumerate(den):
            num[i - dd + j] -= c * dc
    if any(num):
        raise ArithmeticError("polynomial division was not exact")
    return out


@lru_cache(maxsize=None)
def euler_phi(m):
    return len(cyclotomic_poly(m)) - 1


def _reduce(vec, m):
    """Reduce an integer coefficient vector mod Phi_m; returns phi(m)-tuple."""
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    vec = list(vec)
    for i in range(len(vec) - 1, deg - 1, -1):
        c = vec[i]
        if c == 0:
            continue
        vec[i] = 0
        for j in range(deg):
            vec[i - deg + j] -= c * phi[j]
    out = vec[:deg]
    out += [0] * (deg - len(out))
    return tuple(out)


def lcm(a, b):
    return a // gcd(a, b) * b


class Cyclotomic:
    """An element of Z[zeta_m], immutable."""

    __slots__ = ("m", "c")

    def __init__(self, m, coeffs, _reduced=False):
        self.m = int(m)
        if _reduced:
            self.c = tuple(coeffs)
        else:
            self.c = _reduce(coeffs, self.m)

    @classmethod
    def from_int(cls, n, m=1):
        vec = [0] * euler_phi(m)
        vec[0] = int(n)
        return cls(m, vec, _reduced=True)

    @classmethod
    def root(cls, m, k=1):
        """zeta_m^k."""
        k = k % m
        vec = [0] * (k + 1)
        vec[k] = 1
        return cls(m, vec)

    def promote(self, L):
        """The same value viewed in Z[zeta_L]; L must be a multiple of m."""
        if L == self.m:
            return self
        if L % self.m:
            raise ValueError("cannot promote conductor %d to %d" % (self.m, L))
        step = L // self.m
        vec = [0] * L
        for j, cj in enumerate(self.c):
            vec[j * step] += cj
        return Cyclotomic(L, vec)

    def _pair(self, other):
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.from_int(other)
        if self.m == other.m:
            return self, other
        L = lcm(self.m, other.m)
        return self.promote(L), other.promote(L)

    def __add__(self, other):
        a, b = self._pair(other)
        return Cyclotomic(a.m, tuple(x + y for x, y in zip(a.c, b.c)),
                          _reduced=True)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._pair(other)
        return Cyclotomic(a.m, tuple(x - y for x, y in zip(a.c, b.c)),
                          _reduced=True)

    def __neg__(self):
        return Cyclotomic(self.m, tuple(-x for x in self.c), _reduced=True)

    def __mul__(self, other):
        a, b = self._pair(other)
        n = len(a.c)
        vec = [0] * (2 * n - 1) if n else [0]
        for i, x in enumerate(a.c):
            if x == 0:
                continue
            for j, y in enumerate(b.c):
                if y:
                    vec[i + j] += x * y
        return Cyclotomic(a.m, vec)

    __rmul__ = __mul__

    def conjugate(self):
        """Complex conjugation, zeta -> zeta^-1."""
        vec = [0] * self.m
        for j, cj in enumerate(self.c):
            vec[(self.m - j) % self.m] += cj
        return Cyclotomic(self.m, vec)

    def divexact(self, n):
        """Divide by a nonzero integer; raises when not exactly divisible."""
        out = []
        for x in self.c:
            q, r = divmod(x, n)
            if r:
                raise ArithmeticError("cyclotomic value not divisible by %d" % n)
            out.append(q)
        return Cyclotomic(self.m, out, _reduced=True)

    def is_zero(self):
        return not any(self.c)

    def is_int(self):
        return not any(self.c[1:])

    def as_int(self):
        if not self.is_int():
            raise ValueError("value %r is not a rational integer" % (self,))
        return self.c[0]

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_int() and self.c[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._pair(other)
        return a.c == b.c

    # equality promotes conductors, so a lawful hash would need a minimal
    # conductor canonical form; dict keys use explicit coefficient tuples
    # instead (see chartable.value_key)
    __hash__ = None

    def __repr__(self):
        if self.is_int():
            return str(self.c[0])
        terms = []
        for j, cj in enumerate(self.c):
            if cj == 0:
                continue
            if j == 0:
                terms.append(str(cj))
            elif cj == 1:
                terms.append("z%d^%d" % (self.m, j))
            else:
                terms.append("%d*z%d^%d" % (cj, self.m, j))
        return " + ".join(terms)
