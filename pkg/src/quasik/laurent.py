"""Multivariate Laurent polynomials over Z and free modules on lambda bases.

A quasi-theory component is a free module over Z[q_1^+-, ..., q_n^+-] with
one basis element per irreducible of the component's stabilizer; the basis
element carries a fractional q-degree k_i/l_i read off from the scalar by
which the central tuple entry acts. Products of basis elements decompose
through the stabilizer's character table and pick up integral q-shifts.

All coefficients are python ints; everything is exact.
"""

from fractions import Fraction

from .chartable import character_table

# shared immutable zero/one per arity; LaurentPoly instances are never
# mutated after construction, so handing out the same object is safe
_ZERO = {}
_ONE = {}


class LaurentPoly:
    """Sparse Laurent polynomial: dict from exponent tuples to nonzero ints."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = int(nvars)
        clean = {}
        for e, c in (terms or {}).items():
            if c:
                e = tuple(int(x) for x in e)
                if len(e) != self.nvars:
                    raise ValueError("exponent arity %d != %d" % (len(e), nvars))
                clean[e] = int(c)
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, clean):
        """Internal: wrap an already-normalized term dict without rescanning."""
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = clean
        return p

    @classmethod
    def zero(cls, nvars):
        p = _ZERO.get(nvars)
        if p is None:
            p = _ZERO[nvars] = cls(nvars)
        return p

    @classmethod
    def one(cls, nvars):
        p = _ONE.get(nvars)
        if p is None:
            p = _ONE[nvars] = cls(nvars, {(0,) * nvars: 1})
        return p

    @classmethod
    def monomial(cls, exps, coeff=1):
        exps = tuple(int(x) for x in exps)
        return cls(len(exps), {exps: coeff})

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * self.nvars: 1}

    def is_unit(self):
        """Units of Z[q^+-] are the monomials with coefficient +-1."""
        if len(self.terms) != 1:
            return False
        return abs(next(iter(self.terms.values()))) == 1

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.nvars, out)

    def __neg__(self):
        return LaurentPoly._raw(self.nvars,
                                {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.nvars)
            return LaurentPoly._raw(
                self.nvars, {e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, LaurentPoly)
                and self.nvars == other.nvars and self.terms == other.terms)

    __hash__ = None

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join("q%d^%d" % (i + 1, x)
                            for i, x in enumerate(e) if x != 0)
            if mono:
                parts.append("%d*%s" % (c, mono) if c != 1 else mono)
            else:
                parts.append(str(c))
        return " + ".join(parts)

    def leading(self):
        """Lex-largest exponent and its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]


def _monomial_content(p):
    """Per-variable minimum exponent over the terms of a nonzero poly."""
    its = iter(p.terms)
    mins = list(next(its))
    for e in its:
        for i, x in enumerate(e):
            if x < mins[i]:
                mins[i] = x
    return tuple(mins)


def exact_div(a, b):
    """Exact quotient a / b in Z[q^+-]; raises when b does not divide a.

    Monomial content is stripped from both sides first. That reduces to
    division in the ordinary polynomial ring, where lex order on the
    nonnegative exponents is a well order, so the reduction terminates;
    Laurent exponents alone are unbounded below and naive reduction can
    descend forever on non-divisible input.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return LaurentPoly.zero(a.nvars)
    ca = _monomial_content(a)
    cb = _monomial_content(b)
    a = a * LaurentPoly.monomial(tuple(-x for x in ca))
    b = b * LaurentPoly.monomial(tuple(-x for x in cb))
    out = {}
    rem = a
    eb, cbc = b.leading()
    while not rem.is_zero():
        ea, cac = rem.leading()
        shift = tuple(x - y for x, y in zip(ea, eb))
        if any(s < 0 for s in shift):
            raise ArithmeticError("leading monomial not divisible")
        q, r = divmod(cac, cbc)
        if r:
            raise ArithmeticError("leading coefficient not divisible")
        out[shift] = out.get(shift, 0) + q
        rem = rem - LaurentPoly.monomial(shift, q) * b
        if not rem.is_zero() and max(rem.terms) >= ea:
            raise AssertionError("division did not reduce the leading term")
    net = tuple(x - y for x, y in zip(ca, cb))
    return LaurentPoly(a.nvars, out) * LaurentPoly.monomial(net)


def laurent_det(rows):
    """Determinant of a square matrix of Laurent polynomials.

    Singleton rows and columns are peeled off first (maps built from basis
    transports are mostly monomial permutation matrices), then the dense
    core goes through fraction-free Bareiss elimination with exact
    divisions.
    """
    k = len(rows)
    if k == 0:
        return LaurentPoly.one(0)
    nvars = rows[0][0].nvars
    mat = {(i, j): rows[i][j] for i in range(k) for j in range(k)
           if not rows[i][j].is_zero()}
    live_rows = set(range(k))
    live_cols = set(range(k))
    det = LaurentPoly.one(nvars)
    sign = 1
    row_order = sorted(live_rows)
    col_order = sorted(live_cols)

    def parity(seq, item):
        return seq.index(item)

    changed = True
    while changed and live_rows:
        changed = False
        for i in sorted(live_rows):
            hits = [j for j in live_cols if (i, j) in mat]
            if len(hits) == 0:
                return LaurentPoly.zero(nvars)
            if len(hits) == 1:
                j = hits[0]
                det = det * mat[(i, j)]
                if (parity(row_order, i) + parity(col_order, j)) % 2:
                    sign = -sign
                row_order.remove(i)
                col_order.remove(j)
                live_rows.discard(i)
                live_cols.discard(j)
                for ii in list(live_rows):
                    mat.pop((ii, j), None)
                changed = True
                break
        if changed:
            continue
        for j in sorted(live_cols):
            hits = [i for i in live_rows if (i, j) in mat]
            if len(hits) == 0:
                return LaurentPoly.zero(nvars)
            if len(hits) == 1:
                i = hits[0]
                det = det * mat[(i, j)]
                if (parity(row_order, i) + parity(col_order, j)) % 2:
                    sign = -sign
                row_order.remove(i)
                col_order.remove(j)
                live_rows.discard(i)
                live_cols.discard(j)
                for jj in list(live_cols):
                    mat.pop((i, jj), None)
                changed = True
                break

    if live_rows:
        ri = sorted(live_rows)
        ci = sorted(live_cols)
        d = len(ri)
        dense = [[mat.get((i, j), LaurentPoly.zero(nvars)) for j in ci]
                 for i in ri]
        det = det * _bareiss(dense, nvars)
    return det if sign == 1 else -det


def _bareiss(m, nvars):
    d = len(m)
    sign = 1
    prev = LaurentPoly.one(nvars)
    for kk in range(d - 1):
        if m[kk][kk].is_zero():
            swap = -1
            for r in range(kk + 1, d):
                if not m[r][kk].is_zero():
                    swap = r
                    break
            if swap < 0:
                return LaurentPoly.zero(nvars)
            m[kk], m[swap] = m[swap], m[kk]
            sign = -sign
        for i in range(kk + 1, d):
            for j in range(kk + 1, d):
                num = m[i][j] * m[kk][kk] - m[i][kk] * m[kk][j]
                m[i][j] = exact_div(num, prev)
        prev = m[kk][kk]
    out = m[d - 1][d - 1]
    return out if sign == 1 else -out


# -- lambda bases -------------------------------------------------------------


class LambdaBasisElement:
    """Basis symbol V_chi q^(k/l): an irreducible of the stabilizer together
    with the fractional q-degrees of the tuple entries."""

    __slots__ = ("char_index", "q_num", "orders", "q_degree")

    def __init__(self, char_index, q_num, orders):
        self.char_index = int(char_index)
        self.q_num = tuple(int(k) for k in q_num)
        self.orders = tuple(int(l) for l in orders)
        self.q_degree = tuple(Fraction(k, l)
                              for k, l in zip(self.q_num, self.orders))

    def q_degree_strings(self):
        return ["%d/%d" % (k, l) for k, l in zip(self.q_num, self.orders)]

    def __repr__(self):
        frac = ",".join(self.q_degree_strings())
        return "V[%d; q^(%s)]" % (self.char_index, frac)


class LambdaModule:
    """The free Z[q^+-]-module attached to one skeleton component.

    The basis is indexed by the irreducibles of the stabilizer S; basis
    element i has q-degree k_j(chi_i)/l_j where the tuple entry sigma_j,
    central in S, acts on chi_i by zeta^(k_j). Elements are dicts from
    basis index to LaurentPoly.
    """

    def __init__(self, stabilizer, sigma_local):
        self.group = stabilizer
        self.table = character_table(stabilizer)
        self.sigma_local = tuple(int(s) for s in sigma_local)
        self.n = len(self.sigma_local)
        self.orders = tuple(int(stabilizer.element_orders[s])
                            for s in self.sigma_local)
        basis = []
        for i in range(len(self.table.chars)):
            ks = tuple(self.table.central_scalar(i, s)
                       for s in self.sigma_local)
            basis.append(LambdaBasisElement(i, ks, self.orders))
        self.basis = tuple(basis)
        self._mul_cache = {}

    @property
    def rank(self):
        return len(self.basis)

    def zero(self):
        return {}

    def one_poly(self):
        return LaurentPoly.one(self.n)

    def unit(self):
        return {self.table.trivial_index: LaurentPoly.one(self.n)}

    def pi_star(self, poly):
        """Image of a base-ring element under pi^*: poly times the unit."""
        if poly.is_zero():
            return {}
        return {self.table.trivial_index: poly}

    def mul_basis(self, i, j):
        """V_i * V_j as a list of (k, LaurentPoly) with monomial shifts."""
        key = (i, j) if i <= j else (j, i)
        cached = self._mul_cache.get(key)
        if cached is not None:
            return cached
        qi = self.basis[i].q_degree
        qj = self.basis[j].q_degree
        out = []
        for k, mult in self.table.tensor_decompose(i, j):
            qk = self.basis[k].q_degree
            shift = []
            for a, b, c in zip(qi, qj, qk):
                d = a + b - c
                if d.denominator != 1:
                    raise ArithmeticError(
                        "non-integral q-shift %s in a basis product" % d)
                shift.append(int(d))
            out.append((k, LaurentPoly.monomial(tuple(shift), mult)))
        cached = tuple(out)
        self._mul_cache[key] = cached
        return cached

    def mul(self, x, y):
        out = {}
        for i, pi in x.items():
            if pi.is_zero():
                continue
            for j, pj in y.items():
                if pj.is_zero():
                    continue
                pij = pi * pj
                for k, mono in self.mul_basis(i, j):
                    acc = out.get(k)
                    term = pij * mono
                    out[k] = term if acc is None else acc + term
        return {k: v for k, v in out.items() if not v.is_zero()}

    def add(self, x, y):
        out = dict(x)
        for k, v in y.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return out

    def neg(self, x):
        return {k: -v for k, v in x.items()}

    def scale(self, poly, x):
        out = {}
        for k, v in x.items():
            s = poly * v
            if not s.is_zero():
                out[k] = s
        return out

    def eq(self, x, y):
        xs = {k: v for k, v in x.items() if not v.is_zero()}
        ys = {k: v for k, v in y.items() if not v.is_zero()}
        return xs == ys


def lambda_basis(C, sigma_local):
    """Basis symbols of the free module attached to (C, sigma): one per
    irreducible of C, with normalized fractional q-degrees. The entries
    of sigma are given as element indices of C and must be central in C."""
    return list(LambdaModule(C, sigma_local).basis)
