"""
Truncated q-expansions with fractional exponents.

``QSeries`` holds sum_e c_e q^e with exponents in (1/D)Z, known for e < prec.
``QZSeries`` holds sum c(n, r) q^n zeta^r with a coefficient Laurent
polynomial in zeta for every q-order.  Exponents are stored as integers
scaled by the declared denominators, so arithmetic never touches Fraction
keys.  Precision is carried by every value and binary operations never
claim more than their inputs justify.

The elliptic building blocks (Eisenstein series, eta, the four Jacobi
theta functions) live here too.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import ceil, gcd, isqrt

from .cyclotomic import ONE, ZERO, CycNumber, cyc, frac_str, lcm, parse_frac
from .errors import BadWeight, ZeroDivisor

__all__ = [
    "QSeries",
    "QZSeries",
    "series_mul",
    "series_div",
    "eisenstein_q",
    "delta_q",
    "eta_theta",
    "jacobi_theta",
    "theta_null",
    "bernoulli",
]


def _bound(prec, denom):
    # scaled exponents a are valid iff a < _bound(prec, denom)
    return ceil(Fraction(prec) * denom)


class QSeries:
    """Truncated q-series with exponents in (1/denom)Z."""

    __slots__ = ("denom", "prec", "_c")

    def __init__(self, coeffs=None, prec=0, denom=1):
        self.denom = int(denom)
        self.prec = Fraction(prec)
        bound = _bound(self.prec, self.denom)
        c = {}
        for e, v in (coeffs or {}).items():
            a = Fraction(e) * self.denom
            if a.denominator != 1:
                raise ValueError("exponent %s has denominator not dividing %d" % (e, self.denom))
            v = cyc(v)
            if v and a < bound:
                c[int(a)] = v
        self._c = c

    @classmethod
    def _raw(cls, c, prec, denom):
        obj = object.__new__(cls)
        obj.denom = denom
        obj.prec = Fraction(prec)
        obj._c = c
        return obj

    @classmethod
    def one(cls, prec):
        return cls({0: 1}, prec)

    def coeff(self, e):
        a = Fraction(e) * self.denom
        if a.denominator != 1:
            return ZERO
        return self._c.get(int(a), ZERO)

    def __getitem__(self, e):
        return self.coeff(e)

    def items(self):
        return [(Fraction(a, self.denom), self._c[a]) for a in sorted(self._c)]

    def valuation(self):
        """Lowest exponent with a nonzero coefficient (prec if none)."""
        if not self._c:
            return self.prec
        return Fraction(min(self._c), self.denom)

    def is_zero(self):
        return not self._c

    def rescaled(self, denom):
        if denom == self.denom:
            return self
        if denom % self.denom:
            raise ValueError("%d is not a multiple of %d" % (denom, self.denom))
        s = denom // self.denom
        return QSeries._raw({a * s: v for a, v in self._c.items()}, self.prec, denom)

    def reduced(self):
        """Same series over the smallest admissible denominator."""
        g = self.denom
        for a in self._c:
            g = gcd(g, a)
        if g <= 1:
            return self
        return QSeries._raw({a // g: v for a, v in self._c.items()}, self.prec, self.denom // g)

    def truncate(self, prec):
        prec = min(Fraction(prec), self.prec)
        b = _bound(prec, self.denom)
        return QSeries._raw({a: v for a, v in self._c.items() if a < b}, prec, self.denom)

    def shift(self, e):
        """Multiply by q^e."""
        a = Fraction(e) * self.denom
        if a.denominator != 1:
            raise ValueError("shift not compatible with denominator")
        a = int(a)
        return QSeries._raw({k + a: v for k, v in self._c.items()}, self.prec + Fraction(e), self.denom)

    def __neg__(self):
        return QSeries._raw({a: -v for a, v in self._c.items()}, self.prec, self.denom)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            other = QSeries({0: other}, self.prec)
        if not isinstance(other, QSeries):
            return NotImplemented
        d = lcm(self.denom, other.denom)
        a, b = self.rescaled(d), other.rescaled(d)
        prec = min(a.prec, b.prec)
        bound = _bound(prec, d)
        c = {k: v for k, v in a._c.items() if k < bound}
        for k, v in b._c.items():
            if k < bound:
                nv = c.get(k, ZERO) + v
                if nv:
                    c[k] = nv
                else:
                    c.pop(k, None)
        return QSeries._raw(c, prec, d)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            other = cyc(other)
            if not other:
                return QSeries._raw({}, self.prec, self.denom)
            return QSeries._raw({a: v * other for a, v in self._c.items()}, self.prec, self.denom)
        if isinstance(other, QZSeries):
            return other * self
        if not isinstance(other, QSeries):
            return NotImplemented
        d = lcm(self.denom, other.denom)
        a, b = self.rescaled(d), other.rescaled(d)
        prec = _product_prec(a.prec, a.valuation(), b.prec, b.valuation())
        bound = _bound(prec, d)
        out = {}
        bitems = sorted(b._c.items())
        for ka, va in a._c.items():
            for kb, vb in bitems:
                k = ka + kb
                if k >= bound:
                    break
                out[k] = out.get(k, ZERO) + va * vb
        return QSeries._raw({k: v for k, v in out.items() if v}, prec, d)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return QSeries.one(self.prec)
        return _binary_power(self, e)

    def inverse(self):
        """Multiplicative inverse as a Laurent series.

        With self = q^v (u_0 + u_1 q^(1/D) + ...) known to precision P, the
        unit part is known to P - v and the inverse to P - 2v.
        """
        if not self._c:
            raise ZeroDivisor("series is zero to precision %s" % self.prec)
        d = self.denom
        v = min(self._c)
        n_terms = _bound(self.prec, d) - v
        u = [self._c.get(v + j, ZERO) for j in range(n_terms)]
        inv0 = u[0].inverse()
        w = [inv0]
        for j in range(1, n_terms):
            acc = ZERO
            for i in range(1, j + 1):
                if u[i] and w[j - i]:
                    acc = acc + u[i] * w[j - i]
            w.append(-inv0 * acc if acc else ZERO)
        c = {j - v: x for j, x in enumerate(w) if x}
        return QSeries._raw(c, Fraction(n_terms - v, d), d)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            return self * cyc(other).inverse()
        if not isinstance(other, QSeries):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def equal_within(self, other, prec=None):
        """Compare on the exponents valid for both operands (or below ``prec``)."""
        diff = self - other
        if prec is not None:
            diff = diff.truncate(prec)
        return diff.is_zero()

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.prec == other.prec and self.equal_within(other)

    __hash__ = None

    def __repr__(self):
        terms = ["(%s)q^%s" % (v, e) for e, v in self.items()[:6]]
        return "QSeries(%s + O(q^%s))" % (" + ".join(terms) or "0", self.prec)

    def to_json(self):
        return {
            "denom": self.denom,
            "prec": frac_str(self.prec),
            "terms": [[frac_str(e), v.to_json()] for e, v in self.items()],
        }

    @classmethod
    def from_json(cls, obj):
        return cls({parse_frac(e): CycNumber.from_json(v) for e, v in obj["terms"]},
                   parse_frac(obj["prec"]), obj["denom"])


def _binary_power(x, e):
    result = None
    while e:
        if e & 1:
            result = x if result is None else result * x
        e >>= 1
        if e:
            x = x * x
    return result


def _product_prec(pa, va, pb, vb):
    # Laurent truncation: (a + O(q^pa)) (b + O(q^pb)); reduces to min(pa, pb)
    # when both valuations are nonnegative
    return min(pa + min(vb, 0), pb + min(va, 0))


class QZSeries:
    """Truncated expansion sum c(n, r) q^n zeta^r.

    Keys are scaled by ``denom = (Dq, Dz)``; each q-order carries a finite
    Laurent polynomial in zeta.
    """

    __slots__ = ("denom", "prec", "_c")

    def __init__(self, coeffs=None, prec=0, denom=(1, 1)):
        dq, dz = int(denom[0]), int(denom[1])
        self.denom = (dq, dz)
        self.prec = Fraction(prec)
        bound = _bound(self.prec, dq)
        c = {}
        for (n, r), v in (coeffs or {}).items():
            a, b = Fraction(n) * dq, Fraction(r) * dz
            if a.denominator != 1 or b.denominator != 1:
                raise ValueError("exponent (%s, %s) not compatible with denominators %s"
                                 % (n, r, self.denom))
            v = cyc(v)
            if v and a < bound:
                c.setdefault(int(a), {})[int(b)] = v
        self._c = c

    @classmethod
    def _raw(cls, c, prec, denom):
        obj = object.__new__(cls)
        obj.denom = denom
        obj.prec = Fraction(prec)
        obj._c = c
        return obj

    @classmethod
    def from_qseries(cls, s):
        return cls._raw({a: {0: v} for a, v in s._c.items()}, s.prec, (s.denom, 1))

    @classmethod
    def one(cls, prec):
        return cls({(0, 0): 1}, prec)

    @classmethod
    def zero(cls, prec, denom=(1, 1)):
        return cls._raw({}, prec, denom)

    def coeff(self, n, r):
        a, b = Fraction(n) * self.denom[0], Fraction(r) * self.denom[1]
        if a.denominator != 1 or b.denominator != 1:
            return ZERO
        return self._c.get(int(a), {}).get(int(b), ZERO)

    def __getitem__(self, key):
        return self.coeff(*key)

    def items(self):
        dq, dz = self.denom
        return [((Fraction(a, dq), Fraction(b, dz)), row[b])
                for a, row in sorted(self._c.items()) for b in sorted(row)]

    def q_orders(self):
        return [Fraction(a, self.denom[0]) for a in sorted(self._c)]

    def zeta_poly(self, n):
        """The coefficient of q^n as a dict r -> value."""
        a = Fraction(n) * self.denom[0]
        if a.denominator != 1:
            return {}
        dz = self.denom[1]
        return {Fraction(b, dz): v for b, v in sorted(self._c.get(int(a), {}).items())}

    def valuation(self):
        if not self._c:
            return self.prec
        return Fraction(min(self._c), self.denom[0])

    def is_zero(self):
        return not self._c

    def nterms(self):
        return sum(len(r) for r in self._c.values())

    def rescaled(self, denom):
        dq, dz = denom
        if (dq, dz) == self.denom:
            return self
        if dq % self.denom[0] or dz % self.denom[1]:
            raise ValueError("denominators %s do not refine %s" % (denom, self.denom))
        sq, sz = dq // self.denom[0], dz // self.denom[1]
        c = {a * sq: {b * sz: v for b, v in row.items()} for a, row in self._c.items()}
        return QZSeries._raw(c, self.prec, (dq, dz))

    def reduced(self):
        gq, gz = self.denom
        for a, row in self._c.items():
            gq = gcd(gq, a)
            for b in row:
                gz = gcd(gz, b)
        gq, gz = max(gq, 1), max(gz, 1)
        if gq == 1 and gz == 1:
            return self
        c = {a // gq: {b // gz: v for b, v in row.items()} for a, row in self._c.items()}
        return QZSeries._raw(c, self.prec, (self.denom[0] // gq, self.denom[1] // gz))

    def truncate(self, prec):
        prec = min(Fraction(prec), self.prec)
        bound = _bound(prec, self.denom[0])
        return QZSeries._raw({a: row for a, row in self._c.items() if a < bound}, prec, self.denom)

    def scale(self, s):
        s = cyc(s)
        if not s:
            return QZSeries._raw({}, self.prec, self.denom)
        return QZSeries._raw({a: {b: v * s for b, v in row.items()} for a, row in self._c.items()},
                             self.prec, self.denom)

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            other = QZSeries({(0, 0): other}, self.prec)
        elif isinstance(other, QSeries):
            other = QZSeries.from_qseries(other)
        if not isinstance(other, QZSeries):
            return NotImplemented
        d = (lcm(self.denom[0], other.denom[0]), lcm(self.denom[1], other.denom[1]))
        a, b = self.rescaled(d), other.rescaled(d)
        prec = min(a.prec, b.prec)
        bound = _bound(prec, d[0])
        c = {k: dict(row) for k, row in a._c.items() if k < bound}
        for k, row in b._c.items():
            if k >= bound:
                continue
            dest = c.setdefault(k, {})
            for j, v in row.items():
                nv = dest.get(j, ZERO) + v
                if nv:
                    dest[j] = nv
                else:
                    dest.pop(j, None)
            if not dest:
                del c[k]
        return QZSeries._raw(c, prec, d)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            return self.scale(other)
        if isinstance(other, QSeries):
            other = QZSeries.from_qseries(other)
        if not isinstance(other, QZSeries):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            return self.scale(cyc(other).inverse())
        return series_div(self, other)

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        if e == 0:
            return QZSeries.one(self.prec)
        return _binary_power(self, e)

    def equal_within(self, other, prec=None):
        diff = self - other
        if prec is not None:
            diff = diff.truncate(prec)
        return diff.is_zero()

    def __eq__(self, other):
        if not isinstance(other, QZSeries):
            return NotImplemented
        return self.prec == other.prec and self.equal_within(other)

    __hash__ = None

    def __repr__(self):
        terms = ["(%s)q^%s z^%s" % (v, n, r) for (n, r), v in self.items()[:6]]
        return "QZSeries(%s + O(q^%s))" % (" + ".join(terms) or "0", self.prec)

    def to_json(self):
        return {
            "denom": list(self.denom),
            "prec": frac_str(self.prec),
            "terms": [[frac_str(n), frac_str(r), v.to_json()] for (n, r), v in self.items()],
        }

    @classmethod
    def from_json(cls, obj):
        coeffs = {(parse_frac(n), parse_frac(r)): CycNumber.from_json(v)
                  for n, r, v in obj["terms"]}
        return cls(coeffs, parse_frac(obj["prec"]), tuple(obj["denom"]))


def series_mul(a, b):
    """Truncated product of two QZSeries (finite convolution per (n, r))."""
    d = (lcm(a.denom[0], b.denom[0]), lcm(a.denom[1], b.denom[1]))
    a, b = a.rescaled(d), b.rescaled(d)
    prec = _product_prec(a.prec, a.valuation(), b.prec, b.valuation())
    bound = _bound(prec, d[0])
    out = {}
    brows = sorted(b._c.items())
    for qa, rowa in a._c.items():
        for qb, rowb in brows:
            qs = qa + qb
            if qs >= bound:
                break
            dest = out.setdefault(qs, {})
            for ra, va in rowa.items():
                for rb, vb in rowb.items():
                    k = ra + rb
                    x = dest.get(k)
                    dest[k] = va * vb if x is None else x + va * vb
    clean = {}
    for qs, row in out.items():
        row = {k: v for k, v in row.items() if v}
        if row:
            clean[qs] = row
    return QZSeries._raw(clean, prec, d)


def series_div(a, b):
    """Exact truncated quotient of a QZSeries by a QSeries.

    The quotient may carry negative q-exponents; its precision accounts for
    the valuation of ``b``.
    """
    if isinstance(b, QZSeries):
        if any(set(row) != {0} for row in b._c.values()):
            raise ValueError("divisor must be a pure q-series")
        b = QSeries._raw({q: row[0] for q, row in b._c.items()}, b.prec, b.denom[0])
    return series_mul(a, QZSeries.from_qseries(b.inverse()))


# -- elliptic building blocks --------------------------------------------------


@lru_cache(maxsize=None)
def bernoulli(n):
    """Bernoulli number B_n with B_1 = -1/2."""
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    b = a[0]
    return -b if n == 1 else b


def _sigma(n, k):
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def eisenstein_q(k, prec):
    """Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n."""
    if not isinstance(k, int) or k < 4 or k % 2:
        raise BadWeight("Eisenstein series need even weight >= 4, got %r" % (k,))
    factor = -Fraction(2 * k) / bernoulli(k)
    coeffs = {0: 1}
    for n in range(1, ceil(Fraction(prec))):
        coeffs[n] = factor * _sigma(n, k - 1)
    return QSeries(coeffs, prec)


def _euler_product(prec):
    # prod_{n>=1} (1 - q^n) to O(q^prec), integer coefficients
    top = ceil(Fraction(prec))
    c = [0] * max(top, 1)
    c[0] = 1
    for n in range(1, top):
        for j in range(top - 1, n - 1, -1):
            c[j] -= c[j - n]
    return c


def eta_theta(prec):
    """Dedekind eta and the odd Jacobi theta function.

    Returns ``(eta, theta11)``: eta = q^(1/24) prod (1 - q^n) with
    denominator 24, and theta11 = sum_n (-1)^n q^((n+1/2)^2/2) zeta^(n+1/2),
    whose square starts q^(1/4) (zeta - 2 + zeta^-1).
    """
    prec = Fraction(prec)
    c = _euler_product(prec)
    eta = QSeries._raw({24 * j + 1: cyc(v) for j, v in enumerate(c) if v and 24 * j + 1 < 24 * prec},
                       prec, 24)
    return eta, jacobi_theta(1, prec)


def jacobi_theta(index, prec):
    """theta_1..theta_4 as QZSeries in q and zeta (denominators 8 and 2).

    theta_1 = sum (-1)^n q^((n+1/2)^2/2) zeta^(n+1/2)   (odd in z)
    theta_2 = sum q^((n+1/2)^2/2) zeta^(n+1/2)
    theta_3 = sum q^(n^2/2) zeta^n
    theta_4 = sum (-1)^n q^(n^2/2) zeta^n
    """
    prec = Fraction(prec)
    bound = _bound(prec, 8)
    c = {}
    nmax = isqrt(max(bound, 0)) + 2
    for n in range(-nmax, nmax + 1):
        if index in (1, 2):
            a, b = (2 * n + 1) ** 2, 2 * n + 1  # q^(a/8), zeta^(b/2)
        elif index in (3, 4):
            a, b = 4 * n * n, 2 * n
        else:
            raise ValueError("theta index must be 1..4")
        if a >= bound:
            continue
        sign = -1 if index in (1, 4) and n % 2 else 1
        c.setdefault(a, {})[b] = cyc(sign)
    return QZSeries._raw(c, prec, (8, 2))


def theta_null(index, prec):
    """theta_index(tau, 0) as a QSeries."""
    t = jacobi_theta(index, prec)
    c = {}
    for a, row in t._c.items():
        s = ZERO
        for v in row.values():
            s = s + v
        if s:
            c[a] = s
    return QSeries._raw(c, t.prec, 8)


def delta_q(prec):
    """Discriminant function q prod (1 - q^n)^24."""
    prec = Fraction(prec)
    c = _euler_product(prec)
    base = QSeries._raw({j: cyc(v) for j, v in enumerate(c) if v}, prec, 1)
    return (base ** 24).shift(1).truncate(prec)
