"""
Jacobi forms as coefficient tables.

A ``JacobiForm`` of weight k and index m with values in a d-dimensional
space is stored as d scalar ``QZSeries`` components, so that the table
(n, r) -> c(n, r) in C^d is the tuple of component coefficients.  Bases of
the scalar spaces J_{k,m} (k even) are cut out of the weak Jacobi forms

    M_*[phi_{-2,1}, phi_{0,1}]

by the linear conditions c(n, r) = 0 whenever 4mn - r^2 < 0.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, isqrt

from .cyclotomic import ZERO, CycNumber, cyc, frac_str, lcm, parse_frac
from .errors import IncompatibleShapes, PrecisionTooLow, Report, UnsupportedWeight
from .linalg import SparseMatrix, kernel_basis, rref
from .qseries import QSeries, QZSeries, eisenstein_q, eta_theta, jacobi_theta, theta_null

__all__ = [
    "JacobiForm",
    "WeakJacobiForm",
    "weak_generators",
    "jacobi_mul",
    "jacobi_tensor",
    "jacobi_pair",
    "jacobi_basis",
    "jacobi_dimension",
    "weak_monomials",
    "validate_jacobi",
]


class JacobiForm:
    """Truncated Fourier expansion of a (vector valued) Jacobi form.

    ``components`` are QZSeries in q and zeta, one per coordinate of the
    representation space.  ``period`` is the periodicity parameter P: the
    coefficient c(n, r) depends only on (4mn - r^2, r mod 2mP).
    """

    weak = False

    def __init__(self, weight, index, components, period=1):
        components = tuple(components)
        if not components:
            raise ValueError("a Jacobi form needs at least one component")
        prec = min(c.prec for c in components)
        self.weight = Fraction(weight)
        self.index = Fraction(index)
        self.components = tuple(c.truncate(prec) for c in components)
        self.prec = prec
        self.period = int(period)

    @classmethod
    def from_table(cls, weight, index, table, prec, rep_dim=1, period=1):
        """Build from a mapping (n, r) -> vector (or scalar when rep_dim == 1)."""
        dq = dz = 1
        for n, r in table:
            dq = lcm(dq, Fraction(n).denominator)
            dz = lcm(dz, Fraction(r).denominator)
        comps = [dict() for _ in range(rep_dim)]
        for key, vec in table.items():
            if rep_dim == 1 and not isinstance(vec, (list, tuple)):
                vec = (vec,)
            if len(vec) != rep_dim:
                raise IncompatibleShapes("coefficient at %s has length %d, expected %d"
                                         % (key, len(vec), rep_dim))
            for c, v in zip(comps, vec):
                c[key] = v
        return cls(weight, index, [QZSeries(c, prec, (dq, dz)) for c in comps], period)

    @classmethod
    def zero(cls, weight, index, prec, rep_dim=1, period=1):
        return cls(weight, index, [QZSeries.zero(prec)] * rep_dim, period)

    def _like(self, components, weight=None, index=None):
        cls = WeakJacobiForm if self.weak else JacobiForm
        return cls(self.weight if weight is None else weight,
                   self.index if index is None else index, components, self.period)

    @property
    def rep_dim(self):
        return len(self.components)

    def keys(self):
        keys = set()
        for c in self.components:
            keys.update(k for k, _ in c.items())
        return sorted(keys)

    def table(self):
        """The FourierTable: sorted dict (n, r) -> tuple of coefficients."""
        return {k: self.coeff(*k) for k in self.keys()}

    def coeff(self, n, r):
        return tuple(c.coeff(n, r) for c in self.components)

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def truncate(self, prec):
        return self._like([c.truncate(prec) for c in self.components])

    def scale(self, s):
        return self._like([c.scale(s) for c in self.components])

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other):
        if not isinstance(other, JacobiForm):
            return NotImplemented
        if other.rep_dim != self.rep_dim:
            raise IncompatibleShapes("cannot add forms of dimensions %d and %d"
                                     % (self.rep_dim, other.rep_dim))
        out = self._like([a + b for a, b in zip(self.components, other.components)])
        if other.weak and not self.weak:
            out = WeakJacobiForm(out.weight, out.index, out.components, out.period)
        return out

    def __sub__(self, other):
        return self + (-other)

    def equal_within(self, other):
        return (self.rep_dim == other.rep_dim
                and all(a.equal_within(b) for a, b in zip(self.components, other.components)))

    def __eq__(self, other):
        if not isinstance(other, JacobiForm):
            return NotImplemented
        return (self.weight == other.weight and self.index == other.index
                and self.prec == other.prec and self.equal_within(other))

    __hash__ = None

    def __repr__(self):
        kind = "WeakJacobiForm" if self.weak else "JacobiForm"
        return "%s(weight=%s, index=%s, dim=%d, prec=%s)" % (
            kind, self.weight, self.index, self.rep_dim, self.prec)

    def to_json(self):
        obj = {
            "weight": frac_str(self.weight),
            "index": frac_str(self.index),
            "rep_dim": self.rep_dim,
            "prec": frac_str(self.prec),
            "period": self.period,
            "table": [[frac_str(n), frac_str(r), [v.to_json() for v in vec]]
                      for (n, r), vec in self.table().items()],
        }
        if self.weak:
            obj["weak"] = True
        return obj

    @classmethod
    def from_json(cls, obj):
        kind = WeakJacobiForm if obj.get("weak") else JacobiForm
        table = {(parse_frac(n), parse_frac(r)): tuple(CycNumber.from_json(v) for v in vec)
                 for n, r, vec in obj["table"]}
        return kind.from_table(parse_frac(obj["weight"]), parse_frac(obj["index"]), table,
                               parse_frac(obj["prec"]), obj["rep_dim"], obj.get("period", 1))


class WeakJacobiForm(JacobiForm):
    """Jacobi-form-like table without the r^2 <= 4mn support condition."""

    weak = True


def _product_kind(f, g):
    return WeakJacobiForm if (f.weak or g.weak) else JacobiForm


def jacobi_mul(f, g):
    """Product of two Jacobi forms, at least one of them scalar valued."""
    if f.rep_dim != 1 and g.rep_dim != 1:
        raise IncompatibleShapes("jacobi_mul needs a scalar factor; use jacobi_tensor")
    if f.rep_dim == 1:
        comps = [f.components[0] * c for c in g.components]
    else:
        comps = [c * g.components[0] for c in f.components]
    return _product_kind(f, g)(f.weight + g.weight, f.index + g.index, comps,
                               lcm(f.period, g.period))


def jacobi_tensor(f, g):
    """Tensor product; coordinate i*dim(g) + j holds f_i * g_j."""
    comps = [a * b for a in f.components for b in g.components]
    return _product_kind(f, g)(f.weight + g.weight, f.index + g.index, comps,
                               lcm(f.period, g.period))


def jacobi_pair(lam, f, out_dim):
    """Apply a Hom(V, W)-valued form to a V-valued one.

    ``lam`` has out_dim * f.rep_dim components, read as a row-major matrix.
    """
    d = f.rep_dim
    if lam.rep_dim != out_dim * d:
        raise IncompatibleShapes("Hom-valued form of dimension %d cannot act on dimension %d"
                                 % (lam.rep_dim, d))
    prec = min(lam.prec, f.prec)
    comps = []
    for i in range(out_dim):
        acc = QZSeries.zero(prec)
        for j in range(d):
            a, b = lam.components[i * d + j], f.components[j]
            if not a.is_zero() and not b.is_zero():
                acc = acc + a * b
        comps.append(acc)
    return _product_kind(lam, f)(lam.weight + f.weight, lam.index + f.index, comps,
                                 lcm(lam.period, f.period))


# -- validation ------------------------------------------------------------------


def validate_jacobi(f):
    """Check support, periodicity, parity and exponent denominators."""
    rep = Report(repr(f))
    m, P = f.index, f.period
    for comp in f.components:
        dq, dz = comp.reduced().denom
        if P % dq or P % dz:
            rep.fail("denominator", "exponent denominators (%d, %d) exceed period %d" % (dq, dz, P))
            break
    table = f.table()
    for (n, r), vec in table.items():
        if n < 0:
            rep.fail("support", "negative q-order at (%s, %s)" % (n, r))
        elif not f.weak and r * r > 4 * m * n:
            rep.fail("support", "r^2 > 4mn at (%s, %s)" % (n, r))
    if m > 0:
        step = 2 * m * P
        dq = 1
        for n, _ in table:
            dq = lcm(dq, n.denominator)
        for (n, r), vec in table.items():
            disc = 4 * m * n - r * r
            limit = 4 * m * f.prec - disc  # partners need r2^2 < limit
            if limit <= 0:
                continue
            bound = isqrt(ceil(limit)) + 1
            for t in range(floor((-bound - r) / step), ceil((bound - r) / step) + 1):
                r2 = r + t * step
                n2 = (disc + r2 * r2) / (4 * m)
                if t == 0 or n2 < 0 or n2 >= f.prec or (n2 * dq).denominator != 1:
                    continue
                if f.coeff(n2, r2) != vec:
                    rep.fail("periodicity", "c(%s, %s) != c(%s, %s)" % (n, r, n2, r2))
    if f.rep_dim == 1 and P == 1 and f.weight.denominator == 1:
        sign = -1 if f.weight % 2 else 1
        for (n, r), vec in table.items():
            if r > 0 and f.coeff(n, -r)[0] != sign * vec[0]:
                rep.fail("parity", "c(%s, -%s) != (-1)^k c(%s, %s)" % (n, r, n, r))
    return rep


# -- weak generators and bases ---------------------------------------------------


def _integral(s):
    s = s.reduced()
    if s.denom != (1, 1):
        raise ArithmeticError("expected integral exponents, got denominators %s" % (s.denom,))
    return s


@lru_cache(maxsize=None)
def _generator_series(prec):
    prec = Fraction(prec)
    work = prec + 1  # dividing by eta^6 and theta_i(0)^2 costs precision
    eta, th1 = eta_theta(work)
    phi_m2 = (th1 * th1) / (eta ** 6)
    phi_0 = QZSeries.zero(work)
    for i in (2, 3, 4):
        t = jacobi_theta(i, work)
        t0 = theta_null(i, work)
        phi_0 = phi_0 + (t * t) / (t0 * t0)
    phi_0 = phi_0.scale(4)
    return _integral(phi_m2.truncate(prec)), _integral(phi_0.truncate(prec))


def weak_generators(prec):
    """The weak Jacobi forms phi_{-2,1} and phi_{0,1} to q-precision ``prec``.

    phi_{-2,1} = theta_1^2 / eta^6 and phi_{0,1} = 4 sum_{i=2..4} theta_i^2 / theta_i(0)^2,
    normalized so that their q^0 terms are zeta - 2 + zeta^-1 and
    zeta + 10 + zeta^-1.
    """
    a, b = _generator_series(Fraction(prec))
    return WeakJacobiForm(-2, 1, [a]), WeakJacobiForm(0, 1, [b])


@lru_cache(maxsize=None)
def _weak_power(c1, c2, prec):
    if c1 == c2 == 0:
        return QZSeries.one(prec)
    a, b = _generator_series(prec)
    if c1 > 0:
        return _weak_power(c1 - 1, c2, prec) * a
    return _weak_power(c1, c2 - 1, prec) * b


@lru_cache(maxsize=None)
def _modular_monomial(a, b, prec):
    if a == b == 0:
        return QSeries.one(prec)
    if a > 0:
        return _modular_monomial(a - 1, b, prec) * eisenstein_q(4, prec)
    return _modular_monomial(a, b - 1, prec) * eisenstein_q(6, prec)


def _modular_exponents(w):
    """(a, b) with 4a + 6b = w, a descending."""
    if w < 0 or w % 2:
        return []
    return [(a, (w - 4 * a) // 6) for a in range(w // 4, -1, -1) if (w - 4 * a) % 6 == 0]


def weak_monomials(k, m, prec):
    """Labelled spanning set E4^a E6^b phi_{-2,1}^c1 phi_{0,1}^c2 of weak J_{k,m}."""
    prec = Fraction(prec)
    out = []
    for c1 in range(m + 1):
        for a, b in _modular_exponents(k + 2 * c1):
            label = (a, b, c1, m - c1)
            series = _weak_power(c1, m - c1, prec) * _modular_monomial(a, b, prec)
            out.append((label, series.truncate(prec)))
    return out


def _check_weight(k, m):
    k = Fraction(k)
    if k.denominator != 1 or k % 2:
        raise UnsupportedWeight("basis construction needs even integral weight, got %s" % k)
    if Fraction(m).denominator != 1 or m < 0:
        raise ValueError("index must be a nonnegative integer, got %s" % m)
    return int(k), int(m)


@lru_cache(maxsize=None)
def _holomorphic_span(k, m, prec):
    monos = weak_monomials(k, m, prec)
    if not monos:
        return ()
    if m == 0:
        basis = [s for _, s in monos]
        # monomials are independent once prec exceeds dim M_k
        if len(_echelon_series(basis, prec)) < len(basis):
            raise PrecisionTooLow("precision %s too low to separate M_%d" % (prec, k))
        return tuple(basis)
    rows = {}
    for j, (_, s) in enumerate(monos):
        for (n, r), v in s.items():
            if 4 * m * n - r * r < 0:
                rows.setdefault((n, r), {})[j] = v
    mat = SparseMatrix.from_rows([rows[key] for key in sorted(rows)], len(monos))
    forms = []
    for vec in kernel_basis(mat):
        acc = QZSeries.zero(prec)
        for x, (_, s) in zip(vec, monos):
            if x:
                acc = acc + s.scale(x)
        forms.append(acc)
    return tuple(_echelon_series(forms, prec))


def _echelon_series(forms, prec):
    keys = sorted({k for s in forms for k, _ in s.items()})
    index = {k: i for i, k in enumerate(keys)}
    rows = [{index[k]: v for k, v in s.items()} for s in forms]
    _, reduced = rref(rows)
    out = []
    for row in reduced:
        coeffs = {keys[i]: v for i, v in row.items()}
        out.append(QZSeries(coeffs, prec))
    return out


def jacobi_basis(k, m, prec):
    """Echelonized basis of the holomorphic Jacobi forms J_{k,m} to precision ``prec``.

    The dimension is only reported when it agrees at ``prec`` and ``prec + 2``;
    otherwise PrecisionTooLow is raised.  For m = 0 the monomial basis
    E4^a E6^b of M_k is returned.
    """
    k, m = _check_weight(k, m)
    prec = Fraction(prec)
    if prec < 1:
        raise PrecisionTooLow("q-precision must be at least 1")
    low = _holomorphic_span(k, m, prec)
    high = _holomorphic_span(k, m, prec + 2)
    if len(low) != len(high):
        raise PrecisionTooLow("dim J_{%d,%d} is %d at precision %s but %d at %s"
                              % (k, m, len(low), prec, len(high), prec + 2))
    return [JacobiForm(k, m, [s]) for s in low]


def jacobi_dimension(k, m, prec=None):
    if prec is None:
        prec = m // 4 + 3
    return len(jacobi_basis(k, m, prec))
