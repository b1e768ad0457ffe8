"""
Formal Fourier-Jacobi series f = sum_m phi_m(tau, z) q'^m.

A ``FormalFJSeries`` stores phi_0, ..., phi_M as Jacobi forms known for
q-orders n <= N.  The algebra on them (tensor product, Hom pairing, the
symmetry test, inversion in the formal Laurent field and quotients) works
coefficient by coefficient on these truncations.  Inverses and quotients
are ``MeromorphicFJSeries`` whose coefficients are plain QZSeries that may
carry negative q-exponents; each coefficient keeps its own precision, and
comparisons only look at terms valid on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import ONE, ZERO, cyc, frac_str, parse_frac
from .errors import (
    IncompatiblePrecision,
    IncompatibleShapes,
    NonInvertibleLeadingCoefficient,
    Report,
)
from .jacobi import JacobiForm, jacobi_pair, jacobi_tensor, validate_jacobi
from .linalg import in_span, mat_vec
from .qseries import QSeries, QZSeries
from .representation import (
    Representation,
    invariant_subspace,
    rep_hom,
    rep_tensor,
    rep_trivial,
    symmetry_factor,
)

__all__ = [
    "FormalFJSeries",
    "MeromorphicFJSeries",
    "SymmetryReport",
    "fj_constant",
    "fj_lincomb",
    "fj_tensor",
    "fj_pair",
    "fj_is_symmetric",
    "fj_invert",
    "fj_meromorphic_expansion",
    "mero_mul",
    "validate_fj",
]


class FormalFJSeries:
    """phi_0 + phi_1 q' + ... + phi_M q'^M with every phi_m known for n <= qprec.

    With ``index_denom`` D > 1 the coefficient list is indexed by m in (1/D)Z,
    ``coeffs[j]`` having index j/D.
    """

    def __init__(self, weight, rep, coeffs, qprec, index_denom=1):
        self.weight = Fraction(weight)
        self.rep = rep
        self.qprec = Fraction(qprec)
        self.index_denom = int(index_denom)
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("a formal series needs at least phi_0")
        for j, phi in enumerate(coeffs):
            if phi.index != Fraction(j, self.index_denom):
                raise IncompatibleShapes("coefficient %d has index %s" % (j, phi.index))
            if phi.weight != self.weight:
                raise IncompatibleShapes("coefficient %d has weight %s, expected %s"
                                         % (j, phi.weight, self.weight))
            if phi.rep_dim != rep.dim:
                raise IncompatibleShapes("coefficient %d has dimension %d, expected %d"
                                         % (j, phi.rep_dim, rep.dim))
            if phi.prec <= self.qprec:
                raise IncompatiblePrecision("coefficient %d known only below q^%s" % (j, phi.prec))
        self.coeffs = [phi.truncate(self.qprec + Fraction(1, _qdenom(phi))) for phi in coeffs]

    @property
    def M(self):
        return Fraction(len(self.coeffs) - 1, self.index_denom)

    def indices(self):
        return [Fraction(j, self.index_denom) for j in range(len(self.coeffs))]

    def phi(self, m):
        j = Fraction(m) * self.index_denom
        if j.denominator != 1 or not 0 <= j < len(self.coeffs):
            return None
        return self.coeffs[int(j)]

    def c(self, m, n, r):
        """The coefficient vector c(phi_m; n, r)."""
        phi = self.phi(m)
        if phi is None:
            return tuple([ZERO] * self.rep.dim)
        return phi.coeff(n, r)

    def truncate(self, M=None, N=None):
        M = self.M if M is None else min(Fraction(M), self.M)
        N = self.qprec if N is None else min(Fraction(N), self.qprec)
        count = int(M * self.index_denom) + 1
        return FormalFJSeries(self.weight, self.rep, self.coeffs[:count], N, self.index_denom)

    def scale(self, s):
        return FormalFJSeries(self.weight, self.rep, [phi.scale(s) for phi in self.coeffs],
                              self.qprec, self.index_denom)

    def __add__(self, other):
        if not isinstance(other, FormalFJSeries):
            return NotImplemented
        if other.weight != self.weight or other.rep.dim != self.rep.dim:
            raise IncompatibleShapes("can only add series of equal weight and representation")
        if other.index_denom != self.index_denom:
            raise IncompatibleShapes("index denominators differ")
        count = min(len(self.coeffs), len(other.coeffs))
        return FormalFJSeries(self.weight, self.rep,
                              [a + b for a, b in zip(self.coeffs[:count], other.coeffs[:count])],
                              min(self.qprec, other.qprec), self.index_denom)

    def is_zero(self):
        return all(phi.is_zero() for phi in self.coeffs)

    def as_meromorphic(self):
        return MeromorphicFJSeries(self.weight, self.rep,
                                   [phi.components for phi in self.coeffs], self.index_denom)

    def equal_within(self, other):
        count = min(len(self.coeffs), len(other.coeffs))
        N = min(self.qprec, other.qprec)
        return all(a.truncate(N + 1).equal_within(b.truncate(N + 1))
                   for a, b in zip(self.coeffs[:count], other.coeffs[:count]))

    def __repr__(self):
        return "FormalFJSeries(weight=%s, rep=%s, M=%s, N=%s)" % (
            self.weight, self.rep.name or self.rep.dim, self.M, self.qprec)

    def to_json(self):
        obj = {
            "weight": frac_str(self.weight),
            "rep": self.rep.to_json(),
            "M": frac_str(self.M),
            "N": frac_str(self.qprec),
            "coeffs": [phi.to_json() for phi in self.coeffs],
        }
        if self.index_denom != 1:
            obj["index_denom"] = self.index_denom
        return obj

    @classmethod
    def from_json(cls, obj):
        rep = Representation.from_json(obj["rep"])
        coeffs = [JacobiForm.from_json(c) for c in obj["coeffs"]]
        out = cls(parse_frac(obj["weight"]), rep, coeffs, parse_frac(obj["N"]),
                  obj.get("index_denom", 1))
        if out.M != parse_frac(obj["M"]):
            raise ValueError("declared M does not match the number of coefficients")
        return out


def _qdenom(phi):
    d = 1
    for c in phi.components:
        d = max(d, c.denom[0])
    return d


def fj_constant(value=1, qprec=0, M=0, weight=0, rep=None):
    """The constant series ``value`` (weight 0, trivial representation by default)."""
    rep = rep or rep_trivial()
    vec = [cyc(x) for x in (value if isinstance(value, (list, tuple)) else [value])]
    if len(vec) != rep.dim:
        raise IncompatibleShapes("constant has %d entries for a %d-dim representation"
                                 % (len(vec), rep.dim))
    prec = Fraction(qprec) + 1
    phi0 = JacobiForm(weight, 0, [QZSeries({(0, 0): v}, prec) for v in vec])
    rest = [JacobiForm.zero(weight, m, prec, rep.dim) for m in range(1, int(M) + 1)]
    return FormalFJSeries(weight, rep, [phi0] + rest, qprec)


def fj_lincomb(series, scalars):
    """sum_i scalars[i] * series[i] for series of equal shape."""
    out = None
    for f, s in zip(series, scalars):
        if not s:
            continue
        term = f.scale(s)
        out = term if out is None else out + term
    if out is None:
        out = series[0].scale(0)
    return out


# -- products ----------------------------------------------------------------------


def _check_qprec(f, g):
    if f.qprec != g.qprec:
        raise IncompatiblePrecision("q-precisions differ: %s vs %s" % (f.qprec, g.qprec))
    if f.index_denom != g.index_denom:
        raise IncompatibleShapes("index denominators differ")


def _convolve(f, g, combine):
    count = min(len(f.coeffs), len(g.coeffs))
    out = []
    for total in range(count):
        acc = None
        for j in range(total + 1):
            a, b = f.coeffs[j], g.coeffs[total - j]
            term = combine(a, b)
            acc = term if acc is None else acc + term
        out.append(acc)
    return out


def fj_tensor(f, g):
    """f (x) g with q'^M coefficient sum_{m + m1 = M} phi_m (x) psi_m1."""
    _check_qprec(f, g)

    def combine(a, b):
        if a.is_zero() or b.is_zero():
            return JacobiForm.zero(a.weight + b.weight, a.index + b.index,
                                   min(a.prec, b.prec), a.rep_dim * b.rep_dim)
        return jacobi_tensor(a, b)

    return FormalFJSeries(f.weight + g.weight, rep_tensor(f.rep, g.rep),
                          _convolve(f, g, combine), f.qprec, f.index_denom)


def fj_pair(g, f, sigma):
    """<g, f> for g valued in Hom(V_rho, V_sigma) and f valued in V_rho."""
    _check_qprec(f, g)
    if g.rep.dim != sigma.dim * f.rep.dim:
        raise IncompatibleShapes("Hom series has dimension %d, expected %d x %d"
                                 % (g.rep.dim, sigma.dim, f.rep.dim))
    if not g.rep.same_matrices(rep_hom(f.rep, sigma)):
        raise IncompatibleShapes("Hom series does not carry Hom(rho, sigma)")

    def combine(lam, phi):
        if lam.is_zero() or phi.is_zero():
            return JacobiForm.zero(lam.weight + phi.weight, lam.index + phi.index,
                                   min(lam.prec, phi.prec), sigma.dim)
        return jacobi_pair(lam, phi, sigma.dim)

    return FormalFJSeries(f.weight + g.weight, sigma, _convolve(g, f, combine), f.qprec,
                          f.index_denom)


# -- symmetry ----------------------------------------------------------------------


@dataclass
class SymmetryReport:
    symmetric: bool
    violation: tuple = None
    checked: int = 0
    skipped: int = 0
    # half-integral k: the verdict rests on the branch i^(2k) = exp(pi i k)
    convention_dependent: bool = False

    def __bool__(self):
        return self.symmetric

    def to_json(self):
        return {
            "symmetric": self.symmetric,
            "violation": None if self.violation is None else [frac_str(x) for x in self.violation],
            "checked": self.checked,
            "skipped": self.skipped,
            "convention_dependent": self.convention_dependent,
        }


def _r_values(phi, n):
    rs = set()
    for comp in phi.components:
        rs.update(comp.zeta_poly(n))
    return rs


def fj_is_symmetric(f):
    """Test c(phi_m; n, r) = i^(2k) rho(delta) c(phi_n; m, r) for all m, n <= M.

    Index pairs with m or n beyond the q-precision are skipped and counted;
    the first violation in lexicographic (m, n, r) order is reported.
    """
    factor = symmetry_factor(f.weight)
    delta = f.rep.delta
    identity = all(delta[i][j] == (1 if i == j else 0)
                   for i in range(f.rep.dim) for j in range(f.rep.dim))
    checked = skipped = 0
    flag = f.weight.denominator != 1
    idx = f.indices()
    for m in idx:
        phi_m = f.phi(m)
        for n in idx:
            if m > f.qprec or n > f.qprec:
                skipped += 1
                continue
            phi_n = f.phi(n)
            for r in sorted(_r_values(phi_m, n) | _r_values(phi_n, m)):
                lhs = phi_m.coeff(n, r)
                v = phi_n.coeff(m, r)
                if not identity:
                    v = mat_vec(delta, v)
                if any(a != factor * b for a, b in zip(lhs, v)):
                    return SymmetryReport(False, (m, n, r), checked, skipped, flag)
                checked += 1
    return SymmetryReport(True, None, checked, skipped, flag)


def validate_fj(f, symmetric=None):
    """Coherence of indices and weights, Jacobi validity, values in V_rho(k)."""
    rep = Report(repr(f))
    for j, phi in enumerate(f.coeffs):
        if phi.index != Fraction(j, f.index_denom) or phi.weight != f.weight:
            rep.fail("coherence", "coefficient %d has weight %s index %s" % (j, phi.weight, phi.index))
        sub = validate_jacobi(phi)
        for kind, detail in sub.violations:
            rep.fail(kind, "phi_%s: %s" % (phi.index, detail))
    basis = invariant_subspace(f.rep, f.weight)
    for phi in f.coeffs:
        for key, vec in phi.table().items():
            if not in_span(basis, vec):
                rep.fail("invariant", "c(phi_%s; %s, %s) not in V_rho(k)" % (phi.index, *key))
                break
    if symmetric:
        s = fj_is_symmetric(f)
        if not s:
            rep.fail("symmetry", "violated at %s" % (s.violation,))
    return rep


# -- meromorphic series ------------------------------------------------------------


class MeromorphicFJSeries:
    """sum_m chi_m q'^m with Laurent QZSeries coefficients.

    ``coeffs[j]`` is a tuple of ``rep.dim`` QZSeries; coefficient j has index
    j / index_denom.  Every series carries its own precision window.
    """

    def __init__(self, weight, rep, coeffs, index_denom=1):
        self.weight = Fraction(weight)
        self.rep = rep
        self.coeffs = [tuple(c) for c in coeffs]
        self.index_denom = int(index_denom)
        for j, c in enumerate(self.coeffs):
            if len(c) != rep.dim:
                raise IncompatibleShapes("coefficient %d has %d components" % (j, len(c)))

    @property
    def M(self):
        return Fraction(len(self.coeffs) - 1, self.index_denom)

    def index(self, j):
        return Fraction(j, self.index_denom)

    def windows(self):
        """(lowest exponent, precision) of every coefficient."""
        return [(min(c.valuation() for c in comps), min(c.prec for c in comps))
                for comps in self.coeffs]

    def agrees_with(self, other):
        """Equality on every term valid for both operands."""
        if self.rep.dim != other.rep.dim:
            return False
        for a, b in zip(self.coeffs, other.coeffs):
            for x, y in zip(a, b):
                if not x.equal_within(y):
                    return False
        return True

    def is_one(self):
        """True iff the series is 1 + O(...) in every tracked window."""
        if self.rep.dim != 1:
            return False
        head = self.coeffs[0][0]
        if not head.equal_within(QZSeries.one(head.prec)):
            return False
        return all(c[0].is_zero() for c in self.coeffs[1:])

    def __repr__(self):
        return "MeromorphicFJSeries(weight=%s, dim=%d, M=%s)" % (self.weight, self.rep.dim, self.M)

    def to_json(self):
        return {
            "weight": frac_str(self.weight),
            "rep": self.rep.to_json(),
            "index_denom": self.index_denom,
            "coeffs": [{"index": frac_str(self.index(j)), "components": [c.to_json() for c in comps]}
                       for j, comps in enumerate(self.coeffs)],
        }

    @classmethod
    def from_json(cls, obj):
        coeffs = [[QZSeries.from_json(c) for c in entry["components"]] for entry in obj["coeffs"]]
        return cls(parse_frac(obj["weight"]), Representation.from_json(obj["rep"]), coeffs,
                   obj.get("index_denom", 1))


def mero_mul(a, b):
    """Product of two meromorphic series, one of them scalar valued."""
    if a.index_denom != b.index_denom:
        raise IncompatibleShapes("index denominators differ")
    if a.rep.dim == 1:
        scalar, vec, rep = a, b, b.rep
    elif b.rep.dim == 1:
        scalar, vec, rep = b, a, a.rep
    else:
        raise IncompatibleShapes("meromorphic product needs a scalar factor")
    count = min(len(a.coeffs), len(b.coeffs))
    out = []
    for total in range(count):
        comps = []
        for i in range(rep.dim):
            acc = None
            for j in range(total + 1):
                term = scalar.coeffs[j][0] * vec.coeffs[total - j][i]
                acc = term if acc is None else acc + term
            comps.append(acc)
        out.append(comps)
    return MeromorphicFJSeries(a.weight + b.weight, rep, out, a.index_denom)


def fj_invert(f):
    """Inverse of a scalar series in the formal Laurent field.

    chi_0 = 1/phi_0 and chi_m = -chi_0 sum_{j=1..m} phi_j chi_{m-j}; the
    q'^m coefficient has weight -k and index m.
    """
    if f.rep.dim != 1:
        raise IncompatibleShapes("only scalar series can be inverted")
    phi0 = f.coeffs[0].components[0]
    if any(set(row) != {0} for row in phi0._c.values()):
        raise ValueError("phi_0 must not depend on zeta")
    head = QSeries._raw({q: row[0] for q, row in phi0._c.items()}, phi0.prec, phi0.denom[0])
    if head.is_zero():
        raise NonInvertibleLeadingCoefficient("phi_0 vanishes to precision %s" % head.prec)
    chi0 = QZSeries.from_qseries(head.inverse())
    phis = [phi.components[0] for phi in f.coeffs]
    chis = [chi0]
    for m in range(1, len(phis)):
        acc = None
        for j in range(1, m + 1):
            if phis[j].is_zero():
                continue
            term = phis[j] * chis[m - j]
            acc = term if acc is None else acc + term
        if acc is None:
            prec = min(min(p.prec for p in phis[1:m + 1]) + min(chi0.valuation(), 0), chi0.prec)
            chis.append(QZSeries.zero(prec))
        else:
            chis.append(-(chi0 * acc))
    return MeromorphicFJSeries(-f.weight, f.rep, [(c,) for c in chis], f.index_denom)


def fj_meromorphic_expansion(g, h):
    """Formal Fourier-Jacobi expansion of the quotient g / h (h scalar)."""
    return mero_mul(g.as_meromorphic(), fj_invert(h))
