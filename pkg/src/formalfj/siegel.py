"""Genus-2 Siegel forms as coefficient tables and the symmetric-space solver."""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import ZERO, CycNumber, frac_str, parse_frac
from .errors import BadWeight, NotSymmetric, PrecisionTooLow, Report, UnsupportedWeight
from .fjseries import FormalFJSeries, fj_is_symmetric
from .jacobi import JacobiForm, jacobi_basis
from .linalg import SparseMatrix, in_span, kernel_basis, mat_vec
from .representation import Representation, invariant_subspace, rep_trivial, symmetry_factor

__all__ = [
    "SiegelForm",
    "SymmetricSpace",
    "fj_to_siegel",
    "siegel_to_fj",
    "symmetric_space",
    "expected_dimension",
    "engine_threads",
    "fj_in_span",
]


class SiegelForm:
    """Table T = [[n, r/2], [r/2, m]] -> a(T), stored under the key (n, r, m).

    Entries are known for n <= N and m <= M; zero vectors are not stored.
    """

    def __init__(self, weight, rep, coeffs, M, N, index_denom=1):
        self.weight = Fraction(weight)
        self.rep = rep
        self.M = Fraction(M)
        self.N = Fraction(N)
        self.index_denom = int(index_denom)
        table = {}
        for (n, r, m), vec in coeffs.items():
            vec = tuple(CycNumber.rational(v) if not isinstance(v, CycNumber) else v for v in vec)
            if len(vec) != rep.dim:
                raise ValueError("coefficient at %s has wrong length" % ((n, r, m),))
            if any(not v.is_zero() for v in vec):
                table[(Fraction(n), Fraction(r), Fraction(m))] = vec
        self.coeffs = dict(sorted(table.items()))

    @property
    def prec(self):
        """Bound on max(n, m) below which the table is complete."""
        return min(self.M, self.N)

    def a(self, n, r, m):
        key = (Fraction(n), Fraction(r), Fraction(m))
        return self.coeffs.get(key, tuple([ZERO] * self.rep.dim))

    def is_zero(self):
        return not self.coeffs

    def validate(self):
        rep = Report(repr(self))
        factor = symmetry_factor(self.weight)
        basis = invariant_subspace(self.rep, self.weight)
        for (n, r, m), vec in self.coeffs.items():
            if n < 0 or m < 0 or r * r > 4 * n * m:
                rep.fail("psd", "T(%s, %s, %s) is not positive semidefinite" % (n, r, m))
            if n <= self.M and m <= self.N:
                other = [factor * x for x in mat_vec(self.rep.delta, self.a(m, r, n))]
                if list(vec) != other:
                    rep.fail("symmetry", "a(%s, %s, %s) does not match its swap" % (n, r, m))
            if not in_span(basis, vec):
                rep.fail("invariant", "a(%s, %s, %s) not in V_rho(k)" % (n, r, m))
        return rep

    def __eq__(self, other):
        if not isinstance(other, SiegelForm):
            return NotImplemented
        return (self.weight == other.weight and self.M == other.M and self.N == other.N
                and self.rep.same_matrices(other.rep) and self.coeffs == other.coeffs)

    __hash__ = None

    def __repr__(self):
        return "SiegelForm(weight=%s, M=%s, N=%s, terms=%d)" % (
            self.weight, self.M, self.N, len(self.coeffs))

    def to_json(self):
        obj = {
            "weight": frac_str(self.weight),
            "rep": self.rep.to_json(),
            "M": frac_str(self.M),
            "N": frac_str(self.N),
            "coeffs": [[frac_str(n), frac_str(r), frac_str(m), [v.to_json() for v in vec]]
                       for (n, r, m), vec in self.coeffs.items()],
        }
        if self.index_denom != 1:
            obj["index_denom"] = self.index_denom
        return obj

    @classmethod
    def from_json(cls, obj):
        coeffs = {(parse_frac(n), parse_frac(r), parse_frac(m)):
                  tuple(CycNumber.from_json(v) for v in vec)
                  for n, r, m, vec in obj["coeffs"]}
        return cls(parse_frac(obj["weight"]), Representation.from_json(obj["rep"]), coeffs,
                   parse_frac(obj["M"]), parse_frac(obj["N"]), obj.get("index_denom", 1))


def fj_to_siegel(f):
    """a([[n, r/2], [r/2, m]]) = c(phi_m; n, r) for a symmetric series."""
    report = fj_is_symmetric(f)
    if not report:
        raise NotSymmetric(report.violation)
    coeffs = {}
    for m, phi in zip(f.indices(), f.coeffs):
        for (n, r), vec in phi.table().items():
            coeffs[(n, r, m)] = vec
    return SiegelForm(f.weight, f.rep, coeffs, f.M, f.qprec, f.index_denom)


def siegel_to_fj(F):
    """Slice the table at fixed m to recover phi_m."""
    slices = {}
    for (n, r, m), vec in F.coeffs.items():
        slices.setdefault(m, {})[(n, r)] = vec
    count = int(F.M * F.index_denom) + 1
    coeffs = []
    for j in range(count):
        m = Fraction(j, F.index_denom)
        table = slices.get(m, {})
        phi = JacobiForm.from_table(F.weight, m, table, F.N + 1, F.rep.dim)
        coeffs.append(phi)
    return FormalFJSeries(F.weight, F.rep, coeffs, F.N, F.index_denom)


def _flatten(f, keys):
    out = []
    for m, n, r in keys:
        out.extend(f.c(m, n, r))
    return out


def fj_in_span(f, basis):
    """Membership of f in the span of ``basis``, compared on the common window."""
    if not basis:
        return f.is_zero()
    M = min([f.M] + [b.M for b in basis])
    N = min([f.qprec] + [b.qprec for b in basis])
    keys = set()
    for g in [f] + list(basis):
        for m, phi in zip(g.indices(), g.coeffs):
            if m <= M:
                keys.update((m, n, r) for n, r in phi.keys() if n <= N)
    keys = sorted(keys)
    return in_span([_flatten(b, keys) for b in basis], _flatten(f, keys))


# -- dimension oracle ------------------------------------------------------------


def expected_dimension(k):
    """Coefficient of t^k in 1/((1-t^4)(1-t^6)(1-t^10)(1-t^12))."""
    k = Fraction(k)
    if k.denominator != 1 or k % 2 or not 0 <= k <= 40:
        raise BadWeight("expected_dimension needs even k in [0, 40], got %s" % k)
    k = int(k)
    counts = [1] + [0] * k
    for g in (4, 6, 10, 12):
        for w in range(g, k + 1):
            counts[w] += counts[w - g]
    return counts[k]


# -- the solver --------------------------------------------------------------------


def engine_threads():
    """Worker cap from FJ_ENGINE_THREADS (default 1)."""
    raw = os.environ.get("FJ_ENGINE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass
class SymmetricSpace:
    dimension: int
    basis: list
    manifest: dict = field(default_factory=dict)


def _scalar_bases(k, M, N):
    prec = Fraction(N) + 1
    ms = list(range(M + 1))
    threads = engine_threads()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            bases = list(pool.map(lambda m: jacobi_basis(k, m, prec), ms))
    else:
        bases = [jacobi_basis(k, m, prec) for m in ms]
    return bases


def _solve(k, rho, M, N, vbasis):
    """Kernel of the symmetry constraints at fixed (M, N)."""
    d = rho.dim
    bases = _scalar_bases(k, M, N)
    factor = symmetry_factor(k)
    # image of each invariant vector under i^(2k) rho(delta)
    twisted = [[factor * x for x in mat_vec(rho.delta, v)] for v in vbasis]
    offsets, col = [], 0
    for b in bases:
        offsets.append(col)
        col += len(b) * len(vbasis)
    nv = len(vbasis)

    def terms(m, n, r, vecs, sign, row_of):
        for i, form in enumerate(bases[m]):
            c = form.components[0].coeff(n, r)
            if c.is_zero():
                continue
            for b, vec in enumerate(vecs):
                j = offsets[m] + i * nv + b
                for comp in range(d):
                    x = vec[comp]
                    if x:
                        row = row_of[comp]
                        row[j] = row.get(j, ZERO) + sign * c * x

    rows = []
    for m in range(M + 1):
        for n in range(m, M + 1):
            if n > N:
                continue
            bound = int((4 * m * n) ** 0.5) + 1
            for r in range(-bound, bound + 1):
                if r * r > 4 * m * n:
                    continue
                row_of = [dict() for _ in range(d)]
                terms(m, n, r, vbasis, 1, row_of)
                terms(n, m, r, twisted, -1, row_of)
                for row in row_of:
                    row = {j: v for j, v in row.items() if not v.is_zero()}
                    if row:
                        rows.append(row)
    matrix = SparseMatrix.from_rows(rows, col)
    kernel = kernel_basis(matrix)
    series = []
    for vec in kernel:
        coeffs = []
        for m in range(M + 1):
            comps = None
            for i, form in enumerate(bases[m]):
                for b, v in enumerate(vbasis):
                    x = vec[offsets[m] + i * nv + b]
                    if x.is_zero():
                        continue
                    term = [form.components[0].scale(x * v[c]) for c in range(d)]
                    comps = term if comps is None else [p + q for p, q in zip(comps, term)]
            if comps is None:
                coeffs.append(JacobiForm.zero(k, m, Fraction(N) + 1, d))
            else:
                coeffs.append(JacobiForm(k, m, comps))
        series.append(FormalFJSeries(k, rho, coeffs, N))
    return series, matrix.shape


def symmetric_space(k, rho=None, M=6, N=8, stabilize=True, max_steps=3):
    """Symmetric formal Fourier-Jacobi series of weight k to truncation (M, N).

    Unknowns are coordinates of each phi_m in jacobi_basis(k, m) tensored with
    a basis of V_rho(k); the constraints are the symmetry relation for
    m <= n <= M, n <= N and r^2 <= 4mn.  With ``stabilize`` the dimension is
    only reported once it agrees at (M + 1, N) and (M, N + 2); otherwise
    (M, N) is raised by (1, 2) at most ``max_steps`` times before giving up
    with PrecisionTooLow.
    """
    rho = rho or rep_trivial()
    k = Fraction(k)
    M, N = int(M), int(N)
    if M < 0 or N < 0:
        raise ValueError("truncations must be nonnegative")
    start = time.perf_counter()
    vbasis = invariant_subspace(rho, k)
    manifest = {"k": frac_str(k), "rep": rho.name or "inline", "requested": [M, N]}
    if not vbasis:
        manifest.update(M=M, N=N, dimension=0, matrix_shape=[0, 0], stabilized=True,
                        seconds=round(time.perf_counter() - start, 3))
        return SymmetricSpace(0, [], manifest)
    if k.denominator != 1 or k % 2:
        raise UnsupportedWeight("the solver needs even integral weight when V_rho(k) != 0")
    k = int(k)
    history = []
    for _ in range(max_steps + 1 if stabilize else 1):
        basis, shape = _solve(k, rho, M, N, vbasis)
        history.append([M, N, len(basis)])
        if not stabilize:
            break
        more_m, _ = _solve(k, rho, M + 1, N, vbasis)
        more_n, _ = _solve(k, rho, M, N + 2, vbasis)
        history.append([M + 1, N, len(more_m)])
        history.append([M, N + 2, len(more_n)])
        if len(more_m) == len(basis) == len(more_n):
            break
        M, N = M + 1, N + 2
    else:
        raise PrecisionTooLow("dimension did not stabilize; last trials %s" % history[-3:])
    manifest.update(M=M, N=N, dimension=len(basis), matrix_shape=list(shape),
                    stabilized=stabilize, trials=history,
                    seconds=round(time.perf_counter() - start, 3))
    return SymmetricSpace(len(basis), basis, manifest)
