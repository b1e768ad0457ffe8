"""
Finite-dimensional representations of the genus-2 metaplectic group, given
extensionally by the images of the few elements the engine consumes:

* ``delta``: the coordinate swap (tau, z, tau') -> (tau', z, tau) with
  metaplectic component i;
* ``c1``, ``c2``: the central elements (-1, 1) and (1, -1).

Also genus-1 Weil representations of discriminant forms.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd

from .cyclotomic import ONE, ZERO, CycNumber, cyc, frac_str, lcm, parse_frac, root_of_unity, sqrt_integer
from .errors import Report
from .linalg import (
    SparseMatrix,
    is_identity,
    kernel_basis,
    mat_block_diag,
    mat_conj_transpose,
    mat_eq,
    mat_from_json,
    mat_identity,
    mat_inverse,
    mat_kron,
    mat_mul,
    mat_scale,
    mat_to_json,
    mat_transpose,
    as_cyc_matrix,
)

__all__ = [
    "Representation",
    "DiscriminantForm",
    "rep_trivial",
    "rep_dual",
    "rep_tensor",
    "rep_hom",
    "rep_dsum",
    "rep_power",
    "rep_weil_genus2",
    "invariant_subspace",
    "symmetry_factor",
    "weil_rep_genus1",
    "verify_representation",
    "verify_weil_genus1",
]

NAMED = ("delta", "c1", "c2")


class Representation:
    """Images of delta, (-1, 1) and (1, -1) as exact square matrices."""

    def __init__(self, delta, c1, c2, level=1, name=None, jacobi=None):
        self.delta = as_cyc_matrix(delta)
        self.c1 = as_cyc_matrix(c1)
        self.c2 = as_cyc_matrix(c2)
        self.dim = len(self.delta)
        if self.dim < 1:
            raise ValueError("representation must have positive dimension")
        for m in (self.delta, self.c1, self.c2):
            if len(m) != self.dim or any(len(row) != self.dim for row in m):
                raise ValueError("named images must all be %dx%d" % (self.dim, self.dim))
        self.level = int(level)
        self.name = name
        self.jacobi = jacobi or {}

    def image(self, which):
        return getattr(self, which)

    def same_matrices(self, other):
        return self.dim == other.dim and all(
            mat_eq(self.image(w), other.image(w)) for w in NAMED)

    def __repr__(self):
        return "Representation(%s, dim=%d, level=%d)" % (self.name or "?", self.dim, self.level)

    def to_json(self):
        obj = {"dim": self.dim, "level": self.level}
        for w in NAMED:
            obj[w] = mat_to_json(self.image(w))
        if self.name:
            obj["name"] = self.name
        return obj

    @classmethod
    def from_json(cls, obj):
        return cls(mat_from_json(obj["delta"]), mat_from_json(obj["c1"]), mat_from_json(obj["c2"]),
                   obj.get("level", 1), obj.get("name"))


def rep_trivial(dim=1):
    eye = mat_identity(dim)
    return Representation(eye, eye, eye, 1, "trivial" if dim == 1 else "trivial^%d" % dim)


def rep_dual(rho):
    """Contragredient: g -> transpose of rho(g)^-1."""
    imgs = [mat_transpose(mat_inverse(rho.image(w))) for w in NAMED]
    return Representation(*imgs, level=rho.level, name="dual(%s)" % (rho.name or "?"))


def rep_tensor(rho, sigma):
    imgs = [mat_kron(rho.image(w), sigma.image(w)) for w in NAMED]
    return Representation(*imgs, level=lcm(rho.level, sigma.level),
                          name="%s*%s" % (rho.name or "?", sigma.name or "?"))


def rep_hom(rho, sigma):
    """Hom(V_rho, V_sigma) on row-major flattened sigma.dim x rho.dim matrices.

    lambda -> sigma(g) lambda rho(g)^-1, i.e. sigma(g) kron rho(g)^-T.
    """
    imgs = [mat_kron(sigma.image(w), mat_transpose(mat_inverse(rho.image(w)))) for w in NAMED]
    return Representation(*imgs, level=lcm(rho.level, sigma.level),
                          name="Hom(%s,%s)" % (rho.name or "?", sigma.name or "?"))


def rep_dsum(rho, sigma):
    imgs = [mat_block_diag(rho.image(w), sigma.image(w)) for w in NAMED]
    return Representation(*imgs, level=lcm(rho.level, sigma.level),
                          name="%s+%s" % (rho.name or "?", sigma.name or "?"))


def rep_power(rho, d):
    """Direct sum of d copies of rho."""
    out = rho
    for _ in range(d - 1):
        out = rep_dsum(out, rho)
    return out


def symmetry_factor(k):
    """i^(2k) = exp(pi i k) for half-integral k."""
    k = Fraction(k)
    if (2 * k).denominator != 1:
        raise ValueError("weight must be half-integral, got %s" % k)
    return root_of_unity(k / 2)


def invariant_subspace(rho, k):
    """Basis of V_rho(k) = {v : rho(-1,1) v = v = (-1)^(2k) rho(1,-1) v}.

    Returned as a canonical (reduced echelon) list of vectors.
    """
    k = Fraction(k)
    sign = -1 if (2 * k) % 2 else 1
    d = rho.dim
    rows = []
    for mat, s in ((rho.c1, 1), (rho.c2, sign)):
        for i in range(d):
            row = {j: mat[i][j] * s for j in range(d) if mat[i][j]}
            row[i] = row.get(i, ZERO) - 1
            rows.append({j: v for j, v in row.items() if v})
    m = SparseMatrix.from_rows(rows, d)
    return kernel_basis(m)


def verify_representation(rho):
    """Check unitarity, the center relations and delta^2 = (1, -1)."""
    rep = Report(repr(rho))
    for w in NAMED:
        m = rho.image(w)
        if not is_identity(mat_mul(m, mat_conj_transpose(m))):
            rep.fail("unitary", "%s image is not unitary" % w)
    for w in ("c1", "c2"):
        m = rho.image(w)
        if not is_identity(mat_mul(m, m)):
            rep.fail("involution", "%s image does not square to the identity" % w)
    if not mat_eq(mat_mul(rho.c1, rho.c2), mat_mul(rho.c2, rho.c1)):
        rep.fail("commute", "center images do not commute")
    if not mat_eq(mat_mul(rho.delta, rho.delta), rho.c2):
        rep.fail("delta_square", "delta^2 differs from the image of (1, -1)")
    return rep


# -- discriminant forms ------------------------------------------------------------


class DiscriminantForm:
    """A finite quadratic module on Z/d_1 x ... x Z/d_s.

    ``qtable[i][i]`` is q(g_i) mod 1 and ``qtable[i][j]`` (i != j) the bilinear
    value (g_i, g_j) mod 1, so that

        q(sum x_i g_i) = sum x_i^2 q(g_i) + sum_{i<j} x_i x_j (g_i, g_j).
    """

    def __init__(self, orders, qtable, signature_mod8=0):
        self.orders = tuple(int(d) for d in orders)
        s = len(self.orders)
        self.qtable = [[Fraction(qtable[i][j]) % 1 for j in range(s)] for i in range(s)]
        self.signature_mod8 = int(signature_mod8) % 8
        for i in range(s):
            d = self.orders[i]
            q = self.qtable[i][i]
            if (2 * d * q) % 1 or (d * d * q) % 1:
                raise ValueError("q(g_%d) = %s is not well defined modulo %d" % (i, q, d))
            for j in range(s):
                if self.qtable[i][j] != self.qtable[j][i]:
                    raise ValueError("bilinear table must be symmetric")
                if i != j and (d * self.qtable[i][j]) % 1:
                    raise ValueError("(g_%d, g_%d) is not well defined" % (i, j))

    def order(self):
        out = 1
        for d in self.orders:
            out *= d
        return out

    def elements(self):
        """Group elements as coordinate tuples, lexicographic order."""
        return list(product(*[range(d) for d in self.orders]))

    def q(self, x):
        s = len(self.orders)
        val = Fraction(0)
        for i in range(s):
            if x[i]:
                val += x[i] * x[i] * self.qtable[i][i]
                for j in range(i + 1, s):
                    val += x[i] * x[j] * self.qtable[i][j]
        return val % 1

    def bilinear(self, x, y):
        s = len(self.orders)
        val = Fraction(0)
        for i in range(s):
            for j in range(s):
                if x[i] and y[j]:
                    w = 2 * self.qtable[i][i] if i == j else self.qtable[i][j]
                    val += x[i] * y[j] * w
        return val % 1

    def level(self):
        """Smallest N with N q(x) integral for all x."""
        n = 1
        for x in self.elements():
            n = lcm(n, self.q(x).denominator)
        return n

    def is_quadratic_form(self):
        """q(x+y) - q(x) - q(y) is the bilinear form, on all generator pairs."""
        s = len(self.orders)
        gens = [tuple(1 if i == j else 0 for j in range(s)) for i in range(s)]
        for x in gens:
            for y in gens:
                xy = tuple((a + b) % d for a, b, d in zip(x, y, self.orders))
                if (self.q(xy) - self.q(x) - self.q(y) - self.bilinear(x, y)) % 1:
                    return False
        return True

    def value_multiset(self):
        return sorted(self.q(x) for x in self.elements())

    def __repr__(self):
        return "DiscriminantForm(orders=%s, sig=%d)" % (list(self.orders), self.signature_mod8)

    def to_json(self):
        return {
            "orders": list(self.orders),
            "qtable": [[frac_str(v) for v in row] for row in self.qtable],
            "signature_mod8": self.signature_mod8,
        }

    @classmethod
    def from_json(cls, obj):
        return cls(obj["orders"], [[parse_frac(v) for v in row] for row in obj["qtable"]],
                   obj.get("signature_mod8", 0))


def weil_rep_genus1(D):
    """Images of S and T under the Weil representation attached to ``D``.

    T e_g = e(q(g)) e_g and
    S e_g = e(-sig/8) / sqrt(|D|) sum_h e(-(g, h)) e_h,
    on the basis indexed by ``D.elements()``.
    """
    elems = D.elements()
    n = len(elems)
    T = [[ZERO] * n for _ in range(n)]
    for i, x in enumerate(elems):
        T[i][i] = root_of_unity(D.q(x))
    pref = root_of_unity(Fraction(-D.signature_mod8, 8)) / sqrt_integer(n)
    S = [[ZERO] * n for _ in range(n)]
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            # column i is the image of e_x
            S[j][i] = pref * root_of_unity(-D.bilinear(x, y))
    return S, T


def verify_weil_genus1(S, T):
    """Unitarity, (ST)^3 = S^2, and S^4 scalar +-1."""
    rep = Report("weil genus 1")
    for name, m in (("S", S), ("T", T)):
        if not is_identity(mat_mul(m, mat_conj_transpose(m))):
            rep.fail("unitary", "%s is not unitary" % name)
    st = mat_mul(S, T)
    s2 = mat_mul(S, S)
    if not mat_eq(mat_mul(mat_mul(st, st), st), s2):
        rep.fail("braid", "(ST)^3 != S^2")
    s4 = mat_mul(s2, s2)
    n = len(S)
    if not (is_identity(s4) or mat_eq(s4, mat_scale(mat_identity(n), -1))):
        rep.fail("center", "S^4 is not +-identity")
    return rep


def rep_weil_genus2(D, delta_scalar=None):
    """Partial genus-2 Weil representation on functions D^2 -> C.

    Only the images the engine consumes are built:

    * (1, -1), the nontrivial central element of the cover, acts by
      (-1)^sig, the square of the genus-1 S^4 = (-1)^sig;
    * (-1, 1) acts by (l1, l2) -> (-l1, -l2);
    * delta is the swap (l1, l2) -> (l2, l1) times ``delta_scalar``.

    delta^2 = (1, -1) forces delta_scalar^2 = (-1)^sig; the default is 1 for
    even and i for odd signature.  Other scalars are accepted as a convention
    knob and show up in verify_representation.
    """
    odd = D.signature_mod8 % 2
    if delta_scalar is None:
        delta_scalar = root_of_unity(Fraction(1, 4)) if odd else ONE
    elems = D.elements()
    pairs = [(a, b) for a in elems for b in elems]
    index = {p: i for i, p in enumerate(pairs)}
    n = len(pairs)
    s = cyc(delta_scalar)
    delta = [[ZERO] * n for _ in range(n)]
    c1 = [[ZERO] * n for _ in range(n)]
    for (a, b), i in index.items():
        delta[index[(b, a)]][i] = s
        na = tuple((-x) % d for x, d in zip(a, D.orders))
        nb = tuple((-x) % d for x, d in zip(b, D.orders))
        c1[index[(na, nb)]][i] = ONE
    c2 = mat_scale(mat_identity(n), -1 if odd else 1)
    level = lcm(D.level(), 4 if s.conductor > 1 else 1)
    return Representation(delta, c1, c2, level, name="weil2(%s)" % list(D.orders))
