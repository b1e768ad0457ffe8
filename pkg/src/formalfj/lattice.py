"""Even lattices and their discriminant forms."""

from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateGram
from .representation import DiscriminantForm

__all__ = [
    "EvenLattice",
    "smith_normal_form",
    "inertia",
    "discriminant_form",
    "s_space_dim",
    "read_gram",
]


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A):
    """Smith form of an integer matrix with transforms.

    Returns ``(D, U, V)`` with ``U A V = D`` diagonal, d_1 | d_2 | ..., all
    diagonal entries nonnegative and U, V unimodular.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, row)) for row in A]
    U, V = _identity(m), _identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row_dst += c * row_src
        for M in (D, U):
            M[dst] = [a + c * b for a, b in zip(M[dst], M[src])]

    def add_col(src, dst, c):
        for M in (D, V):
            for row in M:
                row[dst] += c * row[src]

    for t in range(min(m, n)):
        while True:
            nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            done = True
            for i in range(t + 1, m):
                q = D[i][t] // D[t][t]
                if q:
                    add_row(t, i, -q)
                if D[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = D[t][j] // D[t][t]
                if q:
                    add_col(t, j, -q)
                if D[t][j]:
                    done = False
            if not done:
                continue
            # divisibility: push offending entries into row t
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if D[t][t] < 0:
            U[t] = [-x for x in U[t]]
            D[t] = [-x for x in D[t]]
    return D, U, V


def inertia(gram):
    """(positive, negative, zero) counts by exact symmetric elimination."""
    A = [[Fraction(x) for x in row] for row in gram]
    n = len(A)
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if A[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i != j and A[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # congruence e_i -> e_i + e_j makes the diagonal entry 2 A[i][j]
            for k in range(n):
                A[i][k] += A[j][k]
            for k in range(n):
                A[k][i] += A[k][j]
            piv = i
        p = A[piv][piv]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            f = A[i][piv] / p
            if f:
                for k in range(n):
                    A[i][k] -= f * A[piv][k]
        for i in active:
            A[piv][i] = A[i][piv] = Fraction(0)
    return pos, neg, n - pos - neg


class EvenLattice:
    """An even lattice given by its Gram matrix."""

    def __init__(self, gram, signature=None):
        gram = [[int(x) for x in row] for row in gram]
        n = len(gram)
        if any(len(row) != n for row in gram):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            if gram[i][i] % 2:
                raise ValueError("Gram matrix must have even diagonal")
            for j in range(n):
                if gram[i][j] != gram[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        p, q, z = inertia(gram)
        if signature is None:
            signature = (p, q)
        elif tuple(signature) != (p, q) or z:
            raise ValueError("declared signature %s does not match inertia (%d, %d, %d)"
                             % (tuple(signature), p, q, z))
        self.gram = gram
        self.signature = tuple(signature)
        self.rank = n

    def det(self):
        if not self.gram:
            return 1
        D, _, _ = smith_normal_form(self.gram)
        out = 1
        for i in range(self.rank):
            out *= D[i][i]
        p, q = self.signature
        return out * (-1) ** q

    def __repr__(self):
        return "EvenLattice(%s, signature=%s)" % (self.gram, self.signature)


def discriminant_form(L):
    """L'/L with its quadratic form q(x) = (x, x)/2 mod 1.

    Generators come from the Smith form U G V = diag(e_i): the columns of
    V diag(1/e_i) with e_i > 1, of orders e_i.
    """
    n = L.rank
    if n == 0:
        return DiscriminantForm([], [], 0)
    D, U, V = smith_normal_form(L.gram)
    elems = [D[i][i] for i in range(n)]
    if 0 in elems:
        raise DegenerateGram("Gram matrix is degenerate")
    gens, orders = [], []
    for i, e in enumerate(elems):
        if e > 1:
            gens.append([Fraction(V[r][i], e) for r in range(n)])
            orders.append(e)
    G = L.gram

    def b(x, y):
        return sum(x[i] * G[i][j] * y[j] for i in range(n) for j in range(n))

    s = len(gens)
    table = [[(b(gens[i], gens[i]) / 2 if i == j else b(gens[i], gens[j])) % 1
              for j in range(s)] for i in range(s)]
    p, q = L.signature
    return DiscriminantForm(orders, table, (p - q) % 8)


def s_space_dim(D, r):
    """Dimension |L'/L|^r of the space of functions (L'/L)^r -> C."""
    if r < 1:
        raise ValueError("r must be positive")
    return D.order() ** r


def read_gram(text):
    """Parse whitespace separated integer rows; '#' starts a comment."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append([int(x) for x in line.replace(",", " ").split()])
    return rows
