"""
Exact linear algebra over cyclotomic fields.

Sparse matrices are dictionaries of nonzero entries.  Row reduction works on
rows stored as ``{col: value}`` dicts and always returns the reduced row
echelon form, which is unique over a field, so every kernel or row-space
basis produced here is canonical: equal inputs give byte-identical outputs.

Small dense helpers (products, Kronecker products, inverses) operate on
lists of lists and back the representation module.
"""

from __future__ import annotations

from .cyclotomic import ONE, ZERO, CycNumber, cyc

__all__ = [
    "SparseMatrix",
    "rref",
    "rank",
    "kernel_basis",
    "row_basis",
    "in_span",
    "mat_identity",
    "mat_mul",
    "mat_kron",
    "mat_transpose",
    "mat_conj_transpose",
    "mat_inverse",
    "mat_eq",
    "mat_scale",
    "mat_block_diag",
    "mat_vec",
    "is_identity",
]


class SparseMatrix:
    """A rows x cols matrix with only its nonzero entries stored."""

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        self.entries = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError("entry (%d, %d) outside %dx%d matrix" % (i, j, rows, cols))
            v = cyc(v)
            if v:
                self.entries[(i, j)] = v

    @classmethod
    def from_dense(cls, dense, cols=None):
        dense = [list(r) for r in dense]
        if cols is None:
            cols = len(dense[0]) if dense else 0
        entries = {(i, j): v for i, r in enumerate(dense) for j, v in enumerate(r) if v}
        return cls(len(dense), cols, entries)

    @classmethod
    def from_rows(cls, rows, cols):
        entries = {}
        for i, r in enumerate(rows):
            for j, v in r.items():
                entries[(i, j)] = v
        return cls(len(rows), cols, entries)

    def row_dicts(self):
        out = [{} for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def to_dense(self):
        out = [[ZERO] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __matmul__(self, vec):
        if len(vec) != self.cols:
            raise ValueError("vector length %d != %d columns" % (len(vec), self.cols))
        out = [ZERO] * self.rows
        for (i, j), v in self.entries.items():
            if vec[j]:
                out[i] = out[i] + v * vec[j]
        return out

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __repr__(self):
        return "SparseMatrix(%d x %d, nnz=%d)" % (self.rows, self.cols, len(self.entries))


def _reduce_rows(rows):
    """Echelonize a list of sparse rows; returns {pivot_col: normalized row}."""
    pivots = {}
    for row in rows:
        r = {j: cyc(v) for j, v in row.items() if v}
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                lead = r[c]
                if lead != 1:
                    inv = lead.inverse()
                    r = {j: v * inv for j, v in r.items()}
                pivots[c] = r
                break
            f = r[c]
            for j, v in p.items():
                nv = r.get(j, ZERO) - f * v
                if nv:
                    r[j] = nv
                else:
                    r.pop(j, None)
    # back substitution, highest pivot first
    order = sorted(pivots)
    for idx in range(len(order) - 1, -1, -1):
        c = order[idx]
        prow = pivots[c]
        for c2 in order[:idx]:
            r = pivots[c2]
            f = r.get(c)
            if f is None:
                continue
            for j, v in prow.items():
                nv = r.get(j, ZERO) - f * v
                if nv:
                    r[j] = nv
                else:
                    r.pop(j, None)
    return pivots


def rref(m):
    """Reduced row echelon form of a SparseMatrix (or list of row dicts).

    Returns ``(pivot_columns, rows)`` with rows as ``{col: value}`` dicts in
    pivot order.
    """
    rows = m.row_dicts() if isinstance(m, SparseMatrix) else m
    pivots = _reduce_rows(rows)
    cols = sorted(pivots)
    return cols, [pivots[c] for c in cols]


def rank(m):
    return len(rref(m)[0])


def kernel_basis(m):
    """Canonical basis of the right kernel of ``m``.

    The basis vectors, stacked as rows, form a matrix in reduced row echelon
    form.  Returns a list of dense coefficient lists (empty for an injective
    map).
    """
    ncols = m.cols
    pivot_cols, rows = rref(m)
    pivset = set(pivot_cols)
    vecs = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = {f: ONE}
        for c, r in zip(pivot_cols, rows):
            x = r.get(f)
            if x is not None:
                v[c] = -x
        vecs.append(v)
    return [_dense(r, ncols) for r in rref(vecs)[1]]


def row_basis(vectors, ncols=None):
    """Canonical (RREF) basis of the span of dense vectors."""
    if ncols is None:
        ncols = len(vectors[0]) if vectors else 0
    rows = [{j: cyc(x) for j, x in enumerate(v) if x} for v in vectors]
    return [_dense(r, ncols) for r in rref(rows)[1]]


def in_span(basis, vec):
    """True iff ``vec`` lies in the span of the given dense vectors."""
    rows = [{j: cyc(x) for j, x in enumerate(v) if x} for v in basis]
    before = len(_reduce_rows(rows))
    rows.append({j: cyc(x) for j, x in enumerate(vec) if x})
    return len(_reduce_rows(rows)) == before


def _dense(row, ncols):
    out = [ZERO] * ncols
    for j, v in row.items():
        out[j] = v
    return out


# -- dense helpers -------------------------------------------------------------


def mat_identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    if a and len(a[0]) != len(b):
        raise ValueError("shape mismatch in matrix product")
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [ZERO] * ncols
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        acc = ZERO
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def mat_kron(a, b):
    """Kronecker product; row index i*rows(b) + k, column j*cols(b) + l."""
    out = []
    for ra in a:
        for rb in b:
            out.append([x * y for x in ra for y in rb])
    return out


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


def mat_conj_transpose(a):
    return [[x.conjugate() for x in col] for col in zip(*a)]


def mat_scale(a, s):
    s = cyc(s)
    return [[x * s for x in row] for row in a]


def mat_block_diag(a, b):
    na, nb = len(a), len(b)
    out = [list(r) + [ZERO] * nb for r in a]
    out += [[ZERO] * na + list(r) for r in b]
    return out


def mat_eq(a, b):
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def is_identity(a):
    return mat_eq(a, mat_identity(len(a)))


def mat_inverse(a):
    n = len(a)
    rows = []
    for i, r in enumerate(a):
        if len(r) != n:
            raise ValueError("matrix is not square")
        row = {j: cyc(x) for j, x in enumerate(r) if x}
        row[n + i] = ONE
        rows.append(row)
    pivots, reduced = rref(rows)
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        raise ValueError("matrix is singular")
    return [[r.get(n + j, ZERO) for j in range(n)] for r in reduced]


def as_cyc_matrix(a):
    return [[cyc(x) for x in row] for row in a]


def mat_to_json(a):
    return [[x.to_json() for x in row] for row in a]


def mat_from_json(obj):
    return [[CycNumber.from_json(x) for x in row] for row in obj]
