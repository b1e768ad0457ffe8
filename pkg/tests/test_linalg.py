from __future__ import annotations

from hypothesis import given, strategies as st

from conftest import cyc_numbers
from formalfj.cyclotomic import ONE, ZERO, CycNumber, cyc
from formalfj.linalg import (
    SparseMatrix,
    in_span,
    is_identity,
    kernel_basis,
    mat_identity,
    mat_inverse,
    mat_kron,
    mat_mul,
    rank,
    rref,
)


def test_identity_kernel_empty():
    assert kernel_basis(SparseMatrix.from_dense(mat_identity(3))) == []


def test_zero_matrix_full_kernel():
    m = SparseMatrix(2, 3)
    assert len(kernel_basis(m)) == 3


def test_small_kernel():
    m = SparseMatrix.from_dense([[1, 1, 0], [0, 1, 1]])
    (v,) = kernel_basis(m)
    assert v == [1, -1, 1]


def test_rref_is_canonical():
    a = SparseMatrix.from_dense([[2, 4, 6], [1, 1, 1]])
    b = SparseMatrix.from_dense([[3, 3, 3], [1, 2, 3], [4, 6, 8]])
    assert rref(a) == rref(b)


def test_in_span_and_inverse():
    assert in_span([[1, 0, 1], [0, 1, 1]], [2, 3, 5])
    assert not in_span([[1, 0, 1]], [0, 0, 1])
    a = [[cyc(1), CycNumber.zeta(4)], [cyc(2), cyc(3)]]
    assert is_identity(mat_mul(a, mat_inverse(a)))


def test_kron_shape():
    k = mat_kron([[1, 2]], [[0], [1]])
    assert len(k) == 2 and len(k[0]) == 2


matrices = st.integers(1, 4).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.one_of(st.just(ZERO), cyc_numbers((1, 4))),
                                min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices)
def test_kernel_properties(dense):
    m = SparseMatrix.from_dense(dense)
    ker = kernel_basis(m)
    for v in ker:
        assert all(x.is_zero() for x in m @ v)
    assert rank(m) + len(ker) == m.cols
    # the kernel basis is already in reduced echelon form
    rows = [{j: x for j, x in enumerate(v) if x} for v in ker]
    assert rref(rows)[1] == rows
