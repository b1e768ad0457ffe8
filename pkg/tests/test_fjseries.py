from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import solver_basis
from formalfj.cyclotomic import ONE, ZERO
from formalfj.errors import IncompatiblePrecision, IncompatibleShapes, NonInvertibleLeadingCoefficient
from formalfj.fjseries import (
    FormalFJSeries,
    MeromorphicFJSeries,
    fj_constant,
    fj_invert,
    fj_is_symmetric,
    fj_lincomb,
    fj_meromorphic_expansion,
    fj_pair,
    fj_tensor,
    mero_mul,
    validate_fj,
)
from formalfj.jacobi import JacobiForm, jacobi_basis, jacobi_tensor
from formalfj.linalg import in_span, mat_identity, mat_scale, mat_vec
from formalfj.qseries import QZSeries, eisenstein_q
from formalfj.representation import invariant_subspace, rep_hom, rep_trivial, symmetry_factor


def scalar_series(weight, coeffs, N):
    return FormalFJSeries(weight, rep_trivial(), coeffs, N)


def e4_form(prec):
    return JacobiForm(4, 0, [QZSeries.from_qseries(eisenstein_q(4, prec))])


def test_tensor_with_unit():
    f = solver_basis(10)[0]
    one = fj_constant(1, f.qprec, f.M)
    assert fj_tensor(f, one).equal_within(f)
    assert fj_tensor(one, f).equal_within(f)


def test_tensor_weight_and_convolution():
    f, g = solver_basis(4)[0], solver_basis(6)[0]
    t = fj_tensor(f, g)
    assert t.weight == 10 and t.M == min(f.M, g.M)
    assert [phi.index for phi in t.coeffs] == [0, 1, 2, 3]
    expected = jacobi_tensor(f.coeffs[0], g.coeffs[2]) + jacobi_tensor(f.coeffs[1], g.coeffs[1]) \
        + jacobi_tensor(f.coeffs[2], g.coeffs[0])
    assert t.coeffs[2].equal_within(expected)
    assert fj_is_symmetric(t)


def test_tensor_precision_mismatch():
    f = solver_basis(4)[0]
    with pytest.raises(IncompatiblePrecision):
        fj_tensor(f, f.truncate(N=3))


def test_pair_identity_and_scalar_case():
    rho = rep_trivial(2)
    f = FormalFJSeries(4, rho, [JacobiForm(4, m, list(c.components) * 2)
                                for m, c in enumerate(solver_basis(4)[0].coeffs)], 4)
    ident = fj_constant([1, 0, 0, 1], 4, 3, rep=rep_hom(rho, rho))
    assert fj_pair(ident, f, rho).equal_within(f)
    a, b = solver_basis(4)[0], solver_basis(6)[0]
    assert fj_pair(a, b, rep_trivial()).equal_within(fj_tensor(a, b))


def test_pair_convolution_and_shapes():
    a, b = solver_basis(4)[0], solver_basis(6)[0]
    p = fj_pair(a, b, rep_trivial())
    brute = sum((jacobi_tensor(a.coeffs[j], b.coeffs[3 - j]) for j in range(1, 4)),
                jacobi_tensor(a.coeffs[0], b.coeffs[3]))
    assert p.coeffs[3].equal_within(brute)
    with pytest.raises(IncompatibleShapes):
        fj_pair(a, b, rep_trivial(2))
    wrong = FormalFJSeries(4, rep_trivial(4), [JacobiForm(4, m, list(c.components) * 4)
                                               for m, c in enumerate(a.coeffs)], 4)
    f2 = FormalFJSeries(6, rep_trivial(2), [JacobiForm(6, m, list(c.components) * 2)
                                            for m, c in enumerate(b.coeffs)], 4)
    assert fj_pair(wrong, f2, rep_trivial(2)).rep.dim == 2


def test_zero_series_symmetric():
    z = solver_basis(4)[0].scale(0)
    assert fj_is_symmetric(z)


def test_odd_weight_diagonal_forces_zero():
    N = 3
    phi0 = JacobiForm.zero(1, 0, N + 1)
    phi1 = JacobiForm.from_table(1, 1, {(1, 0): 1}, N + 1)
    rep = fj_is_symmetric(scalar_series(1, [phi0, phi1], N))
    assert not rep and rep.violation == (1, 1, 0)


def test_first_violation_is_lexicographic():
    f = solver_basis(4)[0]
    broken = f.coeffs[:2] + [f.coeffs[2].scale(2)] + f.coeffs[3:]
    rep = fj_is_symmetric(scalar_series(4, broken, f.qprec))
    assert rep.violation[:2] == (0, 2)


def test_solver_elements_pass():
    for k in (4, 6, 10, 12):
        for f in solver_basis(k):
            assert fj_is_symmetric(f)
            assert validate_fj(f, symmetric=True).passed


def test_skipped_pairs_counted():
    f = solver_basis(4, M=3, N=4)[0].truncate(N=2)
    rep = fj_is_symmetric(f)
    assert rep and rep.skipped == 7  # pairs with m = 3 or n = 3


def test_invert_one_and_geometric():
    N = 4
    assert fj_invert(fj_constant(1, N, 3)).is_one()
    phi1 = jacobi_basis(4, 1, N + 1)[0]
    one = JacobiForm(0, 0, [QZSeries.one(N + 1)])
    f = FormalFJSeries(0, rep_trivial(), [one, JacobiForm(0, 1, phi1.components),
                                          JacobiForm.zero(0, 2, N + 1),
                                          JacobiForm.zero(0, 3, N + 1)], N)
    inv = fj_invert(f)
    p = phi1.components[0]
    assert inv.coeffs[1][0].equal_within(-p)
    assert inv.coeffs[2][0].equal_within(p * p)
    assert inv.coeffs[3][0].equal_within(-(p * p * p))
    assert inv.weight == 0 and inv.M == 3


def test_invert_e4_head():
    N = 4
    phi1 = jacobi_basis(4, 1, N + 1)[0]
    f = scalar_series(4, [e4_form(N + 1), phi1], N)
    inv = fj_invert(f)
    assert [inv.coeffs[0][0].coeff(n, 0) for n in range(3)] == [1, -240, 55440]
    assert inv.weight == -4
    assert mero_mul(f.as_meromorphic(), inv).is_one()
    assert mero_mul(inv, f.as_meromorphic()).is_one()


def test_invert_errors():
    f = scalar_series(4, [JacobiForm.zero(4, 0, 4)], 3)
    with pytest.raises(NonInvertibleLeadingCoefficient):
        fj_invert(f)
    v = FormalFJSeries(4, rep_trivial(2), [JacobiForm(4, 0, [QZSeries.one(4)] * 2)], 3)
    with pytest.raises(IncompatibleShapes):
        fj_invert(v)


def test_invert_laurent_leading_term():
    # a cusp form as phi_0: the inverse has a pole in q
    from formalfj.qseries import delta_q
    N = 4
    phi0 = JacobiForm(12, 0, [QZSeries.from_qseries(delta_q(N + 1))])
    inv = fj_invert(scalar_series(12, [phi0], N))
    assert inv.coeffs[0][0].valuation() == -1
    assert mero_mul(inv, inv).coeffs[0][0].valuation() == -2


def test_quotient_identities():
    g, h = solver_basis(4)[0], solver_basis(6)[0]
    assert fj_meromorphic_expansion(h, h).is_one()
    gh = fj_tensor(g, h)
    assert fj_meromorphic_expansion(gh, h).agrees_with(g.as_meromorphic())
    w = solver_basis(10)[0]
    lhs = fj_meromorphic_expansion(g, h)
    rhs = fj_meromorphic_expansion(fj_tensor(g, w), fj_tensor(h, w))
    assert lhs.agrees_with(rhs)


def test_symmetry_twice_is_identity():
    rho = rep_trivial(2)
    for k in (Fraction(1, 2), 1, 4):
        eps = symmetry_factor(k)
        for v in invariant_subspace(rho, k):
            once = mat_vec(mat_scale(rho.delta, eps), v)
            assert mat_vec(mat_scale(rho.delta, eps), once) == list(v)


def test_values_in_invariant_subspace():
    for f in solver_basis(10, rep="trivial^2"):
        basis = invariant_subspace(f.rep, f.weight)
        for phi in f.coeffs:
            assert all(in_span(basis, vec) for vec in phi.table().values())


def test_lincomb_and_json():
    b = solver_basis(12)
    f = fj_lincomb(list(b), [2, -3, Fraction(1, 7)])
    assert fj_is_symmetric(f)
    assert FormalFJSeries.from_json(f.to_json()).equal_within(f)
    inv = fj_invert(solver_basis(4)[0])
    back = MeromorphicFJSeries.from_json(inv.to_json())
    assert back.agrees_with(inv) and back.to_json() == inv.to_json()


def test_constructor_checks():
    f = solver_basis(4)[0]
    with pytest.raises(IncompatibleShapes):
        FormalFJSeries(6, f.rep, f.coeffs, f.qprec)
    with pytest.raises(IncompatibleShapes):
        FormalFJSeries(4, f.rep, f.coeffs[1:], f.qprec)
    with pytest.raises(IncompatiblePrecision):
        FormalFJSeries(4, f.rep, f.coeffs, f.qprec + 1)


def test_half_integral_checks_are_flagged():
    from zoo import half_integral
    rho = half_integral()
    f = FormalFJSeries(Fraction(1, 2), rho, [JacobiForm.zero(Fraction(1, 2), 0, 3)], 2)
    rep = fj_is_symmetric(f)
    assert rep and rep.convention_dependent
    assert not fj_is_symmetric(solver_basis(4)[0]).convention_dependent
