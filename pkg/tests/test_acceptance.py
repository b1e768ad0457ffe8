"""Acceptance suite: one test per criterion, each reported as a PASS/FAIL line."""

from __future__ import annotations

import functools
import random
from fractions import Fraction

from conftest import ACCEPTANCE
from zoo import GRAMS, all_reps
from formalfj import serialize
from formalfj.fjseries import (
    FormalFJSeries,
    fj_invert,
    fj_is_symmetric,
    fj_lincomb,
    fj_meromorphic_expansion,
    fj_pair,
    fj_tensor,
    mero_mul,
)
from formalfj.jacobi import JacobiForm, WeakJacobiForm, jacobi_basis, validate_jacobi, weak_monomials
from formalfj.lattice import EvenLattice, discriminant_form
from formalfj.linalg import mat_mul, mat_scale, mat_vec
from formalfj.qseries import QZSeries, delta_q, eisenstein_q
from formalfj.representation import (
    invariant_subspace,
    rep_hom,
    rep_trivial,
    symmetry_factor,
    verify_weil_genus1,
    weil_rep_genus1,
)
from formalfj.siegel import expected_dimension, fj_to_siegel, symmetric_space

SEED = 20261016


def criterion(n, text):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            ACCEPTANCE[n] = (False, text)
            fn(*args, **kwargs)
            ACCEPTANCE[n] = (True, text)
        return run
    return wrap


@functools.lru_cache(maxsize=None)
def space(k, M=6, N=8):
    return symmetric_space(k, rep_trivial(), M, N)


def random_element(basis, rng):
    while True:
        scalars = [rng.randint(-3, 3) for _ in basis]
        if any(scalars):
            return fj_lincomb(list(basis), scalars)


@criterion(1, "symmetric_space dims for k = 0..12 at (M, N) = (6, 8) equal the Igusa count")
def test_dimension_match():
    got = {k: space(k).dimension for k in (0, 2, 4, 6, 8, 10, 12)}
    assert got == {0: 1, 2: 0, 4: 1, 6: 1, 8: 1, 10: 2, 12: 3}
    assert all(got[k] == expected_dimension(k) for k in got)
    for k in got:
        assert space(k).manifest["stabilized"]


@criterion(2, "tensor products of 50 random symmetric pairs stay symmetric")
def test_tensor_property():
    rng = random.Random(SEED)
    for _ in range(50):
        k1, k2 = rng.choice((4, 6, 10)), rng.choice((4, 6, 10))
        f = random_element(space(k1).basis, rng)
        g = random_element(space(k2).basis, rng)
        t = fj_tensor(f, g)
        assert t.weight == k1 + k2
        assert t.M == min(f.M, g.M) and t.qprec == f.qprec
        assert [phi.index for phi in t.coeffs] == list(range(len(t.coeffs)))
        assert all(phi.weight == k1 + k2 for phi in t.coeffs)
        assert fj_is_symmetric(t)


def _vector_series(components, rep):
    k = components[0].weight
    coeffs = [JacobiForm(k, m, [c.coeffs[m].components[0] for c in components])
              for m in range(len(components[0].coeffs))]
    return FormalFJSeries(k, rep, coeffs, components[0].qprec)


@criterion(3, "Hom pairings of symmetric series over trivial^d stay symmetric")
def test_pair_property():
    rng = random.Random(SEED + 1)
    for d in (1, 2, 3):
        for e in (1, 2, 3):
            rho, sigma = rep_trivial(d), rep_trivial(e)
            kf, kg = rng.choice((4, 6)), rng.choice((4, 6, 10))
            f = _vector_series([random_element(space(kf).basis, rng) for _ in range(d)], rho)
            g = _vector_series([random_element(space(kg).basis, rng) for _ in range(d * e)],
                               rep_hom(rho, sigma))
            assert fj_is_symmetric(f) and fj_is_symmetric(g)
            p = fj_pair(g, f, sigma)
            assert p.rep.dim == e and p.weight == kf + kg
            assert fj_is_symmetric(p)


def _invertible(rng, N=5, M=3):
    kind = rng.choice(("one", "E4", "E6", "Delta", "Delta*E4"))
    prec = N + 1
    head, weight = {
        "one": (QZSeries.one(prec), 0),
        "E4": (QZSeries.from_qseries(eisenstein_q(4, prec)), 4),
        "E6": (QZSeries.from_qseries(eisenstein_q(6, prec)), 6),
        "Delta": (QZSeries.from_qseries(delta_q(prec)), 12),
        "Delta*E4": (QZSeries.from_qseries(delta_q(prec) * eisenstein_q(4, prec)), 16),
    }[kind]
    coeffs = [JacobiForm(weight, 0, [head.scale(rng.choice((1, -2, 3)))])]
    for m in range(1, M + 1):
        if weight == 0:
            spanning = [WeakJacobiForm(0, m, [s]) for _, s in weak_monomials(0, m, prec)]
        else:
            spanning = jacobi_basis(weight, m, prec)
        acc = JacobiForm.zero(weight, m, prec)
        for phi in spanning:
            acc = acc + phi.scale(rng.randint(-2, 2))
        coeffs.append(acc)
    return FormalFJSeries(weight, rep_trivial(), coeffs, N)


@criterion(4, "20 random inversions are two-sided and quotients are independent of representatives")
def test_inversion_round_trip():
    rng = random.Random(SEED + 2)
    for _ in range(20):
        f = _invertible(rng)
        inv = fj_invert(f)
        assert inv.weight == -f.weight
        assert mero_mul(f.as_meromorphic(), inv).is_one()
        assert mero_mul(inv, f.as_meromorphic()).is_one()
    for _ in range(5):
        g, h, w = _invertible(rng), _invertible(rng), _invertible(rng)
        lhs = fj_meromorphic_expansion(g, h)
        rhs = fj_meromorphic_expansion(fj_tensor(g, w), fj_tensor(h, w))
        assert lhs.agrees_with(rhs)


@criterion(5, "(i^2k rho(delta))^2 is the identity on V_rho(k) for all reps, k = 1/2..12")
def test_symmetry_involution():
    weights = [Fraction(j, 2) for j in range(1, 25)]
    reps = all_reps()
    assert len(reps) >= 40
    for rho in reps:
        for k in weights:
            g = mat_scale(rho.delta, symmetry_factor(k))
            g2 = mat_mul(g, g)
            for v in invariant_subspace(rho, k):
                assert mat_vec(g2, v) == list(v)


@criterion(6, "Jacobi bases stabilize and validate for even k = 4..12, m <= 6")
def test_jacobi_layer():
    for k in range(4, 13, 2):
        for m in range(0, 7):
            basis = jacobi_basis(k, m, 9)  # raises unless prec 9 and 11 agree
            assert all(validate_jacobi(phi).passed for phi in basis)
    assert len(jacobi_basis(10, 1, 9)) == 2
    assert len(jacobi_basis(4, 1, 9)) == 1


@criterion(7, "genus-1 Weil images are unitary with (ST)^3 = S^2 for (2), diag(2,2), trivial")
def test_weil_layer():
    for name in ("A1", "A1+A1", "U", "empty"):
        S, T = weil_rep_genus1(discriminant_form(EvenLattice(GRAMS[name])))
        report = verify_weil_genus1(S, T)
        assert report.passed, report.violations


@criterion(8, "every artifact kind round-trips byte-identically through write/read/write")
def test_serialization(tmp_path):
    f = space(10).basis[0]
    objects = [
        jacobi_basis(10, 2, 4),
        f,
        list(space(12).basis),
        fj_invert(space(4).basis[0]),
        fj_to_siegel(f),
        discriminant_form(EvenLattice(GRAMS["A2"])),
        all_reps()[-1],
        {"dims": [[k, expected_dimension(k)] for k in range(0, 13, 2)]},
    ]
    for i, obj in enumerate(objects):
        first = serialize.to_text(obj, params={"case": i})
        path = tmp_path / ("artifact%d.json" % i)
        path.write_text(first)
        env = serialize.read_envelope(path)
        second = serialize.to_text(serialize.read_artifact(path), env["kind"], env["params"])
        assert first == second


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
