"""Representations used across the test-suite."""

from __future__ import annotations

from formalfj.cyclotomic import CycNumber
from formalfj.lattice import EvenLattice, discriminant_form
from formalfj.linalg import mat_identity, mat_scale
from formalfj.representation import (
    Representation,
    rep_dsum,
    rep_dual,
    rep_hom,
    rep_tensor,
    rep_trivial,
    rep_weil_genus2,
)

GRAMS = {
    "A1": [[2]],
    "A1+A1": [[2, 0], [0, 2]],
    "U": [[0, 1], [1, 0]],
    "A2": [[2, -1], [-1, 2]],
    "empty": [],
}


def sign():
    one = mat_identity(1)
    return Representation([[-1]], one, one, 2, "sign")


def half_integral(dim=1):
    """delta = i, (1, -1) -> -1: nonzero V_rho(k) exactly for odd 2k."""
    i = CycNumber.zeta(4)
    eye = mat_identity(dim)
    return Representation(mat_scale(eye, i), eye, mat_scale(eye, -1), 4, "iI")


def weil2(name):
    return rep_weil_genus2(discriminant_form(EvenLattice(GRAMS[name])))


def base_reps():
    reps = [rep_trivial(d) for d in (1, 2, 3)]
    reps += [sign(), half_integral(), half_integral(2)]
    reps += [weil2(n) for n in ("A1", "A1+A1", "U", "A2", "empty")]
    reps.append(rep_weil_genus2(discriminant_form(EvenLattice([[2]])), -CycNumber.zeta(4)))
    return reps


def all_reps():
    base = base_reps()
    small = [r for r in base if r.dim <= 4]
    out = list(base)
    out += [rep_dual(r) for r in base]
    out += [rep_tensor(a, b) for a in small[:4] for b in small if a.dim * b.dim <= 16]
    out += [rep_hom(a, b) for a in small[:4] for b in small[2:6] if a.dim * b.dim <= 16]
    out += [rep_dsum(a, b) for a in small[:3] for b in small[3:]]
    return out


def rep_by_name(name):
    if name.startswith("trivial^"):
        return rep_trivial(int(name.split("^")[1]))
    return {"trivial": rep_trivial, "sign": sign, "iI": half_integral}[name]()
