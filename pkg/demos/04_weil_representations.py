"""Discriminant forms of small even lattices and their Weil representations.

Run:  python3 demos/04_weil_representations.py
"""

from __future__ import annotations

from fractions import Fraction

from formalfj.lattice import EvenLattice, discriminant_form
from formalfj.representation import (
    invariant_subspace,
    rep_weil_genus2,
    verify_representation,
    verify_weil_genus1,
    weil_rep_genus1,
)

lattices = {
    "A1 = (2)": [[2]],
    "A1 + A1": [[2, 0], [0, 2]],
    "A2": [[2, -1], [-1, 2]],
    "hyperbolic U": [[0, 1], [1, 0]],
    "(2) + (-4)": [[2, 0], [0, -4]],
}

for name, gram in lattices.items():
    L = EvenLattice(gram)
    D = discriminant_form(L)
    S, T = weil_rep_genus1(D)
    ok = verify_weil_genus1(S, T).passed
    values = sorted(str(v) for v in D.value_multiset())
    print("%-13s signature %s  L'/L = %-8s q-values %s  genus-1 checks: %s"
          % (name, L.signature, "x".join("Z/%d" % d for d in D.orders) or "0", values, ok))

print("\nGenus-2 images for A1: dim V_rho(k) by weight")
rho = rep_weil_genus2(discriminant_form(EvenLattice([[2]])))
print("  representation checks:", verify_representation(rho).passed)
for k in [Fraction(j, 2) for j in range(1, 9)]:
    print("  k = %-4s dim %d" % (k, len(invariant_subspace(rho, k))))
