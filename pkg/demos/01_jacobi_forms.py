"""Weak generators, the Jacobi Eisenstein series and a dimension table.

Run:  python3 demos/01_jacobi_forms.py
"""

from __future__ import annotations

from formalfj.jacobi import jacobi_basis, weak_generators


def show_row(label, form, n):
    row = form.components[0].zeta_poly(n)
    terms = " ".join("%+d*z^%d" % (int(v.to_fraction()), r) for r, v in sorted(row.items()))
    print("  %-12s q^%d: %s" % (label, n, terms))


print("The two weak generators, first two q-orders:")
phi_m2, phi_0 = weak_generators(3)
for n in (0, 1):
    show_row("phi_-2,1", phi_m2, n)
    show_row("phi_0,1", phi_0, n)

print("\nJ_{4,1} is spanned by the Jacobi Eisenstein series E_{4,1}:")
(e41,) = jacobi_basis(4, 1, 4)
for n in range(3):
    show_row("E_4,1", e41, n)
print("  setting z = 0 gives", [int(sum(e41.components[0].zeta_poly(n).values()).to_fraction())
                                for n in range(4)], "= E4")

print("\ndim J_{k,m} (rows k, columns m = 0..6), stabilized at q-precision 9 vs 11:")
print("      " + " ".join("%3d" % m for m in range(7)))
for k in range(4, 13, 2):
    print("k=%-3d " % k + " ".join("%3d" % len(jacobi_basis(k, m, 9)) for m in range(7)))
