"""Tensor products, Hom pairings, inverses and quotients of formal series.

Run:  python3 demos/03_formal_series_algebra.py
"""

from __future__ import annotations

from formalfj.fjseries import (
    FormalFJSeries,
    fj_invert,
    fj_is_symmetric,
    fj_meromorphic_expansion,
    fj_pair,
    fj_tensor,
    mero_mul,
)
from formalfj.jacobi import JacobiForm
from formalfj.representation import rep_hom, rep_trivial
from formalfj.siegel import fj_in_span, symmetric_space

M, N = 4, 5
e4 = symmetric_space(4, M=M, N=N).basis[0]
e6 = symmetric_space(6, M=M, N=N).basis[0]
w10 = symmetric_space(10, M=M, N=N).basis

prod = fj_tensor(e4, e6)
print("E4 (x) E6: weight", prod.weight, "symmetric:", bool(fj_is_symmetric(prod)),
      "in the weight-10 space:", fj_in_span(prod, w10))

# a Hom(C^2, C)-valued series paired with a C^2-valued one
rho, sigma = rep_trivial(2), rep_trivial(1)


def stack(parts, rep):
    k = parts[0].weight
    coeffs = [JacobiForm(k, m, [p.coeffs[m].components[0] for p in parts]) for m in range(M + 1)]
    return FormalFJSeries(k, rep, coeffs, N)


f = stack([e4, e4.scale(3)], rho)
g = stack([e6, e6.scale(-1)], rep_hom(rho, sigma))
pairing = fj_pair(g, f, sigma)
print("<g, f>: weight", pairing.weight, "dimension", pairing.rep.dim,
      "symmetric:", bool(fj_is_symmetric(pairing)))

inv = fj_invert(e4)
chi0 = inv.coeffs[0][0]
print("\n1/E4 at q'^0 starts", ", ".join(str(chi0.coeff(n, 0)) for n in range(3)))
print("E4 * E4^-1 == 1:", mero_mul(e4.as_meromorphic(), inv).is_one())

left = fj_meromorphic_expansion(e6, e4)
right = fj_meromorphic_expansion(fj_tensor(e6, w10[0]), fj_tensor(e4, w10[0]))
print("E6/E4 equals (E6 w)/(E4 w) on the common window:", left.agrees_with(right))
print("windows (lowest exponent, precision) per q' power:",
      ", ".join("[%s, %s)" % w for w in left.windows()))
