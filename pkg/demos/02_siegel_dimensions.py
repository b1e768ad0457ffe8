"""Symmetric formal Fourier-Jacobi series versus genus-2 Siegel modular forms.

For scalar weight k the symmetric formal series truncated at (M, N) = (6, 8)
should have the same dimension as M_k of genus 2, which the Igusa generators
count through 1/((1-t^4)(1-t^6)(1-t^10)(1-t^12)).

Run:  python3 demos/02_siegel_dimensions.py
"""

from __future__ import annotations

from formalfj.siegel import expected_dimension, fj_to_siegel, symmetric_space

print(" k  solved  expected  constraint matrix  seconds")
for k in (0, 2, 4, 6, 8, 10, 12):
    res = symmetric_space(k, M=6, N=8)
    shape = "x".join(map(str, res.manifest["matrix_shape"]))
    print("%2d  %6d  %8d  %17s  %7.2f" % (k, res.dimension, expected_dimension(k), shape,
                                          res.manifest["seconds"]))

# the weight-4 solution is the Siegel Eisenstein series; normalize a(0) = 1
F = fj_to_siegel(symmetric_space(4, M=3, N=4).basis[0])
a0 = F.a(0, 0, 0)[0]
print("\nWeight 4, a(T) for T = [[n, r/2], [r/2, m]]:")
for n, r, m in [(1, 0, 0), (1, 1, 1), (1, 0, 1), (2, 0, 1), (2, 2, 2)]:
    print("  (n, r, m) = (%d, %d, %d): %s" % (n, r, m, F.a(n, r, m)[0] / a0))
