"""Exact phase-convergence diagnostics.

For an eigenvalue the distances dist(theta^n <z, alpha>, Z) decay
geometrically at the rate of the largest conjugate; for a non-Pisot
dilation they never settle.  Distances are computed from exact field
powers (floating theta^n would be garbage long before n = 40:
3.45^40 ~ 1e21, far beyond double precision resolution of integers).
"""

from tilingspectra.corpus import load
from tilingspectra.spectra import Alpha, convergence_diagnostic, exact_dist_sequence

fib = load("fibonacci")
K = fib.field
rep = convergence_diagnostic(fib, Alpha(K.vec([1])), K.vec([1]), steps=40, fit_start=10)
print("fibonacci, alpha = 1, z = 1:")
print(f"  fitted rate  {rep.fitted_rate:.6f}")
print(f"  reference    {rep.reference_rate:.6f}  (largest conjugate modulus)")
print("  |e^(2 pi i theta^n) - 1| at n = 10, 20, 30, 40:",
      [f"{rep.values[n]:.3e}" for n in (10, 20, 30, 40)])

grid2 = load("grid2")
Kg = grid2.field
rep2 = convergence_diagnostic(grid2, Alpha(Kg.vec([1, 0])), Kg.vec([1, 0]), steps=12)
print("\ngrid2, alpha = (1,0), z = (1,0): exact zero tail =", rep2.exact_zero_tail)

np26 = load("np26")
dists = exact_dist_sequence(np26.field.one(), 40)
print("\nnp26 (non-Pisot), dist(theta^n, Z) for n = 20..40:")
print(" ", [f"{float(d):.3f}" for d in dists[20:41]])
print("  max =", f"{max(float(d) for d in dists[20:41]):.3f}", "(no decay)")
