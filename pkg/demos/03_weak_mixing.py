"""The spectral dichotomy: nontrivial eigenvalues exist exactly when the
dilation factor is Pisot; otherwise the system is weakly mixing."""

from fractions import Fraction

from tilingspectra.corpus import NAMES, load
from tilingspectra.spectra import Alpha, eigenvalue_report, weak_mixing

for name in NAMES:
    system = load(name)
    verdict = weak_mixing(system)
    witness = verdict.witness.serialize() if verdict.witness else None
    print(
        f"{name}: pisot={verdict.pisot}, weak_mixing={verdict.weak_mixing}, "
        f"witness={witness}"
    )
    for note in verdict.notes:
        print(f"   note: {note}")

print("\n-- candidate checks with the residue engine's receipts --")
fib = load("fibonacci")
K = fib.field
for value, label in [(1, "alpha = 1"), (Fraction(1, 3), "alpha = 1/3")]:
    rep = eigenvalue_report(fib, Alpha(K.vec([value])))
    print(f"fibonacci, {label}: eigenvalue={rep.eigenvalue}")
    for g in rep.generator_reports:
        tr = g.trace_report
        print(
            f"   pairing {g.pairing.serialize()}: eventually integer = {tr.eventually_integer}"
            f" (D={tr.denominator}, preperiod={tr.preperiod}, period={tr.period})"
        )

grid2 = load("grid2")
Kg = grid2.field
rep = eigenvalue_report(grid2, Alpha(Kg.vec([Fraction(1, 2), 0])))
print(
    f"\ngrid2, alpha=(1/2, 0): eig1={rep.eig1}, eig2={rep.eig2} "
    "(killed by the declared periods, not by convergence)"
)
