"""Return-vector groups, the integer action of theta, control points,
and the basis giving every return integer polynomial coordinates."""

from tilingspectra.corpus import NAMES, load
from tilingspectra.lattice import charpoly
from tilingspectra.returns import (
    algebraic_integer_check,
    control_points,
    enumerate_returns,
    kenyon_basis,
    phi_action,
    stabilized_module,
)
from tilingspectra.spectra import dual_basis

for name in NAMES:
    system = load(name)
    sample = enumerate_returns(system, 3)
    module = stabilized_module(system)
    M = phi_action(module, system)
    poly = charpoly(M)
    print(f"{name}:")
    print(f"  {len(sample)} returns at depth 3; group rank {module.rank} "
          f"(stabilized at depth {module.sample_depth})")
    print(f"  generators: {[v.serialize() for v in module.generators]}")
    print(f"  M = {M}, charpoly {poly}, vanishes at theta: "
          f"{algebraic_integer_check(M, system.field)}")

    cps = control_points(system)
    print(f"  control points: { {t: v.serialize() for t, v in cps.points.items()} }")

    kb = kenyon_basis(system, module, depth=4)
    print(f"  coordinate basis: {[b.serialize() for b in kb.basis]} "
          f"(denominator {kb.denominator}, {kb.verified_count} returns verified)")
    duals = dual_basis(kb.basis)
    print(f"  dual basis: {[b.serialize() for b in duals]}")
