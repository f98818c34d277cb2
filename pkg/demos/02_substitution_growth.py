"""Loading the bundled systems, validating the subdivision rules, and
growing patches with exact coordinates (SVG output in demos/out/)."""

import pathlib

from tilingspectra.corpus import NAMES, load
from tilingspectra.lattice import int_matrix_power
from tilingspectra.svg import RenderSpec, render_svg
from tilingspectra.tiles import is_primitive, perron_check, tile_frequencies, validate

OUT = pathlib.Path(__file__).resolve().parent / "out"
OUT.mkdir(exist_ok=True)

for name in NAMES:
    system = load(name)
    report = validate(system)
    S = system.substitution_matrix()
    ok, k, bound = is_primitive(S)
    print(f"{name}: valid={report.valid}, S={S}, primitive={ok} (witness k={k})")

    perron = perron_check(system)
    print(
        f"  volume vector is an exact theta^d left eigenvector; "
        f"float Perron eigenvalue {perron['perron_eigenvalue_float']:.6f}"
    )
    freqs = tile_frequencies(S)
    print("  tile frequencies:", [f"{f:.4f}" for f in freqs])

    tid = system.order[0]
    patch = system.grow(tid, 4)
    power = int_matrix_power(S, 4)
    j = system.order.index(tid)
    assert len(patch) == sum(power[i][j] for i in range(len(S)))
    print(f"  |omega^4({tid})| = {len(patch)} tiles (matches S^4 column sum)")

    target = OUT / f"{name}.svg"
    depth = 3 if system.dimension == 2 else 5
    data = render_svg(system, system.grow(tid, depth), RenderSpec(out_path=str(target)))
    print(f"  wrote {target.name} ({len(data)} bytes)")
