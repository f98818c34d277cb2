"""Construct the bundled corpus in code, validate, and freeze to JSON.

Development tool; the shipped files under src/tilingspectra/systems/ are
its output.  Run from the repository root:

    python3 tools/build_corpus.py
"""

import pathlib
import sys
from fractions import Fraction

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from tilingspectra.algebraic import make_algebraic
from tilingspectra.field import NumberField
from tilingspectra.geometry import Polygon
from tilingspectra.polys import IntPoly
from tilingspectra.systemfile import dump_system, parse_system
from tilingspectra.tiles import (
    Interval,
    PlacedTile,
    Prototile,
    SubstitutionSystem,
    validate,
)

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "tilingspectra" / "systems"


def fibonacci():
    K = NumberField(make_algebraic(IntPoly([-1, -1, 1]), Fraction(1618, 1000)))
    th = K.gen()
    protos = [
        Prototile("a", Interval(th)),
        Prototile("b", Interval(K.one())),
    ]
    rules = {
        "a": [PlacedTile("a", K.vec([0])), PlacedTile("b", K.vec([th]))],
        "b": [PlacedTile("a", K.vec([0]))],
    }
    return SubstitutionSystem("fibonacci", K, protos, rules)


def tm():
    K = NumberField(make_algebraic(IntPoly([-2, 1]), 2))
    protos = [
        Prototile("a", Interval(K.one())),
        Prototile("b", Interval(K.one())),
    ]
    rules = {
        "a": [PlacedTile("a", K.vec([0])), PlacedTile("b", K.vec([1]))],
        "b": [PlacedTile("b", K.vec([0])), PlacedTile("a", K.vec([1]))],
    }
    return SubstitutionSystem("tm", K, protos, rules)


def np26():
    K = NumberField(make_algebraic(IntPoly([-5, -2, 1]), Fraction(3449, 1000)))
    th = K.gen()
    half = Fraction(1, 2)
    lb = (th - 1) * half  # (theta - 1)/2
    protos = [
        Prototile("a", Interval(K.one())),
        Prototile("b", Interval(lb)),
    ]
    rules = {
        # omega(a) = a b b
        "a": [
            PlacedTile("a", K.vec([0])),
            PlacedTile("b", K.vec([1])),
            PlacedTile("b", K.vec([K.one() + lb])),
        ],
        # omega(b) = a a a b
        "b": [
            PlacedTile("a", K.vec([0])),
            PlacedTile("a", K.vec([1])),
            PlacedTile("a", K.vec([2])),
            PlacedTile("b", K.vec([3])),
        ],
    }
    return SubstitutionSystem("np26", K, protos, rules)


def chair():
    K = NumberField(make_algebraic(IntPoly([-2, 1]), 2))

    def v(x, y):
        return K.vec([x, y])

    # L-trominoes labeled by the corner the notch points at, each anchored
    # at its control point so the tile-map orbit stays at the origin
    shapes = {
        "NE": [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)],
        "NW": [(-1, -1), (1, -1), (1, 1), (0, 1), (0, 0), (-1, 0)],
        "SW": [(0, -1), (1, -1), (1, 1), (-1, 1), (-1, 0), (0, 0)],
        "SE": [(-1, -1), (0, -1), (0, 0), (1, 0), (1, 1), (-1, 1)],
    }
    protos = [
        Prototile(tid, Polygon([v(x, y) for x, y in pts]))
        for tid, pts in shapes.items()
    ]
    rules = {
        "NE": [
            PlacedTile("NE", v(0, 0)),
            PlacedTile("NE", v(1, 1)),
            PlacedTile("NW", v(3, 1)),
            PlacedTile("SE", v(1, 3)),
        ],
        "NW": [
            PlacedTile("NW", v(0, 0)),
            PlacedTile("NW", v(1, -1)),
            PlacedTile("SW", v(1, 1)),
            PlacedTile("NE", v(-2, -2)),
        ],
        "SW": [
            PlacedTile("SW", v(0, 0)),
            PlacedTile("SW", v(1, 1)),
            PlacedTile("SE", v(-1, 1)),
            PlacedTile("NW", v(1, -1)),
        ],
        "SE": [
            PlacedTile("SE", v(0, 0)),
            PlacedTile("SE", v(-1, 1)),
            PlacedTile("NE", v(-2, -2)),
            PlacedTile("SW", v(1, 1)),
        ],
    }
    return SubstitutionSystem("chair", K, protos, rules)


def grid2():
    K = NumberField(make_algebraic(IntPoly([-2, 1]), 2))

    def v(x, y):
        return K.vec([x, y])

    protos = [
        Prototile("sq", Polygon([v(0, 0), v(1, 0), v(1, 1), v(0, 1)])),
    ]
    rules = {
        "sq": [
            PlacedTile("sq", v(0, 0)),
            PlacedTile("sq", v(1, 0)),
            PlacedTile("sq", v(0, 1)),
            PlacedTile("sq", v(1, 1)),
        ],
    }
    return SubstitutionSystem(
        "grid2", K, protos, rules, declared_periods=[v(1, 0), v(0, 1)]
    )


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for builder in (fibonacci, tm, np26, chair, grid2):
        system = builder()
        report = validate(system)
        if not report.valid:
            for c in report.failures():
                print(f"  FAIL {system.name} {c.name}: {c.detail}")
            raise SystemExit(f"{system.name} failed validation")
        path = OUT / f"{system.name}.json"
        dump_system(system, path)
        reparsed = parse_system(path)
        assert reparsed.substitution_matrix() == system.substitution_matrix()
        print(f"wrote {path.name}: valid, S = {system.substitution_matrix()}")


if __name__ == "__main__":
    main()
