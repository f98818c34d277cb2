"""Prototiles, patches and substitution rules with exact geometry.

A substitution system carries prototiles (interval or polygon supports
with Q(theta) coordinates), one rule patch per prototile describing the
subdivision of the dilated support, an optional tile-map child choice,
and optionally declared period generators.  Validation checks the
subdivision identity exactly: measures, interior disjointness,
containment, and (in one dimension) a gap-free endpoint chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetError, TilingError, ValidationError
from .field import NumberField, QThetaElem, QThetaVec
from .geometry import (
    OUTSIDE,
    Polygon,
    dist_sq_point_polygon,
    dist_sq_point_segment,
    interiors_overlap,
    point_on_segment,
    points_diameter_sq,
    polygon_contains,
)
from .lattice import int_matrix_power

DEFAULT_GROW_BUDGET = 400_000


class Interval:
    """One-dimensional support [0, length] with positive field length."""

    __slots__ = ("length",)

    def __init__(self, length: QThetaElem):
        if length.sign() <= 0:
            raise TilingError("interval length must be positive")
        self.length = length


class Prototile:
    __slots__ = ("id", "support")

    def __init__(self, tid: str, support):
        if not tid:
            raise TilingError("prototile id must be nonempty")
        self.id = tid
        self.support = support

    @property
    def dimension(self) -> int:
        return 1 if isinstance(self.support, Interval) else 2

    def volume(self) -> QThetaElem:
        if isinstance(self.support, Interval):
            return self.support.length
        return self.support.area2() * Fraction(1, 2)


class PlacedTile:
    """A prototile translated by an exact offset vector."""

    __slots__ = ("proto", "offset")

    def __init__(self, proto: str, offset: QThetaVec):
        self.proto = proto
        self.offset = offset

    def key(self):
        return (self.proto, self.offset.key())

    def __eq__(self, other):
        return isinstance(other, PlacedTile) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"PlacedTile({self.proto!r}, {self.offset.floats()})"


def sort_tiles(tiles):
    """Canonical order: (prototile id, exact coordinate comparison)."""
    from .ordering import sorted_by_value

    return sorted_by_value(tiles, lambda t: t.offset, pre_key=lambda t: t.proto)


class Patch:
    """Finite tile set in canonical order."""

    __slots__ = ("tiles",)

    def __init__(self, tiles, presorted: bool = False):
        self.tiles = tuple(tiles if presorted else sort_tiles(tiles))

    def __len__(self):
        return len(self.tiles)

    def __iter__(self):
        return iter(self.tiles)

    def translated(self, g: QThetaVec) -> "Patch":
        # translation preserves the canonical order
        return Patch([PlacedTile(t.proto, t.offset + g) for t in self.tiles], presorted=True)

    def type_counts(self, order):
        counts = {k: 0 for k in order}
        for t in self.tiles:
            counts[t.proto] += 1
        return [counts[k] for k in order]

    def serialize(self):
        return [{"tile": t.proto, "offset": t.offset.serialize()} for t in self.tiles]


class SubstitutionSystem:
    """A tile substitution with pure dilation expansion x -> theta * x."""

    def __init__(
        self,
        name: str,
        field: NumberField,
        prototiles,
        rules,
        control_child=None,
        declared_periods=(),
        dimension=None,
    ):
        self.name = name
        self.field = field
        self.prototiles = {p.id: p for p in prototiles}
        if len(self.prototiles) != len(list(prototiles)):
            raise TilingError("duplicate prototile ids")
        self.order = [p.id for p in prototiles]
        dims = {p.dimension for p in self.prototiles.values()}
        if len(dims) != 1:
            raise TilingError("mixed support dimensions")
        self.dimension = dims.pop()
        if dimension is not None and dimension != self.dimension:
            raise TilingError(
                f"declared dimension {dimension} does not match supports ({self.dimension})"
            )
        self.rules = {}
        for tid, children in rules.items():
            if tid not in self.prototiles:
                raise TilingError(f"rule for unknown prototile {tid!r}")
            for ch in children:
                if ch.proto not in self.prototiles:
                    raise TilingError(
                        f"rule for {tid!r} references unknown prototile {ch.proto!r}"
                    )
            self.rules[tid] = list(children)
        missing = [tid for tid in self.order if tid not in self.rules]
        if missing:
            raise TilingError(f"missing substitution rules for {missing}")
        self.control_child = dict(control_child or {})
        for tid, idx in self.control_child.items():
            if tid not in self.prototiles:
                raise TilingError(f"control_child for unknown prototile {tid!r}")
            if not (0 <= idx < len(self.rules[tid])):
                raise TilingError(f"control_child index {idx} out of range for {tid!r}")
        self.declared_periods = list(declared_periods)
        self._matrix = None
        self._validation = None

    # -- basic views -----------------------------------------------------

    @property
    def theta(self):
        return self.field.theta

    def theta_elem(self) -> QThetaElem:
        return self.field.gen()

    def zero_vec(self) -> QThetaVec:
        return self.field.vec([0] * self.dimension)

    def volumes(self):
        return [self.prototiles[t].volume() for t in self.order]

    def gamma(self, tid: str):
        """(child index, child tile) picked by the tile map for `tid`."""
        idx = self.control_child.get(tid, 0)
        return idx, self.rules[tid][idx]

    # -- substitution matrix ----------------------------------------------

    def substitution_matrix(self):
        if self._matrix is None:
            idx = {tid: i for i, tid in enumerate(self.order)}
            m = len(self.order)
            mat = [[0] * m for _ in range(m)]
            for j, tid in enumerate(self.order):
                for ch in self.rules[tid]:
                    mat[idx[ch.proto]][j] += 1
            self._matrix = mat
        return [row[:] for row in self._matrix]

    # -- growth ------------------------------------------------------------

    def grow(self, tid: str, n: int, budget: int = DEFAULT_GROW_BUDGET) -> Patch:
        """The n-fold substitution of prototile `tid`, exact coordinates."""
        if tid not in self.prototiles:
            raise TilingError(f"unknown prototile {tid!r}")
        if n < 0:
            raise TilingError("depth must be nonnegative")
        mat = self.substitution_matrix()
        power = int_matrix_power(mat, n)
        j = self.order.index(tid)
        total = sum(power[i][j] for i in range(len(self.order)))
        if total > budget:
            raise BudgetError(f"grow would produce {total} tiles (budget {budget})")
        g = self.theta_elem()
        tiles = [PlacedTile(tid, self.zero_vec())]
        for _ in range(n):
            new = []
            for t in tiles:
                base = t.offset.scale(g)
                for ch in self.rules[t.proto]:
                    new.append(PlacedTile(ch.proto, base + ch.offset))
            tiles = new
        assert len(tiles) == total
        return Patch(tiles)

    def substitute_patch(self, patch: Patch) -> Patch:
        """One substitution step applied to an arbitrary patch."""
        g = self.theta_elem()
        new = []
        for t in patch:
            base = t.offset.scale(g)
            for ch in self.rules[t.proto]:
                new.append(PlacedTile(ch.proto, base + ch.offset))
        return Patch(new)

    # -- supports -----------------------------------------------------------

    def tile_interval(self, t: PlacedTile):
        sup = self.prototiles[t.proto].support
        start = t.offset[0]
        return (start, start + sup.length)

    def tile_polygon(self, t: PlacedTile) -> Polygon:
        sup = self.prototiles[t.proto].support
        return sup.translated(t.offset)

    def support_points(self, t: PlacedTile):
        """Vertex set of the tile support (interval endpoints in 1D)."""
        if self.dimension == 1:
            a, b = self.tile_interval(t)
            return [self.field.vec([a]), self.field.vec([b])]
        return list(self.tile_polygon(t).vertices)


# ---------------------------------------------------------------------------
# validation


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


class ValidationReport:
    def __init__(self, system_name):
        self.system = system_name
        self.checks = []

    def add(self, name, ok, detail=""):
        self.checks.append(CheckResult(name, ok, detail))

    @property
    def valid(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def raise_if_invalid(self):
        if not self.valid:
            msgs = [f"{c.name}: {c.detail}" for c in self.failures()]
            raise ValidationError(
                f"system {self.system!r} failed validation", failures=msgs
            )

    def as_dict(self):
        return {
            "system": self.system,
            "valid": self.valid,
            "checks": [
                {"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks
            ],
        }


def validate(system: SubstitutionSystem) -> ValidationReport:
    """Exact check of the subdivision identity and declared periods."""
    rep = ValidationReport(system.name)
    theta = system.theta_elem()

    if system.theta.cmp_rational(1) <= 0:
        rep.add("expansion", False, "theta must exceed 1")
        return rep
    rep.add("expansion", True, "theta > 1")

    thetad = theta
    for _ in range(system.dimension - 1):
        thetad = thetad * theta

    for tid in system.order:
        proto = system.prototiles[tid]
        children = system.rules[tid]
        if not children:
            rep.add(f"rule[{tid}].nonempty", False, "empty rule patch")
            continue

        total = None
        for ch in children:
            v = system.prototiles[ch.proto].volume()
            total = v if total is None else total + v
        expected = thetad * proto.volume()
        ok = (total - expected).is_zero()
        rep.add(
            f"rule[{tid}].measure",
            ok,
            "children measure equals theta^d * vol" if ok else
            f"children measure {total.serialize()} != theta^d*vol {expected.serialize()}",
        )

        if system.dimension == 1:
            _validate_rule_1d(system, rep, tid, proto, children, theta)
        else:
            _validate_rule_2d(system, rep, tid, proto, children, theta)

    if system.declared_periods:
        _validate_periods(system, rep)

    seeds = [tid for tid in system.order
             if any(ch.proto == tid and ch.offset.is_zero() for ch in system.rules[tid])]
    rep.add(
        "fixed_point_seed",
        True,
        f"self-reproducing seed tiles at the origin: {seeds}" if seeds
        else "no rule keeps its own type at offset 0 (informational)",
    )
    system._validation = rep
    return rep


def _validate_rule_1d(system, rep, tid, proto, children, theta):
    segs = []
    for ch in children:
        start = ch.offset[0]
        length = system.prototiles[ch.proto].support.length
        segs.append((start, start + length, ch))
    end_expected = theta * proto.support.length

    ok = True
    detail = ""
    for i in range(len(segs)):
        for k in range(i + 1, len(segs)):
            a0, a1, ca = segs[i]
            b0, b1, cb = segs[k]
            if (a1 - b0).sign() > 0 and (b1 - a0).sign() > 0:
                ok = False
                detail = f"children {ca.proto}@{ca.offset.serialize()} and {cb.proto}@{cb.offset.serialize()} overlap"
                break
        if not ok:
            break
    rep.add(f"rule[{tid}].disjoint", ok, detail)

    ok = True
    detail = ""
    for a0, a1, ch in segs:
        if a0.sign() < 0 or (a1 - end_expected).sign() > 0:
            ok = False
            detail = f"child {ch.proto}@{ch.offset.serialize()} outside inflated support"
            break
    rep.add(f"rule[{tid}].containment", ok, detail)

    # gap-free chain of sorted endpoints
    segs_sorted = sorted(segs, key=lambda s: _rational_key(s[0]))
    ok = segs_sorted[0][0].is_zero()
    detail = "" if ok else "first child does not start at 0"
    if ok:
        for (a0, a1, _), (b0, b1, _) in zip(segs_sorted, segs_sorted[1:]):
            if not (b0 - a1).is_zero():
                ok = False
                detail = "gap or overlap in the endpoint chain"
                break
    if ok and not (segs_sorted[-1][1] - end_expected).is_zero():
        ok = False
        detail = "last child does not reach theta * length"
    rep.add(f"rule[{tid}].chain", ok, detail)


def _rational_key(elem: QThetaElem):
    if elem.field.degree == 1:
        return (elem.coeffs[0],)
    return _ElemOrder(elem)


class _ElemOrder:
    __slots__ = ("e",)

    def __init__(self, e):
        self.e = e

    def __lt__(self, other):
        return self.e.cmp(other.e) < 0


def _validate_rule_2d(system, rep, tid, proto, children, theta):
    inflated = proto.support.scaled(theta)
    polys = [(ch, system.tile_polygon(ch)) for ch in children]

    ok = True
    detail = ""
    for i in range(len(polys)):
        for k in range(i + 1, len(polys)):
            if interiors_overlap(polys[i][1], polys[k][1]):
                ok = False
                detail = (
                    f"children {polys[i][0].proto}@{polys[i][0].offset.serialize()} and "
                    f"{polys[k][0].proto}@{polys[k][0].offset.serialize()} overlap"
                )
                break
        if not ok:
            break
    rep.add(f"rule[{tid}].disjoint", ok, detail)

    ok = True
    detail = ""
    for ch, poly in polys:
        if not polygon_contains(inflated, poly):
            ok = False
            detail = f"child {ch.proto}@{ch.offset.serialize()} outside inflated support"
            break
    rep.add(f"rule[{tid}].containment", ok, detail)
    # gap-freeness in 2D follows from exact measure + disjointness + containment


def _validate_periods(system, rep, depth: int = 3):
    for g in system.declared_periods:
        if g.is_zero():
            rep.add("periods", False, "zero vector declared as a period")
            return
    matched_total = 0
    for g in system.declared_periods:
        ok = True
        detail = ""
        matched = 0
        for tid in system.order:
            patch = system.grow(tid, depth)
            present = {t.key() for t in patch}
            shifted = patch.translated(g)
            for t in shifted:
                if not _tile_inside_region(system, t, tid, depth):
                    continue
                if t.key() in present:
                    matched += 1
                else:
                    ok = False
                    detail = (
                        f"period {g.serialize()}: translated tile "
                        f"{t.proto}@{t.offset.serialize()} disagrees inside omega^{depth}({tid})"
                    )
                    break
            if not ok:
                break
        if ok and matched == 0:
            ok = False
            detail = f"period {g.serialize()}: no overlap at depth {depth}; cannot verify"
        matched_total += matched
        rep.add(f"period[{g.serialize()}]", ok, detail or f"{matched} tiles matched")


def _tile_inside_region(system, t: PlacedTile, tid: str, depth: int) -> bool:
    """Is the tile support inside theta^depth * (support of tid)?"""
    theta = system.theta_elem()
    scale = system.field.one()
    for _ in range(depth):
        scale = scale * theta
    if system.dimension == 1:
        a, b = system.tile_interval(t)
        end = scale * system.prototiles[tid].support.length
        return a.sign() >= 0 and (b - end).sign() <= 0
    region = system.prototiles[tid].support.scaled(scale)
    return polygon_contains(region, system.tile_polygon(t))


# ---------------------------------------------------------------------------
# matrix diagnostics


def is_primitive(mat):
    """(primitive?, witness exponent, Wielandt bound)."""
    m = len(mat)
    if any(len(r) != m for r in mat):
        raise TilingError("substitution matrix must be square")
    if any(v < 0 for row in mat for v in row):
        raise TilingError("substitution matrix must be nonnegative")
    bound = m * m - 2 * m + 2 if m > 1 else 1
    power = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    for k in range(1, bound + 1):
        power = [
            [sum(power[i][t] * mat[t][j] for t in range(m)) for j in range(m)]
            for i in range(m)
        ]
        if all(v > 0 for row in power for v in row):
            return True, k, bound
    return False, None, bound


def perron_check(system: SubstitutionSystem):
    """Exact left-eigenvector identity of the volume vector, plus a
    floating Perron eigenvalue for cross-reading."""
    import numpy as np

    mat = system.substitution_matrix()
    vols = system.volumes()
    theta = system.theta_elem()
    thetad = theta
    for _ in range(system.dimension - 1):
        thetad = thetad * theta
    for j, tid in enumerate(system.order):
        acc = None
        for i in range(len(system.order)):
            if mat[i][j]:
                term = vols[i] * mat[i][j]
                acc = term if acc is None else acc + term
        expected = thetad * vols[j]
        if acc is None or not (acc - expected).is_zero():
            raise TilingError(
                f"volume vector is not an exact theta^d left eigenvector at column {tid!r}"
            )
    eigs = np.linalg.eigvals(np.array(mat, dtype=float))
    perron = float(max(e.real for e in eigs))
    return {
        "exact_left_eigenvector": True,
        "perron_eigenvalue_float": perron,
        "theta_power_d_float": float(thetad),
    }


def tile_frequencies(mat, tol: float = 1e-12, max_iter: int = 100000):
    """Normalized right Perron eigenvector by plain power iteration."""
    m = len(mat)
    x = [1.0 / m] * m
    for _ in range(max_iter):
        y = [sum(mat[i][j] * x[j] for j in range(m)) for i in range(m)]
        s = sum(y)
        if s == 0:
            raise TilingError("matrix annihilated the iterate; not primitive?")
        y = [v / s for v in y]
        if max(abs(a - b) for a, b in zip(x, y)) < tol:
            return tuple(y)
        x = y
    raise TilingError("power iteration did not converge")


# ---------------------------------------------------------------------------
# metric diagnostics


@dataclass
class AgreementReport:
    radius: float
    metric_contribution: float
    exact_radius_sq: object  # QThetaElem or None when the radius is 0

    def as_dict(self):
        return {
            "radius": format(self.radius, ".15g"),
            "metric_contribution": format(self.metric_contribution, ".15g"),
        }


def agreement_radius(system: SubstitutionSystem, p1: Patch, p2: Patch, g: QThetaVec):
    """Largest r such that (p1 - g) and p2 carry the same tiles on B_r(0).

    The radius is capped by the covered radius of both patches (beyond
    the finite patches nothing can be compared).  Also reports the
    tiling-metric contribution min(2^-1/2, max(|g|, 1/r)).
    """
    shifted = p1.translated(-_as_vec(system, g))
    r1 = _covered_radius_sq(system, shifted)
    r2 = _covered_radius_sq(system, p2)
    if r1 is None or r2 is None:
        raise TilingError("origin not covered by both patches")
    keys1 = {t.key(): t for t in shifted}
    keys2 = {t.key(): t for t in p2}
    mismatch = None
    for k, t in keys1.items():
        if k not in keys2:
            d = _tile_dist_sq_origin(system, t)
            if mismatch is None or (d - mismatch).sign() < 0:
                mismatch = d
    for k, t in keys2.items():
        if k not in keys1:
            d = _tile_dist_sq_origin(system, t)
            if mismatch is None or (d - mismatch).sign() < 0:
                mismatch = d
    r_sq = r1 if (r1 - r2).sign() <= 0 else r2
    if mismatch is not None and (mismatch - r_sq).sign() < 0:
        r_sq = mismatch
    radius = float(r_sq) ** 0.5
    gnorm = float(_as_vec(system, g).norm_sq()) ** 0.5
    contribution = max(gnorm, (1.0 / radius) if radius > 0 else float("inf"))
    return AgreementReport(
        radius=radius,
        metric_contribution=min(2.0**-0.5, contribution),
        exact_radius_sq=r_sq,
    )


def _as_vec(system, g):
    if not isinstance(g, QThetaVec):
        g = system.field.vec(g)
    if g.dim != system.dimension:
        raise TilingError(
            f"vector has dimension {g.dim}, system has {system.dimension}"
        )
    return g


def _tile_dist_sq_origin(system, t: PlacedTile) -> QThetaElem:
    origin = system.zero_vec()
    if system.dimension == 1:
        a, b = system.tile_interval(t)
        if a.sign() <= 0 and b.sign() >= 0:
            return system.field.rational(0)
        v = a if a.sign() > 0 else -b
        return v * v
    return dist_sq_point_polygon(origin, system.tile_polygon(t))


def _covered_radius_sq(system, patch: Patch):
    """Squared distance from the origin to the uncovered region; None when
    the origin itself is not covered."""
    if system.dimension == 1:
        segs = sorted(
            (system.tile_interval(t) for t in patch),
            key=lambda s: _rational_key(s[0]),
        )
        merged = []
        for a, b in segs:
            if merged and (a - merged[-1][1]).sign() <= 0:
                lo, hi = merged[-1]
                merged[-1] = (lo, hi if (b - hi).sign() <= 0 else b)
            else:
                merged.append((a, b))
        home = next(
            (s for s in merged if s[0].sign() <= 0 and s[1].sign() >= 0), None
        )
        if home is None:
            return None
        left, right = -home[0], home[1]
        r = left if (left - right).sign() <= 0 else right
        return r * r
    return _covered_radius_sq_2d(system, patch)


def _covered_radius_sq_2d(system, patch: Patch):
    origin = system.zero_vec()
    polys = [system.tile_polygon(t) for t in patch]
    if all(p.locate(origin) == OUTSIDE for p in polys):
        return None
    field = system.field
    half = field.rational(1) / 2
    all_vertices = [v for p in polys for v in p.vertices]
    best = None
    for pi, poly in enumerate(polys):
        for a, b in poly.edges():
            ab = b - a
            ab_sq = ab.dot(ab)
            params = [field.rational(0), field.rational(1)]
            for q in all_vertices:
                if point_on_segment(q, a, b):
                    t = (q - a).dot(ab) / ab_sq
                    params.append(t)
            params.sort(key=_ElemOrder)
            frags = [params[0]]
            for t in params[1:]:
                if not (t - frags[-1]).is_zero():
                    frags.append(t)
            for t0, t1 in zip(frags, frags[1:]):
                m = a + ab.scale((t0 + t1) * half)
                if _fragment_interior(system, polys, pi, m, a, b):
                    continue
                p0 = a + ab.scale(t0)
                p1 = a + ab.scale(t1)
                d = dist_sq_point_segment(origin, p0, p1)
                if best is None or (d - best).sign() < 0:
                    best = d
    return best if best is not None else field.rational(0)


def _fragment_interior(system, polys, own_index, m, a, b) -> bool:
    """Is edge midpoint m interior to the union? Own polygon covers the
    left side (counterclockwise); look for coverage on the right."""
    from .geometry import INSIDE, dot as gdot

    for qi, q in enumerate(polys):
        if qi == own_index:
            continue
        loc = q.locate(m)
        if loc == INSIDE:
            return True
        if loc == OUTSIDE:
            continue
        for c, d in q.edges():
            if point_on_segment(m, c, d):
                direction = gdot(d - c, b - a)
                if direction.sign() < 0:
                    return True  # anti-parallel edge: q covers the right side
    return False


# ---------------------------------------------------------------------------
# finite local complexity probe


@dataclass
class FlcReport:
    radius: object
    depth: int
    count: int
    count_next: int

    @property
    def stabilized(self) -> bool:
        return self.count == self.count_next

    def as_dict(self):
        return {
            "depth": self.depth,
            "count": self.count,
            "count_next": self.count_next,
            "stabilized": self.stabilized,
        }


def flc_probe(system: SubstitutionSystem, radius, n: int, candidate_cap: int = 18):
    """Count translation classes of subpatches of diameter < radius.

    Enumerates subsets anchored at their canonically least tile; a subset
    qualifies iff all support-point pairs stay below the radius, which
    equals the diameter bound because supports are polygons/intervals.
    """
    r_elem = radius if isinstance(radius, QThetaElem) else system.field.rational(radius)
    if r_elem.sign() <= 0:
        raise TilingError("radius must be positive")
    count = _flc_count(system, r_elem, n, candidate_cap)
    count_next = _flc_count(system, r_elem, n + 1, candidate_cap)
    return FlcReport(radius=r_elem, depth=n, count=count, count_next=count_next)


def _flc_count(system, r_elem, n, candidate_cap):
    r_sq = r_elem * r_elem
    classes = set()
    for tid in system.order:
        patch = system.grow(tid, n)
        tiles = list(patch)
        pts = [system.support_points(t) for t in tiles]
        for i, anchor in enumerate(tiles):
            if not _pair_ok(pts[i], pts[i], r_sq):
                continue
            cand = [
                k
                for k in range(i + 1, len(tiles))
                if _pair_ok(pts[i], pts[k], r_sq)
            ]
            if len(cand) > candidate_cap:
                raise BudgetError(
                    f"flc probe: {len(cand)} candidate neighbors exceeds cap {candidate_cap}"
                )
            _enumerate_subsets(system, tiles, pts, i, cand, r_sq, classes)
    return len(classes)


def _pair_ok(pts_a, pts_b, r_sq) -> bool:
    d = points_diameter_sq(pts_a + pts_b)
    return (d - r_sq).sign() < 0


def _enumerate_subsets(system, tiles, pts, anchor_idx, cand, r_sq, classes):
    compat = {}
    for x in range(len(cand)):
        for y in range(x + 1, len(cand)):
            compat[(x, y)] = _pair_ok(pts[cand[x]], pts[cand[y]], r_sq)

    chosen = []

    def emit():
        subset = [tiles[anchor_idx]] + [tiles[cand[c]] for c in chosen]
        base = tiles[anchor_idx].offset
        key = tuple((t.proto, (t.offset - base).key()) for t in subset)
        classes.add(key)

    def rec(start):
        emit()
        for c in range(start, len(cand)):
            if all(compat[(min(c, o), max(c, o))] for o in chosen):
                chosen.append(c)
                rec(c + 1)
                chosen.pop()

    rec(0)
