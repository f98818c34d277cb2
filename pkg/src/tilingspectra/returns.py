"""Return vectors, their group structure, control points, and the
integer-coefficient basis certifying Z[theta]-coordinates.

The translation vectors between same-type tiles generate a free abelian
group; embedding their power-basis coordinates into Q^(d*s), clearing
denominators and taking a Hermite normal form gives a canonical basis V.
Multiplication by theta maps the group into itself on a stabilized
sample, producing an integer matrix M with theta*V = V*M, whose
characteristic polynomial must vanish at theta.  Control points fixed by
the tile-map choice solve an exact linear system, and their differences
seed a basis {b_j} in which every sampled return vector has integer
polynomial coordinates in theta.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd, lcm

from .errors import BudgetError, TilingError
from .field import NumberField, QThetaVec
from .lattice import field_rank, field_solve, hnf, _rational_row_solve, charpoly
from .tiles import SubstitutionSystem

DEFAULT_PAIR_BUDGET = 40_000_000
_INT_FAST_LIMIT = 1 << 40


@dataclass
class ReturnSample:
    depth: int
    vectors: list  # QThetaVec, deduplicated, canonical order
    dimension: int

    def __len__(self):
        return len(self.vectors)


def sort_vectors(vecs):
    from .ordering import sorted_by_value

    return sorted_by_value(vecs, lambda v: v)


def enumerate_returns(
    system: SubstitutionSystem, depth: int, budget: int = DEFAULT_PAIR_BUDGET
) -> ReturnSample:
    """All pairwise difference vectors between same-type tiles within
    omega^depth of each prototile; exact, deduplicated, both signs."""
    if depth < 0:
        raise TilingError("depth must be nonnegative")
    field = system.field
    s = field.degree
    d = system.dimension
    seen = set()
    pair_count = 0
    for tid in system.order:
        patch = system.grow(tid, depth)
        groups = {}
        for t in patch:
            groups.setdefault(t.proto, []).append(t.offset)
        for offsets in groups.values():
            n = len(offsets)
            if n < 2:
                continue
            pair_count += n * (n - 1)
            if pair_count > budget:
                raise BudgetError(f"return enumeration exceeds pair budget {budget}")
            _group_difference_keys(offsets, seen)
    out = []
    for key in seen:
        den = key[0]
        coords = [Fraction(v, den) for v in key[1:]]
        entries = [field.elem(coords[k * s : (k + 1) * s]) for k in range(d)]
        out.append(QThetaVec(tuple(entries)))
    return ReturnSample(depth=depth, vectors=sort_vectors(out), dimension=d)


_FFT_CELL_BUDGET = 30_000_000


def _group_difference_keys(offsets, seen):
    """Add (denominator, *scaled coords) keys of nonzero pairwise
    differences to `seen`.  Differences are computed on integer-embedded
    power-basis coordinates, which is exact; the set of differences is
    the support of the patch autocorrelation, so bounded-span groups go
    through an FFT instead of materializing n^2 rows."""
    rows = []
    den = 1
    for v in offsets:
        row = []
        for e in v.entries:
            row.extend(e.coeffs)
        rows.append(row)
        for c in row:
            den = lcm(den, c.denominator)
    ints = [[int(c * den) for c in row] for row in rows]

    def add(row):
        if any(row):
            g = den
            for v in row:
                g = gcd(g, abs(v))
            seen.add((den // g, *(v // g for v in row)))

    if all(abs(v) < _INT_FAST_LIMIT for row in ints for v in row):
        import numpy as np

        arr = np.array(ints, dtype=np.int64)
        if len(ints) >= 64 and _autocorrelation_keys(arr, add):
            return
        diffs = (arr[:, None, :] - arr[None, :, :]).reshape(-1, arr.shape[1])
        uniq = np.unique(diffs, axis=0)
        for row in uniq.tolist():
            add(row)
        return
    local = set()
    for i in range(len(ints)):
        for j in range(len(ints)):
            if i != j:
                local.add(tuple(a - b for a, b in zip(ints[i], ints[j])))
    for row in local:
        add(list(row))


def _autocorrelation_keys(arr, add) -> bool:
    """Difference set via FFT autocorrelation on the occupancy grid.

    Counts are integers approximated to ~1e-8, so the > 0.5 test is a
    sound presence check; the emitted difference coordinates are exact.
    Returns False when the bounding box is too large to rasterize.
    """
    import numpy as np

    mins = arr.min(axis=0)
    extents = (arr.max(axis=0) - mins + 1).astype(np.int64)
    full = 2 * extents - 1
    cells = 1
    for e in full:
        cells *= int(e)
        if cells > _FFT_CELL_BUDGET:
            return False
    grid = np.zeros(tuple(int(e) for e in extents), dtype=np.float64)
    grid[tuple((arr - mins).T)] = 1.0
    shape = tuple(int(e) for e in full)
    axes = tuple(range(grid.ndim))
    spec = np.fft.rfftn(grid, s=shape, axes=axes)
    corr = np.fft.irfftn(spec * np.conj(spec), s=shape, axes=axes)
    hits = np.argwhere(corr > 0.5)
    shift = extents - 1
    # irfftn indexes circularly: index k stands for difference k, with
    # k > extent-1 wrapping to k - full
    for idx in hits.tolist():
        row = []
        for k, e, f in zip(idx, extents.tolist(), full.tolist()):
            row.append(k if k <= e - 1 else k - f)
        add(row)
    return True


# ---------------------------------------------------------------------------
# the group generated by a sample


@dataclass
class ReturnModule:
    generators: list  # QThetaVec, l of them
    denominator: int  # D clearing the embedded coordinates
    hnf_rows: list  # canonical integer HNF rows of the embedded lattice
    sample_depth: int
    stabilized: bool
    dimension: int
    M: object = dc_field(default=None)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def spans_space(self) -> bool:
        """Do the generators span R^d (exact rank over the field)?"""
        if not self.generators:
            return False
        field = self.generators[0].field
        rows = [list(v.entries) for v in self.generators]
        return field_rank(rows, field.zero(), field.one()) == self.dimension

    def member_coordinates(self, v: QThetaVec):
        """Integer coordinates of v in the Z-span, or None."""
        emb = _embed(v)
        den = 1
        for c in emb:
            den = lcm(den, c.denominator)
        scale_num = self.denominator
        # solve over Q against the HNF rows of D*generators
        target = [c * scale_num for c in emb]
        coeffs = _rational_row_solve(self.hnf_rows, target)
        if coeffs is None:
            return None
        if any(c.denominator != 1 for c in coeffs):
            return None
        return [int(c) for c in coeffs]

    def serialize(self):
        out = {
            "rank": self.rank,
            "sample_depth": self.sample_depth,
            "stabilized": self.stabilized,
            "generators": [v.serialize() for v in self.generators],
        }
        if self.M is not None:
            out["M"] = [list(row) for row in self.M]
        return out


def _embed(v: QThetaVec):
    out = []
    for e in v.entries:
        out.extend(e.coeffs)
    return out


def group_basis(sample: ReturnSample, field: NumberField = None) -> ReturnModule:
    """Canonical basis of the group generated by the sampled vectors."""
    if not sample.vectors:
        raise TilingError("empty return sample has no group basis")
    field = field or sample.vectors[0].field
    s = field.degree
    den = 1
    embedded = [_embed(v) for v in sample.vectors]
    for row in embedded:
        for c in row:
            den = lcm(den, c.denominator)
    int_rows = [[int(c * den) for c in row] for row in embedded]
    basis = hnf(int_rows)
    generators = []
    for row in basis:
        coords = [Fraction(x, den) for x in row]
        entries = [
            field.elem(coords[k * s : (k + 1) * s]) for k in range(sample.dimension)
        ]
        generators.append(QThetaVec(entries))
    return ReturnModule(
        generators=generators,
        denominator=den,
        hnf_rows=basis,
        sample_depth=sample.depth,
        stabilized=False,
        dimension=sample.dimension,
    )


def _lattice_key(module: ReturnModule):
    """Canonical form of the rational lattice for equality testing."""
    rows = [[Fraction(x, module.denominator) for x in row] for row in module.hnf_rows]
    den = 1
    for row in rows:
        for c in row:
            den = lcm(den, c.denominator)
    scaled = [[int(c * den) for c in row] for row in rows]
    return (den, tuple(tuple(r) for r in hnf(scaled)))


def stabilized_module(
    system: SubstitutionSystem, start_depth: int = 2, max_depth: int = 6
) -> ReturnModule:
    """Deepen the sample until consecutive depths generate the same group."""
    prev = None
    prev_key = None
    for depth in range(start_depth, max_depth + 1):
        sample = enumerate_returns(system, depth)
        if not sample.vectors:
            continue
        module = group_basis(sample, system.field)
        key = _lattice_key(module)
        if prev_key is not None and key == prev_key:
            module.stabilized = True
            return module
        prev, prev_key = module, key
    if prev is None:
        raise TilingError("no return vectors found up to the maximum depth")
    prev.stabilized = False
    return prev


def phi_action(module: ReturnModule, system: SubstitutionSystem):
    """Integer matrix M with theta*v_i = sum_k M[k][i] v_k, exact.

    Raises when some theta*v_i falls outside the Z-span: the sample has
    not stabilized and the caller should deepen it.
    """
    theta = system.theta_elem()
    cols = []
    for v in module.generators:
        coords = module.member_coordinates(v.scale(theta))
        if coords is None:
            raise TilingError(
                "theta*generator escapes the sampled group; deepen the return sample"
            )
        cols.append(coords)
    size = module.rank
    M = [[cols[i][k] for i in range(size)] for k in range(size)]
    # verify theta*V = V*M exactly in the field
    for i, v in enumerate(module.generators):
        acc = None
        for k in range(size):
            if M[k][i]:
                term = module.generators[k].scale(system.field.rational(M[k][i]))
                acc = term if acc is None else acc + term
        lhs = v.scale(theta)
        if acc is None or not (lhs - acc).is_zero():
            raise TilingError("internal defect: M does not reproduce theta*V")
    module.M = M
    return M


def algebraic_integer_check(M, field: NumberField) -> bool:
    """charpoly(M)(theta) == 0 exactly in Q(theta)."""
    poly = charpoly(M)
    theta = field.gen()
    acc = field.zero()
    for c in reversed(poly.coeffs):
        acc = acc * theta + field.rational(c)
    return acc.is_zero()


# ---------------------------------------------------------------------------
# control points


@dataclass
class ControlPointSet:
    points: dict  # tid -> QThetaVec
    child_index: dict  # tid -> int
    child_type: dict  # tid -> tid
    child_offset: dict  # tid -> QThetaVec

    def of_tile(self, system, tile) -> QThetaVec:
        return self.points[tile.proto] + tile.offset

    def serialize(self):
        return {
            "points": {tid: v.serialize() for tid, v in self.points.items()},
            "child_index": dict(self.child_index),
            "child_type": dict(self.child_type),
        }


def control_points(system: SubstitutionSystem) -> ControlPointSet:
    """Solve theta*c_j = d_j + c_tau(j) exactly; unique since theta > 1."""
    field = system.field
    theta = field.gen()
    order = system.order
    m = len(order)
    idx = {tid: i for i, tid in enumerate(order)}
    tau, dvec, cidx = {}, {}, {}
    for tid in order:
        k, child = system.gamma(tid)
        cidx[tid] = k
        tau[tid] = child.proto
        dvec[tid] = child.offset
    # (theta*I - P) c = d, with P the 0/1 matrix of tau
    mat = [[field.zero() for _ in range(m)] for _ in range(m)]
    for tid in order:
        i = idx[tid]
        mat[i][i] = mat[i][i] + theta
        j = idx[tau[tid]]
        mat[i][j] = mat[i][j] - field.one()
    rhs_cols = []
    for coord in range(system.dimension):
        rhs_cols.append([dvec[tid][coord] for tid in order])
    sols = field_solve(mat, rhs_cols, field.zero(), field.one())
    points = {}
    for i, tid in enumerate(order):
        points[tid] = QThetaVec(tuple(sols[coord][i] for coord in range(system.dimension)))
    cps = ControlPointSet(points=points, child_index=cidx, child_type=tau, child_offset=dvec)
    for tid in order:
        lhs = points[tid].scale(theta)
        rhs = dvec[tid] + points[tau[tid]]
        if not (lhs - rhs).is_zero():
            raise TilingError("internal defect: control point equation violated")
    return cps


def verify_control_point_dynamics(system, cps: ControlPointSet, depth: int) -> bool:
    """phi(control points of omega^depth) land on control points of
    omega^(depth+1), for every prototile."""
    theta = system.theta_elem()
    for tid in system.order:
        cur = system.grow(tid, depth)
        nxt = system.grow(tid, depth + 1)
        targets = {cps.of_tile(system, t).key() for t in nxt}
        for t in cur:
            img = cps.of_tile(system, t).scale(theta)
            if img.key() not in targets:
                return False
    return True


def control_point_iteration_error(system, cps: ControlPointSet, steps: int = 20):
    """Float distance between c_j and theta^-n * (offset of the n-fold
    tile-map child), the numeric contraction view of the definition."""
    theta = system.theta_elem()
    field = system.field
    errors = {}
    for tid in system.order:
        cur_tid, offset = tid, system.zero_vec()
        for _ in range(steps):
            _, child = system.gamma(cur_tid)
            offset = offset.scale(theta) + child.offset
            cur_tid = child.proto
        inv = field.one() / (theta**steps)
        approx = offset.scale(inv)
        diff = approx - cps.points[tid]
        errors[tid] = max(abs(float(e)) for e in diff.entries)
    return errors


# ---------------------------------------------------------------------------
# the Z[theta]-coordinate basis


@dataclass
class KenyonBasis:
    basis: list  # b_j, QThetaVec
    seeds: list  # e_j control-point differences the basis came from
    denominator: int
    verified_count: int
    _inverse: list = dc_field(default=None, repr=False)

    def _inverse_matrix(self):
        """Columns of B^-1 where B has the basis vectors as columns."""
        if self._inverse is None:
            field = self.basis[0].field
            d = self.basis[0].dim
            mat = [[self.basis[j][i] for j in range(d)] for i in range(d)]
            unit_cols = [
                [field.one() if i == j else field.zero() for i in range(d)]
                for j in range(d)
            ]
            self._inverse = field_solve(mat, unit_cols, field.zero(), field.one())
        return self._inverse

    def coordinates(self, v: QThetaVec):
        """Q(theta) coordinates of v over the basis, exact."""
        inv_cols = self._inverse_matrix()
        d = v.dim
        return [
            sum((inv_cols[k][j] * v.entries[k] for k in range(1, d)),
                inv_cols[0][j] * v.entries[0])
            for j in range(d)
        ]

    def has_integer_coordinates(self, v: QThetaVec) -> bool:
        return all(c.has_integer_coords() for c in self.coordinates(v))

    def serialize(self):
        return {
            "basis": [b.serialize() for b in self.basis],
            "seeds": [e.serialize() for e in self.seeds],
            "denominator": self.denominator,
            "verified_returns": self.verified_count,
        }


def kenyon_basis(
    system: SubstitutionSystem,
    module: ReturnModule,
    depth: int,
    sample: ReturnSample = None,
) -> KenyonBasis:
    """Basis {b_j} of R^d with all sampled returns in Z[theta]-span.

    Seeds e_j are the first control-point differences (canonical patch
    order) of full rank; each module generator is expressed over the
    seeds with Q(theta) coefficients, whose rational denominators are
    cleared into the basis b_j = e_j / D.  Every vector sampled at
    `depth` is then verified to have integer power-basis coordinates
    (pass `sample` to reuse an existing enumeration at that depth).
    """
    field = system.field
    d = system.dimension
    cps = control_points(system)
    seeds = _spanning_differences(system, cps, d)
    # express generators over the seeds
    mat = [[seeds[j][i] for j in range(d)] for i in range(d)]
    den = 1
    for v in module.generators:
        sols = field_solve(mat, [list(v.entries)], field.zero(), field.one())
        for coeff in sols[0]:
            for c in coeff.coeffs:
                den = lcm(den, c.denominator)
    inv = field.rational(Fraction(1, den))
    basis = [e.scale(inv) for e in seeds]
    kb = KenyonBasis(basis=basis, seeds=seeds, denominator=den, verified_count=0)
    if sample is None or sample.depth != depth:
        sample = enumerate_returns(system, depth)
    for v in sample.vectors:
        if not kb.has_integer_coordinates(v):
            raise TilingError(
                f"return vector {v.serialize()} has non-integer coordinates; "
                "unstabilized sample or defect"
            )
    kb.verified_count = len(sample.vectors)
    return kb


def _spanning_differences(system, cps: ControlPointSet, d: int):
    """Greedy full-rank subset of control-point differences, canonical."""
    field = system.field
    chosen = []
    for depth in (2, 3, 4):
        candidates = []
        for tid in system.order:
            patch = system.grow(tid, depth)
            tiles = list(patch)
            base = cps.of_tile(system, tiles[0])
            for t in tiles[1:]:
                candidates.append(cps.of_tile(system, t) - base)
        for cand in candidates:
            if cand.is_zero():
                continue
            trial = chosen + [cand]
            rows = [list(v.entries) for v in trial]
            if field_rank(rows, field.zero(), field.one()) == len(trial):
                chosen.append(cand)
                if len(chosen) == d:
                    return chosen
    raise TilingError(
        "control-point differences do not span; retry with deeper patches"
    )
