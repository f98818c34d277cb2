"""Exact arithmetic in the real number field Q(theta).

Elements carry their coordinates in the power basis 1, theta, ...,
theta^(s-1) as Fractions; products reduce modulo the minimal polynomial.
Order comparisons refine theta's isolating interval until the sign of the
difference is certain, with a pure-rational fast path for degree 1.
"""

from __future__ import annotations

from fractions import Fraction

from .algebraic import AlgebraicReal, eval_poly_interval, make_algebraic
from .errors import FieldMismatchError, PrecisionError, TilingError
from .polys import IntPoly, rp_divmod, rp_mul, rp_normalize, sturm_count

_MAX_SIGN_REFINEMENTS = 5000


class NumberField:
    """Q(theta) for a fixed real algebraic theta."""

    def __init__(self, theta: AlgebraicReal):
        self.theta = theta
        self.minpoly = theta.minpoly
        self.degree = theta.minpoly.degree
        s = self.degree
        # x^k mod minpoly for k = s .. 2s-2, used by multiplication.
        self._red = []
        mp = [Fraction(c) for c in self.minpoly.coeffs]
        cur = [Fraction(0)] * s + [Fraction(1)]  # x^s
        for _ in range(s, 2 * s - 1):
            _, r = rp_divmod(tuple(cur), tuple(mp))
            row = list(r) + [Fraction(0)] * (s - len(r))
            self._red.append(row)
            cur = [Fraction(0)] + list(cur)  # multiply by x
        self._power_traces = None

    # -- constructors -------------------------------------------------

    def elem(self, coeffs) -> "QThetaElem":
        coeffs = list(coeffs)
        if len(coeffs) != self.degree:
            raise TilingError(
                f"expected {self.degree} power-basis coordinates, got {len(coeffs)}"
            )
        return QThetaElem(self, tuple(Fraction(c) for c in coeffs))

    def rational(self, r) -> "QThetaElem":
        coeffs = [Fraction(r)] + [Fraction(0)] * (self.degree - 1)
        return QThetaElem(self, tuple(coeffs))

    def zero(self) -> "QThetaElem":
        return self.rational(0)

    def one(self) -> "QThetaElem":
        return self.rational(1)

    def gen(self) -> "QThetaElem":
        """theta itself as a field element."""
        if self.degree == 1:
            return self.rational(-self.minpoly.coeffs[0])
        coeffs = [Fraction(0)] * self.degree
        coeffs[1] = Fraction(1)
        return QThetaElem(self, tuple(coeffs))

    def vec(self, entries) -> "QThetaVec":
        return QThetaVec(tuple(self._coerce(e) for e in entries))

    def _coerce(self, x) -> "QThetaElem":
        if isinstance(x, QThetaElem):
            if not self.same_field(x.field):
                raise FieldMismatchError("element from a different field")
            return x
        return self.rational(x)

    # -- structure ----------------------------------------------------

    def same_field(self, other: "NumberField") -> bool:
        if other is self:
            return True
        if other.minpoly.coeffs != self.minpoly.coeffs:
            return False
        # Same polynomial: same root iff the intersection of the two
        # isolating intervals still contains a root.
        lo1, hi1 = self.theta.interval
        lo2, hi2 = other.theta.interval
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo >= hi:
            return False
        return sturm_count(self.minpoly.as_fractions(), lo, hi) == 1

    def power_traces(self, upto: int):
        """Tr(theta^k) for k = 0..upto, by Newton's identities.

        For a monic polynomial x^s + b_{s-1} x^{s-1} + ... + b_0 the
        elementary symmetric functions are e_k = (-1)^k b_{s-k}; power
        sums follow from p_k = e_1 p_{k-1} - e_2 p_{k-2} + ...
        +/- k e_k, then from the recurrence for k >= s.
        """
        s = self.degree
        b = self.minpoly.coeffs
        e = [Fraction(0)] * (s + 1)
        e[0] = Fraction(1)
        for k in range(1, s + 1):
            e[k] = Fraction((-1) ** k * b[s - k])
        if self._power_traces is None:
            self._power_traces = [Fraction(s)]
        p = self._power_traces
        while len(p) <= upto:
            k = len(p)
            if k <= s:
                acc = Fraction(0)
                for i in range(1, k):
                    acc += (-1) ** (i - 1) * e[i] * p[k - i]
                acc += (-1) ** (k - 1) * k * e[k]
                p.append(acc)
            else:
                acc = Fraction(0)
                for i in range(1, s + 1):
                    acc += (-1) ** (i - 1) * e[i] * p[k - i]
                p.append(acc)
        return p[: upto + 1]

    def __repr__(self):
        return f"NumberField({self.minpoly})"


def golden_field() -> NumberField:
    """Q(theta) for theta^2 = theta + 1; handy in examples and tests."""
    return NumberField(make_algebraic(IntPoly((-1, -1, 1)), Fraction(8, 5)))


class QThetaElem:
    """An element of Q(theta) in power-basis coordinates."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise TilingError("element is irrational")
        return self.coeffs[0]

    def is_rational_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def has_integer_coords(self) -> bool:
        """True iff the element lies in Z[theta] (theta is an algebraic
        integer, so integer power-basis coordinates characterize it)."""
        return all(c.denominator == 1 for c in self.coeffs)

    # -- ring operations ----------------------------------------------

    def _check(self, other) -> "QThetaElem":
        if isinstance(other, QThetaElem):
            if not self.field.same_field(other.field):
                raise FieldMismatchError("operands from different fields")
            return other
        return self.field.rational(other)

    def __add__(self, other):
        other = self._check(other)
        return QThetaElem(
            self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return QThetaElem(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        s = self.field.degree
        if s == 1:
            return QThetaElem(self.field, (self.coeffs[0] * other.coeffs[0],))
        prod = [Fraction(0)] * (2 * s - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                prod[i + j] += a * b
        out = list(prod[:s])
        red = self.field._red
        for k in range(s, 2 * s - 1):
            c = prod[k]
            if c == 0:
                continue
            row = red[k - s]
            for i in range(s):
                out[i] += c * row[i]
        return QThetaElem(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "QThetaElem":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(theta)")
        if self.is_rational():
            return self.field.rational(1 / self.coeffs[0])
        # Extended Euclid in Q[x] against the minimal polynomial.
        mp = self.field.minpoly.as_fractions()
        a = rp_normalize(self.coeffs)
        r0, r1 = mp, a
        t0, t1 = (), (Fraction(1),)
        while True:
            q, r = rp_divmod(r0, r1)
            if not r:
                break
            t0, t1 = t1, tuple(
                x - y
                for x, y in _zip_pad(t0, rp_mul(q, t1))
            )
            r0, r1 = r1, r
        if len(r1) != 1:
            raise ZeroDivisionError(
                "element is a zero divisor: minimal polynomial is reducible"
            )
        inv = tuple(c / r1[0] for c in t1)
        s = self.field.degree
        _, inv = rp_divmod(inv, mp) if len(inv) > s else ((), inv)
        coeffs = list(inv) + [Fraction(0)] * (s - len(inv))
        return QThetaElem(self.field, tuple(coeffs[:s]))

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._check(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- order and equality --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QThetaElem):
            return (
                self.field.same_field(other.field) and self.coeffs == other.coeffs
            )
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def sign(self) -> int:
        """Exact sign: -1, 0, +1."""
        if self.is_zero():
            return 0
        if self.field.degree == 1:
            c = self.coeffs[0]
            return 1 if c > 0 else -1
        theta = self.field.theta
        for _ in range(_MAX_SIGN_REFINEMENTS):
            lo, hi = eval_poly_interval(self.coeffs, theta.interval)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            theta.refine(4)
        raise PrecisionError(
            "sign refinement exhausted; is the minimal polynomial reducible?"
        )

    def cmp(self, other) -> int:
        return (self - other).sign()

    def __lt__(self, other):
        return self.cmp(other) < 0

    def __le__(self, other):
        return self.cmp(other) <= 0

    def __gt__(self, other):
        return self.cmp(other) > 0

    def __ge__(self, other):
        return self.cmp(other) >= 0

    # -- numeric views --------------------------------------------------

    def interval(self, width) -> tuple:
        """A rational interval of width < `width` containing the value."""
        width = Fraction(width)
        theta = self.field.theta
        for _ in range(_MAX_SIGN_REFINEMENTS):
            lo, hi = eval_poly_interval(self.coeffs, theta.interval)
            if hi - lo < width:
                return (lo, hi)
            theta.refine(8)
        raise PrecisionError("interval refinement exhausted")

    def __float__(self) -> float:
        if self.field.degree == 1:
            return float(self.coeffs[0])
        lo, hi = self.interval(Fraction(1, 10**25))
        return float((lo + hi) / 2)

    def float_str(self, digits: int = 15) -> str:
        return format(float(self), f".{digits}g")

    def serialize(self):
        """JSON form: list of 'p/q' strings in power-basis order."""
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        return f"QThetaElem({list(map(str, self.coeffs))})"


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = tuple(a) + (Fraction(0),) * (n - len(a))
    b = tuple(b) + (Fraction(0),) * (n - len(b))
    return zip(a, b)


class QThetaVec:
    """A d-vector with Q(theta) entries; all tiling geometry lives here."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple(entries)
        if not entries:
            raise TilingError("empty vector")
        self.entries = entries

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def field(self) -> NumberField:
        return self.entries[0].field

    def __add__(self, other):
        return QThetaVec(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        return QThetaVec(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return QThetaVec(tuple(-a for a in self.entries))

    def scale(self, s) -> "QThetaVec":
        return QThetaVec(tuple(a * s for a in self.entries))

    def dot(self, other) -> QThetaElem:
        acc = self.entries[0] * other.entries[0]
        for a, b in zip(self.entries[1:], other.entries[1:]):
            acc = acc + a * b
        return acc

    def norm_sq(self) -> QThetaElem:
        return self.dot(self)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def key(self):
        """Hashable structural key (power-basis coordinates)."""
        return tuple(e.coeffs for e in self.entries)

    def __eq__(self, other):
        return isinstance(other, QThetaVec) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __getitem__(self, i) -> QThetaElem:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def floats(self):
        return tuple(float(e) for e in self.entries)

    def serialize(self):
        return [e.serialize() for e in self.entries]

    def __repr__(self):
        return f"QThetaVec({[e.serialize() for e in self.entries]})"


def parse_rational(text) -> Fraction:
    """Parse 'p/q' (or 'p') exactly; rejects non-canonical forms."""
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise TilingError(f"rational must be a string, got {type(text).__name__}")
    try:
        f = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise TilingError(f"bad rational {text!r}: {exc}") from None
    if "/" in text:
        num, den = text.split("/", 1)
        if int(den) <= 0 or Fraction(int(num), int(den)) != f or abs(
            Fraction(int(num), int(den)).numerator
        ) != abs(int(num)):
            raise TilingError(f"rational {text!r} is not in lowest terms p/q with q > 0")
    return f
