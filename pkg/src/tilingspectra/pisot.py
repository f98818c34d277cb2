"""Exact root location relative to the unit circle, and the Pisot test.

A real algebraic integer theta > 1 is Pisot when every Galois conjugate
lies strictly inside the unit disc.  Everything here is certified by
integer/rational arithmetic:

* roots ON the circle divide gcd(p, p~) where p~ reverses the
  coefficients; that gcd is self-reciprocal, so after stripping roots at
  +-1 the substitution y = x + 1/x halves the degree and Sturm chains
  count the real roots of the transform in (-2, 2), each standing for a
  conjugate pair on the circle;
* roots INSIDE the disc are counted by Schur-Cohn reduction over the
  rationals.  The plain reduction is singular whenever |a_0| = |a_n|
  (every algebraic unit, e.g. x^2 - x - 1), so the count runs at rational
  radii (2^k -+ 1)/2^k bracketing 1 and tightens k until both sides
  agree; with no circle roots the moduli stay clear of 1 and the loop
  terminates;
* an independent winding-number count (rational parameterization of the
  circle plus a Cauchy index) is exposed for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebraic import AlgebraicReal
from .errors import PrecisionError, TilingError
from .polys import (
    IntPoly,
    cauchy_index,
    int_content,
    reciprocal,
    rp_divmod,
    rp_gcd,
    rp_to_int_primitive,
    sturm_count,
)


class _Degenerate(Exception):
    """Schur-Cohn hit a vanishing reflection coefficient."""


def _schur_count(coeffs) -> int:
    """Schur-Cohn count of roots strictly inside the unit disc.

    Valid only when the polynomial has no roots on the circle.  A circle
    zero of the input survives every reduction step, so a run that never
    degenerates doubles as a certificate that there were none.
    """
    cur = [int(c) for c in coeffs]
    while cur and cur[-1] == 0:
        cur.pop()
    if not cur:
        raise _Degenerate("zero polynomial")
    n = len(cur) - 1
    if n == 0:
        return 0
    a0, an = cur[0], cur[-1]
    t = [a0 * p - an * q for p, q in zip(cur, reversed(cur))]
    while t and t[-1] == 0:
        t.pop()
    if not t or t[0] == 0:
        raise _Degenerate("vanishing Schur transform")
    g = int_content(t)
    t = [c // g for c in t]
    if t[0] > 0:
        # |a0| > |an|: the transform keeps the inside count.
        return _schur_count(t)
    # |a0| < |an|: the transform counts the reciprocal's roots instead.
    return n - _schur_count(t)


def _scaled(coeffs, num: int, den: int):
    """Integer coefficients of den^n * p(num*x/den)."""
    n = len(coeffs) - 1
    return [coeffs[k] * num**k * den ** (n - k) for k in range(n + 1)]


def inside_unit_disc_count(p: IntPoly) -> int:
    """Number of roots with |z| < 1, exact; requires no roots with |z| = 1."""
    coeffs = list(p.coeffs)
    if len(coeffs) == 1:
        return 0
    for k in range(3, 300):
        den = 1 << k
        try:
            n_lo = _schur_count(_scaled(coeffs, den - 1, den))
            n_hi = _schur_count(_scaled(coeffs, den + 1, den))
        except _Degenerate:
            continue
        if n_lo == n_hi:
            return n_lo
    raise PrecisionError(
        "Schur-Cohn radii did not converge; is there a root on the unit circle?"
    )


def inside_unit_disc_count_winding(p: IntPoly) -> int:
    """Independent inside-count via the argument principle.

    Parameterize the circle rationally, z(t) = ((1-t^2) + 2it)/(1+t^2);
    then (1+t^2)^n p(z(t)) = A(t) + iB(t) with integer A, B, and the
    winding number of p over the circle equals -I(B/A)/2 with I the
    Cauchy index over the real line.  Requires no roots on the circle
    (in particular p(-1) != 0, where the parameterization closes up).
    """
    n = p.degree
    if n == 0:
        return 0

    def pmul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out

    def padd(a, b):
        out = [0] * max(len(a), len(b))
        for i, x in enumerate(a):
            out[i] += x
        for i, x in enumerate(b):
            out[i] += x
        return out

    re_z, im_z = [1, 0, -1], [0, 2]  # numerator of z(t): (1 - t^2) + i 2t
    one_plus = [1, 0, 1]
    pw = [[1]]
    for _ in range(n):
        pw.append(pmul(pw[-1], one_plus))
    acc_re, acc_im = [0], [0]
    zp_re, zp_im = [1], [0]
    for k, a in enumerate(p.coeffs):
        if a:
            acc_re = padd(acc_re, [a * c for c in pmul(zp_re, pw[n - k])])
            acc_im = padd(acc_im, [a * c for c in pmul(zp_im, pw[n - k])])
        zp_re, zp_im = (
            padd(pmul(zp_re, re_z), [-c for c in pmul(zp_im, im_z)]),
            padd(pmul(zp_re, im_z), pmul(zp_im, re_z)),
        )
    A = tuple(Fraction(c) for c in acc_re)
    B = tuple(Fraction(c) for c in acc_im)
    idx = cauchy_index(A, B)
    if idx % 2 != 0:
        raise TilingError("odd Cauchy index: root on the unit circle?")
    return -idx // 2


def _strip_pm1_roots(coeffs):
    """Divide out any factors (x - 1), (x + 1); return (reduced, count)."""
    count = 0
    cur = tuple(Fraction(c) for c in coeffs)
    for r in (Fraction(1), Fraction(-1)):
        while sum(c * r**k for k, c in enumerate(cur)) == 0:
            cur, rem = rp_divmod(cur, (-r, Fraction(1)))
            assert not rem
            count += 1
    return cur, count


def _chebyshev_transform(coeffs):
    """For palindromic g of even degree 2k, the h with g(x) = x^k h(x + 1/x).

    Uses x^j + x^-j = P_j(x + 1/x) with P_0 = 2, P_1 = y,
    P_{j+1} = y*P_j - P_{j-1}.
    """
    c = [Fraction(x) for x in coeffs]
    deg = len(c) - 1
    if deg % 2 != 0:
        raise TilingError("palindromic polynomial of odd degree slipped through")
    k = deg // 2
    for j in range(deg + 1):
        if c[j] != c[deg - j]:
            raise TilingError("transform requires palindromic coefficients")
    h = [c[k] if i == 0 else Fraction(0) for i in range(k + 1)]
    p_prev = [Fraction(2)]
    p_cur = [Fraction(0), Fraction(1)]
    for j in range(1, k + 1):
        basis = p_cur
        for i, v in enumerate(basis):
            h[i] += c[k + j] * v
        nxt = [Fraction(0)] + p_cur
        for i, v in enumerate(p_prev):
            nxt[i] -= v
        p_prev, p_cur = p_cur, nxt
    return tuple(h)


def circle_root_count(p: IntPoly) -> int:
    """Exact number of roots with |z| = 1 (p square-free, p(0) != 0)."""
    if p.degree == 0:
        return 0
    if p.coeffs[0] == 0:
        raise TilingError("zero constant term: factor x out first")
    g = rp_gcd(p.as_fractions(), reciprocal(p).as_fractions())
    if len(g) - 1 <= 0:
        return 0
    reduced, on_pm1 = _strip_pm1_roots(rp_to_int_primitive(g))
    if len(reduced) - 1 == 0:
        return on_pm1
    h = _chebyshev_transform(rp_to_int_primitive(reduced))
    # Real roots x of g map to |x + 1/x| >= 2 and complex off-circle pairs
    # map to non-real y, so roots of h in (-2, 2) are exactly the circle
    # conjugate pairs.
    pairs = sturm_count(h, Fraction(-2), Fraction(2))
    return on_pm1 + 2 * pairs


@dataclass(frozen=True)
class PisotCertificate:
    """Exact root-location counts; inside + on + outside = degree."""

    pisot: bool
    degree: int
    inside: int
    on_circle: int
    outside: int
    conjugate_moduli: tuple  # floats, approximate view only

    def as_dict(self):
        return {
            "pisot": self.pisot,
            "degree": self.degree,
            "counts": {
                "inside": self.inside,
                "on": self.on_circle,
                "outside": self.outside,
            },
            "conjugate_moduli": [format(m, ".15g") for m in self.conjugate_moduli],
        }


def is_pisot(theta: AlgebraicReal) -> PisotCertificate:
    """Decide Pisot-ness of theta > 1 with an exact root-count certificate."""
    if theta.cmp_rational(1) <= 0:
        raise TilingError("Pisot test requires theta > 1")
    p = theta.minpoly
    s = p.degree
    on = circle_root_count(p)
    if on == 0:
        inside = inside_unit_disc_count(p)
    else:
        # Circle roots all divide g = gcd(p, p~); g's off-circle roots come
        # in z, 1/z pairs, one inside and one outside each.
        g = rp_to_int_primitive(rp_gcd(p.as_fractions(), reciprocal(p).as_fractions()))
        gdeg = len(g) - 1
        q, rem = rp_divmod(p.as_fractions(), tuple(Fraction(c) for c in g))
        if rem:
            raise TilingError("internal defect: gcd does not divide the polynomial")
        inside = (gdeg - on) // 2
        q = rp_to_int_primitive(q)
        if len(q) - 1 > 0:
            inside += inside_unit_disc_count(IntPoly(q))
    outside = s - on - inside
    return PisotCertificate(
        pisot=(on == 0 and inside == s - 1),
        degree=s,
        inside=inside,
        on_circle=on,
        outside=outside,
        conjugate_moduli=_conjugate_moduli(theta),
    )


def _conjugate_moduli(theta: AlgebraicReal):
    """Approximate conjugate moduli (display only, never used in verdicts)."""
    import numpy as np

    coeffs = list(reversed(theta.minpoly.coeffs))
    if len(coeffs) <= 2:
        return ()
    roots = np.roots([float(c) for c in coeffs])
    target = float(theta)
    idx = min(range(len(roots)), key=lambda i: abs(roots[i] - target))
    moduli = sorted(abs(r) for i, r in enumerate(roots) if i != idx)
    return tuple(float(m) for m in moduli)
