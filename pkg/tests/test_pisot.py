from fractions import Fraction

import numpy as np
import pytest

from tilingspectra import IntPoly, is_pisot, make_algebraic
from tilingspectra.pisot import (
    circle_root_count,
    inside_unit_disc_count,
    inside_unit_disc_count_winding,
)


def float_root_census(coeffs, tol=1e-9):
    """Floating oracle: (inside, on, outside) counts via numpy roots."""
    roots = np.roots([float(c) for c in reversed(coeffs)])
    inside = sum(1 for r in roots if abs(r) < 1 - tol)
    on = sum(1 for r in roots if abs(abs(r) - 1) <= tol)
    outside = sum(1 for r in roots if abs(r) > 1 + tol)
    return inside, on, outside


@pytest.mark.parametrize(
    "coeffs,approx,expected",
    [
        ([-2, 1], 2, True),  # integers >= 2 are Pisot
        ([-1, -1, 1], Fraction(8, 5), True),  # golden ratio
        ([-5, -2, 1], Fraction(345, 100), False),  # conjugate 1 - sqrt(6)
        ([-1, -1, 0, 1], Fraction(133, 100), True),  # smallest Pisot (plastic number)
        ([-2, -1, 0, 1], Fraction(152, 100), False),  # x^3 - x - 2: complex pair outside
    ],
)
def test_pisot_verdicts_match_float_oracle(coeffs, approx, expected):
    theta = make_algebraic(IntPoly(coeffs), approx)
    cert = is_pisot(theta)
    inside, on, outside = float_root_census(coeffs)
    assert (cert.inside, cert.on_circle, cert.outside) == (inside, on, outside)
    assert cert.pisot == expected
    assert cert.inside + cert.on_circle + cert.outside == cert.degree


def test_certificate_counts_golden():
    theta = make_algebraic(IntPoly([-1, -1, 1]), Fraction(8, 5))
    cert = is_pisot(theta)
    assert (cert.inside, cert.on_circle, cert.outside) == (1, 0, 1)
    assert cert.conjugate_moduli and abs(cert.conjugate_moduli[0] - 0.618034) < 1e-5


def test_non_pisot_counts():
    theta = make_algebraic(IntPoly([-5, -2, 1]), Fraction(345, 100))
    cert = is_pisot(theta)
    assert (cert.inside, cert.on_circle, cert.outside) == (0, 0, 2)
    assert not cert.pisot


def test_salem_like_circle_roots():
    # Lehmer's polynomial: degree 10, Salem number; 8 roots on the circle.
    lehmer = IntPoly([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
    assert circle_root_count(lehmer) == 8
    theta = make_algebraic(lehmer, Fraction(117628, 100000))
    cert = is_pisot(theta)
    assert not cert.pisot
    assert (cert.inside, cert.on_circle, cert.outside) == (1, 0 + 8, 1)


def test_cyclotomic_circle_count():
    # x^2 + x + 1: both roots on the circle
    assert circle_root_count(IntPoly([1, 1, 1])) == 2
    # x^2 - 2: none
    assert circle_root_count(IntPoly([-2, 0, 1])) == 0
    # (x-1) factor counts once
    assert circle_root_count(IntPoly([-1, 1])) == 1


def test_schur_cohn_agrees_with_winding_on_random_polys():
    rng = np.random.default_rng(7)
    checked = 0
    while checked < 40:
        deg = int(rng.integers(1, 6))
        coeffs = [int(c) for c in rng.integers(-6, 7, size=deg + 1)]
        if coeffs[-1] == 0 or coeffs[0] == 0:
            continue
        p = IntPoly(coeffs)
        roots = np.roots([float(c) for c in reversed(coeffs)])
        if any(abs(abs(r) - 1) < 1e-6 for r in roots):
            continue  # too close to the circle for the float filter
        expected = sum(1 for r in roots if abs(r) < 1)
        assert inside_unit_disc_count(p) == expected
        assert inside_unit_disc_count_winding(p) == expected
        checked += 1
