from fractions import Fraction

import pytest

from tilingspectra.polys import (
    IntPoly,
    cauchy_index,
    is_squarefree,
    rational_roots,
    reciprocal,
    rp_divmod,
    rp_gcd,
    rp_mul,
    sturm_count,
)


def test_intpoly_strips_and_checks():
    p = IntPoly([-1, -1, 1, 0, 0])
    assert p.degree == 2
    assert p.is_monic()
    assert p(2) == 1
    assert p(Fraction(1, 2)) == Fraction(-5, 4)


def test_divmod_reconstructs():
    a = tuple(map(Fraction, (3, 0, -2, 1, 4)))
    b = tuple(map(Fraction, (1, 2, 1)))
    q, r = rp_divmod(a, b)
    assert rp_mul(q, b) == tuple(
        x - y for x, y in zip(a, r + (Fraction(0),) * (len(a) - len(r)))
    )


def test_gcd_of_coprime_is_one():
    g = rp_gcd((Fraction(-1), Fraction(-1), Fraction(1)), (Fraction(-2), Fraction(1)))
    assert g == (Fraction(1),)


def test_gcd_detects_common_factor():
    # (x-1)(x+2) and (x-1)(x-3) share x-1
    a = (Fraction(-2), Fraction(1), Fraction(1))
    b = (Fraction(3), Fraction(-4), Fraction(1))
    g = rp_gcd(a, b)
    assert g == (Fraction(-1), Fraction(1))


@pytest.mark.parametrize(
    "coeffs,lo,hi,expected",
    [
        ((-1, -1, 1), 0, 2, 1),  # golden ratio in (0, 2]
        ((-1, -1, 1), -1, 0, 1),  # conjugate in (-1, 0]
        ((-1, -1, 1), "-inf", "inf", 2),
        ((-2, 0, 1), 1, 2, 1),  # sqrt(2)
        ((1, 0, 1), "-inf", "inf", 0),  # x^2 + 1 has no real roots
        ((0, -1, 0, 1), "-inf", "inf", 3),  # x^3 - x
    ],
)
def test_sturm_counts(coeffs, lo, hi, expected):
    f = lambda v: v if isinstance(v, str) else Fraction(v)
    assert sturm_count(tuple(map(Fraction, coeffs)), f(lo), f(hi)) == expected


def test_cauchy_index_simple_pole():
    # 1/x jumps -inf -> +inf at 0
    assert cauchy_index((Fraction(0), Fraction(1)), (Fraction(1),)) == 1
    # -1/x jumps the other way
    assert cauchy_index((Fraction(0), Fraction(1)), (Fraction(-1),)) == -1


def test_squarefree():
    assert is_squarefree(IntPoly([-1, -1, 1]))
    assert not is_squarefree(IntPoly([1, 2, 1]))  # (x+1)^2
    assert not is_squarefree(IntPoly([0, 0, 1]))  # x^2


def test_rational_roots():
    # (x-1)(x+1) = x^2 - 1
    assert rational_roots(IntPoly([-1, 0, 1])) == [Fraction(-1), Fraction(1)]
    # 2x - 3
    assert rational_roots(IntPoly([-3, 2])) == [Fraction(3, 2)]
    assert rational_roots(IntPoly([-1, -1, 1])) == []


def test_reciprocal():
    assert reciprocal(IntPoly([-1, -1, 1])).coeffs == (1, -1, -1)
