from fractions import Fraction

import pytest

from tilingspectra import (
    IntPoly,
    NumberField,
    UndecidedError,
    dist_to_int_limit,
    golden_field,
    make_algebraic,
    trace,
)
from tilingspectra.traces import dist_sequence, dist_to_int


def lucas_oracle(n):
    """Independent oracle: t_{k+2} = t_{k+1} + t_k from t0=2, t1=1."""
    seq = [2, 1]
    while len(seq) <= n:
        seq.append(seq[-1] + seq[-2])
    return seq[: n + 1]


def companion_trace_oracle(minpoly, upto):
    """Tr(theta^k) via companion-matrix powers (independent of Newton)."""
    s = minpoly.degree
    comp = [[0] * s for _ in range(s)]
    for i in range(1, s):
        comp[i][i - 1] = 1
    for i in range(s):
        comp[i][s - 1] = -minpoly.coeffs[i]
    out = []
    acc = [[1 if i == j else 0 for j in range(s)] for i in range(s)]
    for _ in range(upto + 1):
        out.append(sum(acc[i][i] for i in range(s)))
        acc = [
            [sum(acc[i][k] * comp[k][j] for k in range(s)) for j in range(s)]
            for i in range(s)
        ]
    return out


@pytest.fixture(scope="module")
def K():
    return golden_field()


def test_trace_of_one_is_degree(K):
    assert trace(K.one()) == 2
    K1 = NumberField(make_algebraic(IntPoly([-2, 1]), 2))
    assert trace(K1.one()) == 1


def test_trace_of_theta_and_theta_squared(K):
    t = K.gen()
    assert trace(t) == 1  # sum of roots
    assert trace(t * t) == 3  # Newton: p2 = e1 p1 - 2 e2


def test_power_traces_are_lucas_numbers(K):
    lucas = lucas_oracle(50)
    t = K.gen()
    cur = K.one()
    for n in range(51):
        assert trace(cur) == lucas[n]
        cur = cur * t


def test_newton_matches_companion_oracle():
    cases = {
        (-1, -1, 1): Fraction(8, 5),
        (-5, -2, 1): Fraction(345, 100),
        (-1, -1, 0, 1): Fraction(133, 100),
        (-2, 1): Fraction(2),
    }
    for coeffs, approx in cases.items():
        mp = IntPoly(coeffs)
        K = NumberField(make_algebraic(mp, approx))
        assert K.power_traces(12) == [Fraction(v) for v in companion_trace_oracle(mp, 12)]


def test_lucas_mod3_never_eventually_zero(K):
    # brute-force oracle over one period
    lucas = lucas_oracle(40)
    residues = [v % 3 for v in lucas]
    assert 0 in residues  # single zeros do appear...
    # ...but the pair-state (v_n, v_{n+1}) mod 3 never hits (0, 0)
    assert all((residues[i], residues[i + 1]) != (0, 0) for i in range(39))
    report = dist_to_int_limit(K.rational(Fraction(1, 3)))
    assert not report.eventually_integer
    assert report.denominator == 3
    assert report.period == 8  # state cycle of Lucas pairs mod 3


def test_integer_start_is_immediately_periodic(K):
    report = dist_to_int_limit(K.one())
    assert report.eventually_integer
    assert report.denominator == 1
    assert report.preperiod == 0


def test_dyadic_in_degree_one():
    K = NumberField(make_algebraic(IntPoly([-2, 1]), 2))
    report = dist_to_int_limit(K.rational(Fraction(1, 2)))
    assert report.eventually_integer
    assert report.preperiod == 1
    assert report.period == 1


def test_budget_yields_undecided(K):
    with pytest.raises(UndecidedError):
        dist_to_int_limit(K.rational(Fraction(1, 10**9)), budget=100)


def test_dist_decay_for_verified_limit(K):
    # eventually-integer implies the exact distances drop below 1e-3
    report = dist_to_int_limit(K.one())
    assert report.eventually_integer
    lo_n = report.preperiod + 20
    dists = dist_sequence(K.one(), range(lo_n, report.preperiod + 41))
    assert all(d < Fraction(1, 1000) for d in dists)


def test_dist_matches_conjugate_decay(K):
    # dist(theta^n, Z) = |theta'|^n exactly once below 1/2; theta' = 1-theta
    t = K.gen()
    conj = 1 - 1.6180339887498949
    for n in (5, 9, 14):
        d = dist_to_int(t**n)
        assert abs(float(d) - abs(conj) ** n) < 1e-12


def test_exact_rational_distance():
    K = NumberField(make_algebraic(IntPoly([-2, 1]), 2))
    assert dist_to_int(K.rational(Fraction(7, 3))) == Fraction(1, 3)
    assert dist_to_int(K.rational(5)) == 0
