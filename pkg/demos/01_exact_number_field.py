"""Exact arithmetic in Q(theta) and certified Pisot verdicts.

Everything below runs in rational arithmetic: theta is a (minimal
polynomial, isolating interval) pair, field elements are power-basis
coordinate vectors, and comparisons refine the interval until the sign
is certain.
"""

from fractions import Fraction

from tilingspectra import IntPoly, NumberField, golden_field, is_pisot, make_algebraic
from tilingspectra.traces import dist_to_int_limit, trace

K = golden_field()
t = K.gen()
print("theta =", K.theta.to_decimal(20), "with minimal polynomial", K.minpoly)

print("\n-- field arithmetic reduces modulo the minimal polynomial --")
print("theta^2       =", (t * t).serialize(), " (i.e. 1 + theta)")
print("1/theta       =", t.inverse().serialize(), " (theta is a unit)")
print("(2+3t)(2+3t)^-1 =", (K.elem((2, 3)) * K.elem((2, 3)).inverse()).serialize())

print("\n-- exact comparisons --")
print("theta - 1 > 1/2 ?", (t - 1) > Fraction(1, 2))
print("theta - 1 < 2/3 ?", (t - 1) < Fraction(2, 3))

print("\n-- Pisot certificates count roots against the unit circle --")
for coeffs, approx in [
    ((-2, 1), 2),
    ((-1, -1, 1), Fraction(8, 5)),
    ((-5, -2, 1), Fraction(345, 100)),
    ((-1, -1, 0, 1), Fraction(133, 100)),
]:
    theta = make_algebraic(IntPoly(coeffs), approx)
    cert = is_pisot(theta)
    print(
        f"  {IntPoly(coeffs)}: pisot={cert.pisot} "
        f"(inside={cert.inside}, on={cert.on_circle}, outside={cert.outside})"
    )

print("\n-- the trace engine decides dist(theta^n x, Z) -> 0 exactly --")
print("Tr(theta^n) for n=0..7:", [str(trace(t**n)) for n in range(8)], "(Lucas numbers)")
for x, label in [(K.one(), "x = 1"), (K.rational(Fraction(1, 3)), "x = 1/3")]:
    rep = dist_to_int_limit(x)
    print(
        f"  {label}: eventually integer = {rep.eventually_integer} "
        f"(denominator {rep.denominator}, preperiod {rep.preperiod}, period {rep.period})"
    )
