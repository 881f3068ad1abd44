"""Cycle classes of tube corners and the tropical Cauchy formula.

A tube model thickens a weighted base P by a box [h, H]^q; its corner
V^{1..q} carries the cycle m[P].  The Cech-Dolbeault zig-zag turns
tau(m{y_1, ..., y_q}) into a d''-closed representative, and pairing the
class with a pulled-back d''-closed form omega satisfies

    <cl(Z), omega> = m * int_P omega.
"""

from fractions import Fraction

from tropcalc import (PiecewiseForm, Polynomial, Superform, WeightedCycle,
                      box_complex, build_tube, cycle_class, integrate, pair,
                      point_complex, stokes_face_residual)

# q = 1: a weighted interval
base = box_complex(0, 1, 1)
t = build_tube(base, 1, 0, 1, 3)
omega = PiecewiseForm.constant(base, Superform.monomial(
    1, (0,), (0,), Polynomial(1, {(1,): Fraction(1)})))
c = cycle_class(t)
v = pair(c, omega)
print("q=1, m=3, omega = x d'x^d''x:")
print("  <cl(Z), omega> =", v, "  m * int_P omega =",
      3 * integrate(omega, WeightedCycle.all_ones(base)).value)
assert v == Fraction(3, 2)

# q = 2 over the same base: the ladder has a genuine zig-zag step
t2 = build_tube(base, 2, 0, 1, 2)
c2 = cycle_class(t2)
v2 = pair(c2, omega)
print("q=2, m=2: <cl(Z), omega> =", v2)
assert v2 == 1

# the degree formula: a point base in codimension q = n
pt = point_complex(((0, 0),))
t3 = build_tube(pt, 2, 0, 1, 5)
one = PiecewiseForm.constant(pt, Superform.function(Polynomial.constant(2, 1)))
v3 = pair(cycle_class(t3), one)
print("degree formula, n = q = 2, m = 5: pairing =", v3)
assert v3 == 5

# the iterated Stokes formula on tube faces, which drives the pairing:
# int_{V^I} d''a  =  sum_{j not in I} (-1)^(j,I+j) int_{V^{I+j}} a
# for forms vanishing near the outer walls; here a vanishes on the side
# walls and the top cap of a q=1 tube, so the only boundary term is V^{1}
poly = Polynomial(2, {(1, 0): Fraction(1), (2, 0): Fraction(-1)}) \
    * Polynomial(2, {(0, 0): Fraction(1), (0, 1): Fraction(-1)})
a = PiecewiseForm.constant(t.tube, Superform.monomial(2, (0, 1), (1,), poly))
res = stokes_face_residual(t, a, ())
print("iterated tube Stokes residual:", res)
assert res == 0
