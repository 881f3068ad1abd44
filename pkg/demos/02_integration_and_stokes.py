"""Exact integration and the Stokes formula.

Integrals of (d,d)-forms over d-cells are lattice-normalized: the value
is computed in a Z-basis of the cell's saturated direction lattice, so
it is a rational number independent of the basis choice.
"""

from fractions import Fraction

from tropcalc import (PiecewiseForm, Polynomial, Polyhedron, Superform,
                      WeightedCycle, boundary_integral, box_complex,
                      face_lattice, integrate, stokes_verify)

# volume of the unit square
sq = box_complex(0, 1, 2)
vol = PiecewiseForm.constant(sq, Superform.monomial(2, (0, 1), (0, 1)))
print("int_{[0,1]^2} d'x^d'y^d''x^d''y =",
      integrate(vol, WeightedCycle.all_ones(sq)).value)

# the diagonal of the square is a primitive segment of lattice length 1
diag = face_lattice([Polyhedron.make(2, vertices=[(0, 0), (1, 1)])])
f = PiecewiseForm.constant(
    diag, Superform.monomial(2, (0,), (0,), Polynomial(2, {(1, 0): Fraction(1)})))
print("int_diag x d'x^d''x =", integrate(f, WeightedCycle.all_ones(diag)).value)
assert integrate(f, WeightedCycle.all_ones(diag)).value == Fraction(1, 2)

# a non-primitive segment counts its lattice length
long = face_lattice([Polyhedron.make(2, vertices=[(0, 0), (2, 2)])])
g = PiecewiseForm.constant(long, Superform.monomial(2, (0,), (0,)))
print("lattice length of [(0,0),(2,2)] =",
      integrate(g, WeightedCycle.all_ones(long)).value)
assert integrate(g, WeightedCycle.all_ones(long)).value == 2

# Stokes:  int_P d''alpha = - int_{boundary P} alpha
cube = box_complex(0, 1, 3)
poly = Polynomial(3, {(1, 1, 1): Fraction(1), (0, 2, 0): Fraction(-3)})
alpha = PiecewiseForm.constant(cube, Superform.monomial(3, (0, 1, 2), (0, 2), poly))
lhs = integrate(alpha.dsecond(), cube).value
rhs = -boundary_integral(alpha, cube).value
print("\nStokes on the cube: int d''alpha =", lhs, "  -int_bd alpha =", rhs)
assert stokes_verify(alpha, cube) == 0

# a discontinuous integrand leaks through the interior wall: the
# residual detects the failure instead of silently returning a number
halves = face_lattice([
    Polyhedron.make(1, vertices=[(0,), (Fraction(1, 2),)]),
    Polyhedron.make(1, vertices=[(Fraction(1, 2),), (1,)])])
bad = PiecewiseForm(halves, {
    cid: Superform.monomial(1, (0,), (),
                            Polynomial(1, {(0,): Fraction(i)}))
    for i, cid in enumerate(sorted(halves.top_cells()))}, 1, 0)
print("residual for a discontinuous form:", stokes_verify(bad, halves))
assert stokes_verify(bad, halves) != 0
