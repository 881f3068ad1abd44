"""Weighted cycles, the balancing condition, and degree.

A weighted polyhedral complex is balanced when, at every codimension-one
face, the weighted sum of primitive normals of its cofaces lies in the
face's own direction lattice.  Balanced compact cycles kill d''-exact
integrands, which is the content of the tropical Stokes theorem.
"""

from fractions import Fraction

from tropcalc import (PiecewiseForm, Polynomial, Polyhedron, Superform,
                      WeightedCycle, check_balanced, circle_complex, degree,
                      face_lattice, integrate)

# the standard tropical line: three rays from the origin
rays = [(1, 0), (0, 1), (-1, -1)]
cells = [Polyhedron.make(2, vertices=[(0, 0)], rays=[r]) for r in rays]
line = face_lattice(cells)
z = WeightedCycle.all_ones(line)
rep = check_balanced(z)
print("tropical line balanced:", rep.balanced)
assert rep.balanced

# doubling one weight breaks the condition at the origin
bad = WeightedCycle(line, {c: (2 if line.cells[c].rays[0] == ((1, 0))
                              else 1) for c in line.top_cells()})
rep = check_balanced(bad)
print("perturbed weights balanced:", rep.balanced,
      "| violations:", [(c, list(v)) for c, v in rep.violations])
assert not rep.balanced

# degree of a zero-cycle is the sum of its weights
pts = face_lattice([Polyhedron.make(1, vertices=[(i,)]) for i in range(3)])
z0 = WeightedCycle(pts, dict(zip(sorted(pts.top_cells()), [2, 3, -1])))
print("degree of weights (2, 3, -1):", degree(z0))
assert degree(z0) == 4

# on a compact balanced cycle (the glued circle) every d''-exact
# integrand integrates to zero
circ = circle_complex()
# x(1-x) d'x matches across the gluing since it vanishes at both ends
alpha = PiecewiseForm.constant(circ, Superform.monomial(
    1, (0,), (), Polynomial(1, {(1,): Fraction(1), (2,): Fraction(-1)})))
val = integrate(alpha.dsecond(), WeightedCycle.all_ones(circ)).value
print("int_circle d''(x(1-x) d'x) =", val)
assert val == 0
