"""Tropical Dolbeault cohomology via the cellular model.

h^{p,q} is computed from a cochain complex whose q-cochains assign to
each q-cell sigma a vector in F_p(sigma), the span of p-fold wedges of
lattice directions of the cofaces of sigma.  Everything is exact linear
algebra over Q.
"""

from tropcalc import (Polyhedron, circle_complex, coefficient_space,
                      face_lattice, hpq, point_complex, torus_complex)

print("point:   h^(0,q) =", hpq(point_complex(), 0))

circ = circle_complex()
print("circle:  h^(0,q) =", hpq(circ, 0), "  h^(1,q) =", hpq(circ, 1))
assert hpq(circ, 0) == [1, 1] and hpq(circ, 1) == [1, 1]

torus = torus_complex()
table = [hpq(torus, p) for p in range(3)]
print("torus:   hodge numbers (rows p, cols q):")
for p, row in enumerate(table):
    print("   p =", p, ":", row)
assert table == [[1, 2, 1], [2, 4, 2], [1, 2, 1]]

# the coefficient spaces see the local geometry: at the vertex of the
# tropical line all of Q^2 is spanned, on a ray only its own direction
rays = [(1, 0), (0, 1), (-1, -1)]
line = face_lattice([Polyhedron.make(2, vertices=[(0, 0)], rays=[r])
                     for r in rays])
vertex = next(iter(line.cells_of_dim(0)))
ray = next(iter(line.cells_of_dim(1)))
print("\ntropical line: dim F_1(vertex) =",
      len(coefficient_space(line, vertex, 1)),
      " dim F_1(ray) =", len(coefficient_space(line, ray, 1)))
assert len(coefficient_space(line, vertex, 1)) == 2
assert len(coefficient_space(line, ray, 1)) == 1
