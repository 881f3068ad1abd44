from fractions import Fraction

from tropcalc import Polyhedron
from tropcalc import polyhedra as ph


def test_dim_and_lattice_basis():
    seg = Polyhedron.make(2, vertices=[(0, 0), (2, 2)])
    assert seg.dim == 1
    assert seg.lattice_basis == ((1, 1),)
    tri = Polyhedron.make(2, vertices=[(0, 0), (1, 0), (0, 1)])
    assert tri.dim == 2 and tri.is_bounded


def test_unbounded():
    cone = Polyhedron.make(2, vertices=[(0, 0)], rays=[(1, 0), (1, 1)])
    assert cone.dim == 2 and not cone.is_bounded


def test_facets_of_triangle():
    tri = Polyhedron.make(2, vertices=[(0, 0), (2, 0), (0, 2)])
    facets = tri.facets
    assert len(facets) == 3
    assert all(f.dim == 1 for f in facets)


def test_all_faces_counts():
    sq = Polyhedron.make(2, vertices=[(0, 0), (1, 0), (0, 1), (1, 1)])
    faces = sq.all_faces()
    by_dim = {}
    for f in faces:
        by_dim[f.dim] = by_dim.get(f.dim, 0) + 1
    assert by_dim == {0: 4, 1: 4, 2: 1}


def test_from_hrep_roundtrip():
    p = ph.from_hrep(2, [], [((1, 0), 1), ((-1, 0), 0),
                            ((0, 1), 1), ((0, -1), 0)])
    assert sorted(p.vertices) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_intersect():
    a = Polyhedron.make(1, vertices=[(0,), (2,)])
    b = Polyhedron.make(1, vertices=[(1,), (3,)])
    c = ph.intersect(a, b)
    assert sorted(c.vertices) == [(1,), (2,)]
    d = ph.intersect(a, Polyhedron.make(1, vertices=[(5,), (6,)]))
    assert d.is_empty


def test_contains_and_interior_point():
    tri = Polyhedron.make(2, vertices=[(0, 0), (1, 0), (0, 1)])
    x = tri.relative_interior_point()
    assert tri.contains(x)
    assert tri.contains((0, 0))
    assert not tri.contains((1, 1))


def test_decompose_simplices_partitions():
    sq = Polyhedron.make(2, vertices=[(0, 0), (1, 0), (0, 1), (1, 1)])
    simplices = ph.decompose_simplices(sq)
    total = Fraction(0)
    from tropcalc import linalg as la
    for s in simplices:
        v0 = la.vec(s[0])
        cols = [la.sub(la.vec(v), v0) for v in s[1:]]
        total += abs(la.det(tuple(zip(*cols)))) / 2
    assert total == 1
