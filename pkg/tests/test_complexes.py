from fractions import Fraction

from tropcalc import (Polyhedron, box_complex, circle_complex, face_lattice,
                      point_complex, refine, refine_by_hyperplanes,
                      torus_complex)


def test_face_lattice_of_square():
    x = box_complex(0, 1, 2)
    assert [len(x.cells_of_dim(d)) for d in range(3)] == [4, 4, 1]
    assert x.euler_characteristic() == 1


def test_incidence_signs_form_chain_complex():
    # signs around every codim-2 face must cancel pairwise
    x = box_complex(0, 1, 3)
    for mid in x.cells_of_dim(1):
        total = 0
        for inc1 in x.coface_incidences_of(mid):
            for inc2 in x.coface_incidences_of(inc1.parent):
                if x.cells[inc2.parent].dim == 3:
                    total += inc1.sign * inc2.sign
        assert total == 0


def test_primitive_normal_is_inward():
    x = box_complex(0, 2, 2)
    top = x.top_cells()[0]
    for inc in x.facet_incidences_of(top):
        nu = x.incidence_normal(inc)
        face = x.cells[inc.child]
        pt = face.relative_interior_point()
        moved = tuple(a + b for a, b in zip(pt, nu))
        assert x.cells[top].contains(moved)


def test_glued_circle_and_torus():
    c = circle_complex()
    assert c.mode == "glued"
    assert [len(c.cells_of_dim(d)) for d in range(2)] == [1, 1]
    assert c.euler_characteristic() == 0
    t = torus_complex()
    assert [len(t.cells_of_dim(d)) for d in range(3)] == [1, 2, 1]
    assert t.euler_characteristic() == 0


def test_refine_parents_cover():
    a = face_lattice([Polyhedron.make(1, vertices=[(0,), (2,)])])
    b = face_lattice([Polyhedron.make(1, vertices=[(0,), (1,)]),
                      Polyhedron.make(1, vertices=[(1,), (2,)])])
    ref = refine(a, b)
    lengths = sorted(
        tuple(q - p for p, q in zip(*sorted(ref.complex.cells[c].vertices)))
        for c in ref.complex.cells_of_dim(1))
    assert lengths == [(1,), (1,)]
    for cid, (ca, cb) in ref.parents.items():
        assert ca in a.cells and cb in b.cells


def test_refine_by_hyperplanes():
    x = box_complex(0, 1, 2)
    ref = refine_by_hyperplanes(x, [((1, 0), Fraction(1, 2))])
    assert len(ref.complex.cells_of_dim(2)) == 2


def test_point_complex():
    p = point_complex(((0, 0), (1, 1)))
    assert len(p.cells_of_dim(0)) == 2 and p.dim == 0
