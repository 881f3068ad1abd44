from fractions import Fraction

import pytest

from tropcalc import (CechCocycle, PiecewiseForm, Polynomial, Polyhedron,
                      Superform, WeightedCycle, box_complex, build_tube,
                      cech_delta, circle_complex, coefficient_space,
                      cycle_class, face_lattice, hpq, integrate, pair,
                      point_complex, torus_complex)
from tropcalc.errors import Mismatch


def test_hpq_point():
    assert hpq(point_complex(), 0) == [1]


def test_hpq_circle():
    c = circle_complex()
    assert hpq(c, 0) == [1, 1]
    assert hpq(c, 1) == [1, 1]


def test_hpq_torus():
    t = torus_complex()
    assert [hpq(t, p) for p in range(3)] == [[1, 2, 1], [2, 4, 2], [1, 2, 1]]


def test_hpq_interval():
    # contractible: only h^{0,0} = 1 survives in p = 0
    x = box_complex(0, 1, 1)
    assert hpq(x, 0) == [1, 0]


def test_coefficient_space_tropical_line():
    rays = [(1, 0), (0, 1), (-1, -1)]
    line = face_lattice([Polyhedron.make(2, vertices=[(0, 0)], rays=[r])
                         for r in rays])
    vertex = line.cells_of_dim(0)[0]
    ray = line.cells_of_dim(1)[0]
    assert len(coefficient_space(line, vertex, 1)) == 2
    assert len(coefficient_space(line, ray, 1)) == 1
    assert len(coefficient_space(line, vertex, 0)) == 1


def test_cech_cocycle_alternating():
    x = box_complex(0, 1, 1)
    f = PiecewiseForm.constant(x, Superform.monomial(1, (0,), ()))
    c = CechCocycle([None, None], 1, {(0, 1): f})
    assert c.component((0, 1)) is f
    assert c.component((1, 0)).cell_forms == f.scale(-1).cell_forms
    assert c.component((0, 0)) is None


def test_cech_delta_squares_to_zero():
    x = box_complex(0, 1, 1)
    f = PiecewiseForm.constant(x, Superform.monomial(
        1, (0,), (), Polynomial(1, {(1,): Fraction(1)})))
    g = PiecewiseForm.constant(x, Superform.monomial(
        1, (0,), (), Polynomial(1, {(2,): Fraction(1)})))
    c = CechCocycle([None] * 3, 0, {(0,): f, (1,): g, (2,): f + g})
    dd = cech_delta(cech_delta(c))
    assert all(form.is_zero() for form in dd.comps.values())


def test_cycle_class_q1():
    t = build_tube(box_complex(0, 1, 1), 1, 0, 1, 2)
    c = cycle_class(t)
    assert len(c.thetas) == 1 and c.thetas[0].degree == 0
    # theta_0 is tau(m{y}) = m d'y on its carrier
    form = c.thetas[0].comps[(0,)]
    assert (form.p, form.q) == (1, 0)


def test_cycle_class_q2_ladder():
    t = build_tube(box_complex(0, 1, 1), 2, 0, 1, 1)
    c = cycle_class(t)
    assert [th.degree for th in c.thetas] == [1, 0]
    assert len(c.varthetas) == 1
    # the representative is d''-closed cellwise
    for form in c.representative.comps.values():
        assert form.dsecond().is_zero()


def test_pair_cauchy_and_mismatch_guard():
    base = box_complex(0, 1, 1)
    omega = PiecewiseForm.constant(base, Superform.monomial(
        1, (0,), (0,), Polynomial(1, {(1,): Fraction(1)})))
    t = build_tube(base, 1, 0, 1, 3)
    assert pair(cycle_class(t), omega) == Fraction(3, 2)
    t2 = build_tube(base, 2, 0, 1, 2)
    assert pair(cycle_class(t2), omega) == 1


def test_pair_degree_formula():
    pt = point_complex(((0, 0),))
    one = PiecewiseForm.constant(pt, Superform.function(Polynomial.constant(2, 1)))
    t = build_tube(pt, 2, 0, 1, 5)
    assert pair(cycle_class(t), one) == 5
