import random
from fractions import Fraction

import pytest

from tropcalc import (PiecewiseForm, Polynomial, Polyhedron, Superform,
                      WeightedCycle, boundary_integral, box_complex,
                      build_tube, cech_sign, circle_complex, face_lattice,
                      integrate, integrate_cell, stokes_face_residual,
                      stokes_verify, torus_complex)
from tropcalc.errors import BidegreeMismatch, UnboundedSupport

from conftest import random_polynomial


def test_interval_and_weights():
    x = box_complex(0, 1, 1)
    f = PiecewiseForm.constant(x, Superform.monomial(1, (0,), (0,)))
    assert integrate(f, WeightedCycle.all_ones(x)).value == 1
    z = WeightedCycle(x, {c: 7 for c in x.top_cells()})
    assert integrate(f, z).value == 7


def test_lattice_normalization():
    # the segment [(0,0),(3,6)] has lattice length 3
    seg = face_lattice([Polyhedron.make(2, vertices=[(0, 0), (3, 6)])])
    f = PiecewiseForm.constant(seg, Superform.monomial(2, (0,), (0,)))
    assert integrate(f, WeightedCycle.all_ones(seg)).value == 3


def test_simplex_monomials():
    tri = face_lattice([Polyhedron.make(2, vertices=[(0, 0), (1, 0), (0, 1)])])
    for poly, expect in [
        (Polynomial.constant(2, 1), Fraction(1, 2)),
        (Polynomial(2, {(1, 0): Fraction(1)}), Fraction(1, 6)),
        (Polynomial(2, {(1, 1): Fraction(1)}), Fraction(1, 24)),
    ]:
        f = PiecewiseForm.constant(tri, Superform.monomial(2, (0, 1), (0, 1), poly))
        assert integrate(f, WeightedCycle.all_ones(tri)).value == expect


def test_unbounded_zero_ok_nonzero_raises():
    ray = face_lattice([Polyhedron.make(1, vertices=[(0,)], rays=[(1,)])])
    zero = PiecewiseForm.constant(ray, Superform.zero(1, 1, 1))
    assert integrate(zero, WeightedCycle.all_ones(ray)).value == 0
    one = PiecewiseForm.constant(ray, Superform.monomial(1, (0,), (0,)))
    with pytest.raises(UnboundedSupport):
        integrate(one, WeightedCycle.all_ones(ray))


def test_bidegree_guard():
    x = box_complex(0, 1, 2)
    f = PiecewiseForm.constant(x, Superform.monomial(2, (0,), (0,)))
    with pytest.raises(BidegreeMismatch):
        integrate(f, WeightedCycle.all_ones(x))


def test_refining_integration():
    # form carried on one subdivision, cycle on another
    a = face_lattice([Polyhedron.make(1, vertices=[(0,), (Fraction(1, 2),)]),
                      Polyhedron.make(1, vertices=[(Fraction(1, 2),), (1,)])])
    x = box_complex(0, 1, 1)
    f = PiecewiseForm(
        a, {c: Superform.monomial(1, (0,), (0,),
                                  Polynomial(1, {(1,): Fraction(1)}))
            for c in a.top_cells()}, 1, 1)
    assert integrate(f, WeightedCycle.all_ones(x)).value == Fraction(1, 2)


def test_glued_volumes():
    circ = circle_complex()
    f = PiecewiseForm.constant(circ, Superform.monomial(1, (0,), (0,)))
    assert integrate(f, WeightedCycle.all_ones(circ)).value == 1
    torus = torus_complex()
    g = PiecewiseForm.constant(torus, Superform.monomial(2, (0, 1), (0, 1)))
    assert integrate(g, WeightedCycle.all_ones(torus)).value == 1


def test_boundary_integral_interval():
    x = box_complex(0, 1, 1)
    f = PiecewiseForm.constant(x, Superform.monomial(
        1, (0,), (), Polynomial(1, {(1,): Fraction(1)})))
    # d''(x d'x) integrates to -1 * (boundary term)
    assert stokes_verify(f, x) == 0
    assert boundary_integral(f, x).value == 1


def test_stokes_random_square():
    rng = random.Random(21)
    sq = box_complex(0, 1, 2)
    for _ in range(10):
        form = Superform.monomial(2, (0, 1), (rng.randrange(2),),
                                  random_polynomial(rng, 2))
        f = PiecewiseForm.constant(sq, form)
        assert stokes_verify(f, sq) == 0


def test_glued_closed_no_boundary():
    circ = circle_complex()
    # glue-compatible (1,0)-form: coefficient vanishing at both endpoints
    f = PiecewiseForm.constant(circ, Superform.monomial(
        1, (0,), (), Polynomial(1, {(1,): Fraction(1), (2,): Fraction(-1)})))
    assert boundary_integral(f, circ).value == 0
    assert integrate(f.dsecond(), WeightedCycle.all_ones(circ)).value == 0


def test_cech_sign():
    assert cech_sign(1, (1,)) == -1
    assert cech_sign(1, (1, 2)) == 1
    assert cech_sign(2, (1, 2)) == -1
    assert cech_sign(2, (1, 2, 3)) == 1


def test_iterated_tube_stokes_vanishing_form():
    base = box_complex(0, 1, 1)
    t = build_tube(base, 2, 0, 1, 1)
    # f = x(1-x) (1-y1)(1-y2): zero on side walls and caps
    f = Polynomial(3, {(1, 0, 0): Fraction(1), (2, 0, 0): Fraction(-1)})
    f = f * Polynomial(3, {(0, 0, 0): Fraction(1), (0, 1, 0): Fraction(-1)})
    f = f * Polynomial(3, {(0, 0, 0): Fraction(1), (0, 0, 1): Fraction(-1)})
    alpha = PiecewiseForm.constant(
        t.tube, Superform.monomial(3, (0, 1, 2), (1, 2), f))
    assert stokes_face_residual(t, alpha, ()) == 0
    beta = PiecewiseForm.constant(
        t.tube, Superform.monomial(3, (0, 1, 2), (2,), f))
    assert stokes_face_residual(t, beta, (1,)) == 0


def test_iterated_tube_stokes_detects_leak():
    base = box_complex(0, 1, 1)
    t = build_tube(base, 1, 0, 1, 1)
    # x(1-y) does not vanish on the side wall x = 1: genuine leak
    f = Polynomial(2, {(1, 0): Fraction(1), (1, 1): Fraction(-1)})
    alpha = PiecewiseForm.constant(t.tube, Superform.monomial(2, (0, 1), (1,), f))
    assert stokes_face_residual(t, alpha, ()) != 0
