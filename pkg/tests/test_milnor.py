import random
from fractions import Fraction

import pytest

from tropcalc import (PLFunction, Polyhedron, Symbol, box_complex,
                      face_lattice, normalize, tau, trop_chart)
from tropcalc.errors import CarrierMismatch


def linear(x, slope, const=0):
    return PLFunction.linear(x, slope, const)


def test_symbol_degree_guard():
    x = box_complex(0, 1, 2)
    with pytest.raises(CarrierMismatch):
        Symbol(2, [(Fraction(1), (linear(x, (1, 0)),))])


def test_normalize_merges_and_drops():
    x = box_complex(0, 1, 2)
    f, g = linear(x, (1, 0)), linear(x, (0, 1))
    s = Symbol.of(f, g) + Symbol.of(f, g).scale(-1)
    assert normalize(s).terms == []
    s2 = Symbol.of(f, g) + Symbol.of(f, g)
    assert [c for c, _ in normalize(s2).terms] == [Fraction(2)]


def test_normalize_expands_products():
    x = box_complex(0, 1, 2)
    f, g, h = linear(x, (1, 0)), linear(x, (0, 1)), linear(x, (1, 1), 2)
    prod = Symbol(2, [(Fraction(1), ([f, g], h))])
    expanded = normalize(prod)
    assert len(expanded.terms) == 2


def test_tau_basic_and_dsecond_closed():
    x = box_complex(0, 1, 2)
    f, g = linear(x, (2, 0)), linear(x, (0, 3))
    form = tau(Symbol.of(f, g))
    assert (form.p, form.q) == (2, 0)
    cid = sorted(form.carrier.maximal_cells)[0]
    coef = form.cell_forms[cid].terms[((0, 1), ())].coeffs[(0, 0)]
    assert coef == 6
    assert form.dsecond().is_zero()


def test_tau_bilinear_and_antisymmetric():
    x = box_complex(0, 1, 2)
    f, g, h = linear(x, (1, 0)), linear(x, (0, 1)), linear(x, (1, 2), 1)
    # bilinearity through a product entry (tropicalized product = sum)
    lhs = tau(Symbol(2, [(Fraction(1), ([f, g], h))]))
    rhs = tau(Symbol.of(f, h)) + tau(Symbol.of(g, h))
    assert (lhs - rhs).is_zero()
    assert (tau(Symbol.of(f, g)) + tau(Symbol.of(g, f))).is_zero()
    assert tau(Symbol.of(f, f)).is_zero()


def test_tau_on_genuinely_pl_function():
    # max(x, 0) on the real line: cellwise slopes 1 and 0
    line = face_lattice([
        Polyhedron.make(1, vertices=[(0,)], rays=[(1,)]),
        Polyhedron.make(1, vertices=[(0,)], rays=[(-1,)])])
    m = PLFunction(line, {
        c: (((1,) if line.cells[c].rays[0] == (1,) else (0,)), Fraction(0))
        for c in line.top_cells()})
    form = tau(Symbol.of(m))
    vals = sorted(
        form.cell_forms[c].terms.get(((0,), ()),
                                     None) is not None
        for c in form.carrier.maximal_cells)
    assert vals == [False, True]


def test_trop_chart():
    x = box_complex(0, 1, 1)
    ident = linear(x, (1,))
    shifted = linear(x, (1,), 1)
    chart = trop_chart([ident, shifted], x)
    # image is a segment on the line y2 = y1 + 1
    assert chart.image.dim == 1
    assert chart.sigma_u is not None
    assert set(chart.cell_map) == set(x.top_cells())
