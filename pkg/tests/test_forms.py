import random
from fractions import Fraction

import pytest

from tropcalc import (PiecewiseForm, PLFunction, Polynomial, Superform,
                      box_complex, pl_partition_of_unity)
from tropcalc import polyhedra as ph
from tropcalc.errors import BidegreeMismatch, DimensionMismatch

from conftest import random_polynomial, random_superform


def test_polynomial_arithmetic():
    p = Polynomial(2, {(1, 0): Fraction(1)})
    q = Polynomial(2, {(0, 1): Fraction(2)})
    assert (p * q).coeffs == {(1, 1): Fraction(2)}
    assert (p + p).coeffs == {(1, 0): Fraction(2)}
    assert p.diff(0).coeffs == {(0, 0): Fraction(1)}
    assert p.diff(1).is_zero()


def test_superform_canonical_indices():
    # out-of-order indices sort with a shuffle sign
    a = Superform.monomial(2, (0,), (1,)).wedge(Superform.monomial(2, (1,), (0,)))
    b = Superform.monomial(2, (1,), (0,)).wedge(Superform.monomial(2, (0,), (1,)))
    assert a == b  # total degree 2 * total degree 2: commute


def test_wedge_associative():
    rng = random.Random(3)
    for _ in range(20):
        n = 3
        a = random_superform(rng, n, 1, 0, 1)
        b = random_superform(rng, n, 0, 1, 1)
        c = random_superform(rng, n, 1, 1, 1)
        assert a.wedge(b).wedge(c) == a.wedge(b.wedge(c))


def test_contraction_anticommutes():
    rng = random.Random(5)
    v = (Fraction(1), Fraction(2), Fraction(-1))
    w = (Fraction(0), Fraction(1), Fraction(1))
    for _ in range(20):
        a = random_superform(rng, 3, 2, 1)
        left = a.contract(v, "dprime", a.p).contract(w, "dprime", a.p - 1)
        right = a.contract(w, "dprime", a.p).contract(v, "dprime", a.p - 1)
        assert left == right.scale(-1)


def test_contraction_commutes_with_dsecond():
    # <d''a ; v> = -d''<a ; v> for slot-last d' contraction
    rng = random.Random(11)
    v = (Fraction(2), Fraction(-1), Fraction(3))
    for _ in range(20):
        a = random_superform(rng, 3, 2, 1)
        lhs = a.dsecond().contract(v, "dprime", a.p)
        rhs = a.contract(v, "dprime", a.p).dsecond().scale(-1)
        assert lhs == rhs


def test_pullback_functorial():
    rng = random.Random(9)
    m1 = ((Fraction(1), Fraction(1)), (Fraction(0), Fraction(1)))
    s1 = (Fraction(2), Fraction(0))
    m2 = ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)))
    s2 = (Fraction(1), Fraction(1))
    comp = tuple(tuple(sum(m2[i][k] * m1[k][j] for k in range(2))
                       for j in range(2)) for i in range(2))
    shift = tuple(sum(m2[i][k] * s1[k] for k in range(2)) + s2[i]
                  for i in range(2))
    for _ in range(10):
        a = random_superform(rng, 2, 1, 1)
        assert a.pullback(comp, shift) == a.pullback(m2, s2).pullback(m1, s1)


def test_bidegree_checks():
    a = Superform.monomial(2, (0,), (1,))
    with pytest.raises(BidegreeMismatch):
        a + Superform.monomial(2, (0, 1), (1,))
    with pytest.raises(DimensionMismatch):
        a + Superform.monomial(3, (0,), (1,))


def test_plfunction_dprime_form():
    x = box_complex(0, 1, 2)
    f = PLFunction.linear(x, (2, 3), 5)
    df = f.dprime_form()
    cid = sorted(x.maximal_cells)[0]
    expect = Superform.monomial(2, (0,), (), Polynomial(2, {(0, 0): Fraction(2)})) \
        + Superform.monomial(2, (1,), (), Polynomial(2, {(0, 0): Fraction(3)}))
    assert df.cell_forms[cid] == expect


def test_partition_of_unity():
    x = box_complex(0, 1, 1)
    cover = [ph.from_hrep(1, [], [((1,), Fraction(2, 3))]),
             ph.from_hrep(1, [], [((-1,), Fraction(-1, 3))])]
    rhos = pl_partition_of_unity(cover, x)
    carrier = rhos[0].carrier
    for cid in carrier.maximal_cells:
        total_slope, total_const = (Fraction(0),), Fraction(0)
        for r in rhos:
            s, c = r.data[cid]
            total_slope = tuple(a + b for a, b in zip(total_slope, s))
            total_const += c
        assert total_slope == (0,) and total_const == 1
    # each rho is supported inside its cover set
    for r, u in zip(rhos, cover):
        for cid in carrier.maximal_cells:
            pt = carrier.cells[cid].relative_interior_point()
            s, c = r.data[cid]
            val = sum(a * b for a, b in zip(s, pt)) + c
            if not u.contains(pt):
                assert val == 0


def test_piecewise_mul_pl_and_dsecond():
    x = box_complex(0, 1, 1)
    f = PLFunction.linear(x, (1,))
    a = PiecewiseForm.constant(x, Superform.monomial(1, (0,), ()))
    prod = a.mul_pl(f)
    d = prod.dsecond()
    cid = sorted(x.maximal_cells)[0]
    # d''(x d'x) = -d'x ^ d''x under the (-1)^{|I|} component convention
    assert d.cell_forms[cid] == Superform.monomial(
        1, (0,), (0,), Polynomial(1, {(0,): Fraction(-1)}))
