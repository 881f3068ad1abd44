import random
from fractions import Fraction

from tropcalc import linalg as la


def test_rref_rank_nullspace():
    rows = [la.vec([1, 2, 3]), la.vec([2, 4, 6]), la.vec([0, 1, 1])]
    basis, pivots = la.rref(rows)
    assert len(basis) == 2 and la.rank(rows) == 2
    for v in la.nullspace(rows, 3):
        for r in rows:
            assert la.dot(r, v) == 0


def test_solve_and_det():
    cols = [la.vec([2, 0]), la.vec([1, 3])]
    x = la.solve(cols, la.vec([5, 3]))
    assert x == (Fraction(2), Fraction(1))
    assert la.solve([la.vec([1, 2]), la.vec([2, 4])], la.vec([0, 1])) is None
    assert la.det(((2, 1), (0, 3))) == 6
    assert la.det(((1, 2), (2, 4))) == 0


def test_det_multiplicative_randomized():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 4)
        a = tuple(tuple(Fraction(rng.randint(-3, 3))
                        for _ in range(n)) for _ in range(n))
        b = tuple(tuple(Fraction(rng.randint(-3, 3))
                        for _ in range(n)) for _ in range(n))
        assert la.det(la.matmul(a, b)) == la.det(a) * la.det(b)


def test_primitive_and_lattice():
    assert la.primitive(la.vec([4, -6, 2])) == (2, -3, 1)
    basis = la.saturated_lattice_basis([la.vec([2, 2])], 2)
    assert basis == [(1, 1)]
    assert la.in_lattice(la.vec([3, 3]), basis)
    assert not la.in_lattice(la.vec([1, 0]), basis)
    assert not la.in_lattice(la.vec([Fraction(1, 2), Fraction(1, 2)]), basis)


def test_hnf_and_int_kernel():
    ker = la.int_kernel([[1, 1, 1]], 3)
    assert len(ker) == 2
    for v in ker:
        assert sum(v) == 0
    # kernel vectors generate the full integer kernel lattice
    assert la.in_lattice(la.vec([1, -2, 1]), ker)


def test_solve_int_unit():
    x = la.solve_int_unit([3, 5], 1)
    assert 3 * x[0] + 5 * x[1] == 1
    x = la.solve_int_unit([4, 6], 2)
    assert 4 * x[0] + 6 * x[1] == 2
