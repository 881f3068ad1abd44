"""Exact linear algebra over the rationals and over the integers.

Vectors are tuples of Fraction (or int), matrices are tuples of row
tuples.  Everything here is deterministic and exact; no floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vec = tuple
Mat = tuple


def vec(entries: Iterable) -> Vec:
    return tuple(Fraction(e) for e in entries)


def mat(rows: Iterable[Iterable]) -> Mat:
    return tuple(vec(r) for r in rows)


def zeros(n: int) -> Vec:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> Vec:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def neg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def scale(c, u: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in u)


def dot(u: Vec, v: Vec):
    return sum((a * b for a, b in zip(u, v, strict=True)), Fraction(0))


def is_zero(u: Vec) -> bool:
    return all(a == 0 for a in u)


def matvec(m: Mat, v: Vec) -> Vec:
    return tuple(dot(row, v) for row in m)


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m)) if m else ()


def matmul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def rref(rows: Sequence[Vec]) -> tuple[list[Vec], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    m = [list(vec(r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(rows: Sequence[Vec]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Sequence[Vec], ncols: int) -> list[Vec]:
    """Basis of the right kernel {x : M x = 0} over Q."""
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(a_cols: Sequence[Vec], b: Vec) -> Vec | None:
    """Solve sum_j x_j * a_cols[j] = b exactly; None if inconsistent.

    When the columns are linearly dependent the solution with free
    variables set to zero is returned.
    """
    ncols = len(a_cols)
    rows = [tuple(col[i] for col in a_cols) + (b[i],) for i in range(len(b))]
    red, pivots = rref(rows)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[-1]
    return tuple(x)


def det(m: Mat):
    """Determinant by fraction-free-ish Gaussian elimination."""
    n = len(m)
    a = [list(vec(r)) for r in m]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            sign = -sign
        pv = a[c][c]
        result *= pv
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / pv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return sign * result


# ---------------------------------------------------------------------------
# integer lattice routines


def vec_gcd(u: Iterable[int]) -> int:
    g = 0
    for a in u:
        g = gcd(g, int(a))
    return g


def primitive(u: Vec) -> Vec:
    """Scale a rational vector to a primitive integer vector (same ray)."""
    u = vec(u)
    if is_zero(u):
        return tuple(0 for _ in u)
    denom_lcm = 1
    for a in u:
        denom_lcm = denom_lcm * a.denominator // gcd(denom_lcm, a.denominator)
    ints = [int(a * denom_lcm) for a in u]
    g = vec_gcd(ints)
    return tuple(a // g for a in ints)


def to_int_vec(u: Vec) -> tuple[int, ...]:
    out = []
    for a in u:
        a = Fraction(a)
        if a.denominator != 1:
            raise ValueError(f"not an integer vector entry: {a}")
        out.append(int(a))
    return tuple(out)


def hnf_col(a_rows: Sequence[Sequence[int]], ncols: int):
    """Column-style Hermite normal form.

    Returns (H, U) where U is unimodular (ncols x ncols), H = A @ U, and
    H is lower-staircase: each row's pivot columns move left, pivots
    positive, entries left of a pivot reduced into [0, pivot).
    """
    a = [list(map(int, row)) for row in a_rows]
    nrows = len(a)
    u = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def col_op_swap(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in u:
            row[j], row[k] = row[k], row[j]

    def col_op_add(j, k, q):
        # col_j += q * col_k
        for row in a:
            row[j] += q * row[k]
        for row in u:
            row[j] += q * row[k]

    def col_op_neg(j):
        for row in a:
            row[j] = -row[j]
        for row in u:
            row[j] = -row[j]

    pivot_col = 0
    for r in range(nrows):
        # gcd-out row r across columns pivot_col..ncols-1
        while True:
            nz = [j for j in range(pivot_col, ncols) if a[r][j] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda j: abs(a[r][j]))
            j0 = nz[0]
            for j in nz[1:]:
                q = a[r][j] // a[r][j0]
                col_op_add(j, j0, -q)
        nz = [j for j in range(pivot_col, ncols) if a[r][j] != 0]
        if not nz:
            continue
        j0 = nz[0]
        if j0 != pivot_col:
            col_op_swap(j0, pivot_col)
        if a[r][pivot_col] < 0:
            col_op_neg(pivot_col)
        pv = a[r][pivot_col]
        for j in range(pivot_col):
            q = a[r][j] // pv
            if q:
                col_op_add(j, pivot_col, -q)
        pivot_col += 1
        if pivot_col == ncols:
            break
    return a, u


def int_kernel(a_rows: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    """Z-basis of {x in Z^ncols : A x = 0}.  The basis is saturated."""
    h, u = hnf_col(a_rows, ncols)
    kernel = []
    for j in range(ncols):
        if all(row[j] == 0 for row in h):
            kernel.append(tuple(row[j] for row in u))
    return kernel


def saturated_lattice_basis(gens: Sequence[Vec], n: int) -> list[tuple[int, ...]]:
    """Z-basis of span_Q(gens) intersected with Z^n.

    The generators may be rational; the result is a basis of the
    saturation, i.e. has index one in its Q-span's integer points.
    """
    gens = [vec(g) for g in gens if not is_zero(vec(g))]
    if not gens:
        return []
    # span_Q(gens) = {x : k . x = 0 for k in nullspace basis of gens-as-rows}
    constraints = nullspace([tuple(g) for g in gens], n)
    if not constraints:
        return [tuple(int(e) for e in unit(n, i)) for i in range(n)]
    int_constraints = [primitive(c) for c in constraints]
    return int_kernel(int_constraints, n)


def in_lattice(v: Vec, basis: Sequence[Sequence[int]]) -> bool:
    """Membership of an integer vector in a saturated lattice."""
    v = vec(v)
    if any(a.denominator != 1 for a in v):
        return False
    if is_zero(v):
        return True
    if not basis:
        return False
    # basis is saturated, so an integer vector in the Q-span lies in the
    # lattice
    return solve([vec(b) for b in basis], v) is not None


def solve_int_unit(phi: Sequence[int], target: int) -> tuple[int, ...]:
    """Find integer u with phi . u == target, where gcd(phi) divides target."""
    phi = [int(p) for p in phi]
    n = len(phi)
    # extended gcd over the whole vector
    coeffs = [0] * n
    g = 0
    for i, p in enumerate(phi):
        if p == 0:
            continue
        if g == 0:
            g, coeffs = abs(p), [0] * n
            coeffs[i] = 1 if p > 0 else -1
            continue
        old_g = g
        x0, x1 = _ext_gcd(g, p)
        g = gcd(g, p)
        coeffs = [c * x0 for c in coeffs]
        coeffs[i] += x1
        assert sum(c * q for c, q in zip(coeffs, phi)) == g, (old_g, p)
    if g == 0:
        raise ValueError("zero functional")
    if target % g != 0:
        raise ValueError("target not a multiple of the gcd")
    f = target // g
    return tuple(c * f for c in coeffs)


def _ext_gcd(a: int, b: int) -> tuple[int, int]:
    """(x, y) with x*a + y*b = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_x, old_y = -old_x, -old_y
    return old_x, old_y
