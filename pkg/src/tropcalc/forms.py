"""(p,q)-superforms with exact polynomial coefficients, and PL functions.

A superform is sum_{I,J} f_IJ d'x_I ^ d''x_J with strictly increasing
multi-indices and rational polynomial coefficients.  Sign conventions:

  d'(f d'x_I d''x_J)  = sum_k df/dx_k d'x_k ^ d'x_I ^ d''x_J
  d''(f d'x_I d''x_J) = sum_k df/dx_k (-1)^|I| d'x_I ^ d''x_k ^ d''x_J
  wedge: moving the d'' block of the left factor past the d' block of the
  right factor costs (-1)^{q p'}

after which indices are sorted into canonical order with shuffle signs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import linalg as la
from .complexes import AffineMap, PolyComplex, Refinement, refine_by_hyperplanes
from .errors import (BidegreeMismatch, CarrierMismatch, DimensionMismatch,
                     NotACover, SlotOutOfRange, Unbounded)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Polynomial in n variables over Q, stored as {exponent tuple: coeff}."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        self.n = n
        self.coeffs = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c:
                    self.coeffs[tuple(int(x) for x in e)] = c

    @staticmethod
    def constant(n: int, c) -> "Polynomial":
        return Polynomial(n, {(0,) * n: Fraction(c)})

    @staticmethod
    def variable(n: int, i: int) -> "Polynomial":
        e = [0] * n
        e[i] = 1
        return Polynomial(n, {tuple(e): Fraction(1)})

    @staticmethod
    def affine(slope, const) -> "Polynomial":
        slope = la.vec(slope)
        n = len(slope)
        p = Polynomial.constant(n, const)
        for i, s in enumerate(slope):
            if s:
                e = [0] * n
                e[i] = 1
                p.coeffs[tuple(e)] = Fraction(s)
        return p

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.n == other.n
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.coeffs.items()))))

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Polynomial(self.n, out)

    def __neg__(self):
        return Polynomial(self.n, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.n, out)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self.n, {e: c * v for e, v in self.coeffs.items()})

    def diff(self, k: int) -> "Polynomial":
        out = {}
        for e, c in self.coeffs.items():
            if e[k]:
                e2 = list(e)
                e2[k] -= 1
                out[tuple(e2)] = out.get(tuple(e2), Fraction(0)) + c * e[k]
        return Polynomial(self.n, out)

    def eval(self, x):
        x = la.vec(x)
        total = Fraction(0)
        for e, c in self.coeffs.items():
            term = c
            for xi, ei in zip(x, e):
                for _ in range(ei):
                    term *= xi
            total += term
        return total

    def compose_affine(self, matrix, shift) -> "Polynomial":
        """Substitute x = A t + b; A has len(shift)==self.n rows."""
        m = len(matrix[0]) if matrix and matrix[0] is not None else 0
        if matrix:
            m = len(matrix[0])
        subs = [Polynomial.affine(row, s) for row, s in zip(matrix, shift)]
        if subs and subs[0].n != m:
            raise DimensionMismatch("bad substitution shape")
        out = Polynomial.constant(m, 0)
        for e, c in self.coeffs.items():
            term = Polynomial.constant(m, c)
            for i, ei in enumerate(e):
                for _ in range(ei):
                    term = term * subs[i]
            out = out + term
        return out

    def degree(self) -> int:
        return max((sum(e) for e in self.coeffs), default=0)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for e, c in sorted(self.coeffs.items()):
            mono = "*".join(f"x{i}^{k}" if k > 1 else f"x{i}"
                            for i, k in enumerate(e) if k)
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


def _merge_index(idx: tuple, k: int):
    """Insert k into a strictly increasing tuple; (sign, new tuple) or None."""
    if k in idx:
        return None
    pos = sum(1 for i in idx if i < k)
    sign = (-1) ** pos
    return sign, tuple(sorted(idx + (k,)))


def _shuffle_sign(a: tuple, b: tuple):
    """Merge two disjoint increasing tuples; (sign, merged) or None."""
    if set(a) & set(b):
        return None
    sign = 1
    for i, x in enumerate(b):
        # x crosses the elements of a greater than it
        sign *= (-1) ** sum(1 for y in a if y > x)
    return sign, tuple(sorted(a + b))


# ---------------------------------------------------------------------------
# superforms


class Superform:
    """Homogeneous (p,q)-superform on Q^n with polynomial coefficients."""

    __slots__ = ("n", "p", "q", "terms")

    def __init__(self, n: int, p: int, q: int, terms=None):
        self.n = n
        self.p = p
        self.q = q
        self.terms = {}
        if terms:
            for (i_idx, j_idx), poly in terms.items():
                if poly.is_zero():
                    continue
                if len(i_idx) != p or len(j_idx) != q:
                    raise DimensionMismatch("multi-index length mismatch")
                key = (tuple(i_idx), tuple(j_idx))
                if key in self.terms:
                    self.terms[key] = self.terms[key] + poly
                    if self.terms[key].is_zero():
                        del self.terms[key]
                else:
                    self.terms[key] = poly

    @staticmethod
    def zero(n: int, p: int = 0, q: int = 0) -> "Superform":
        return Superform(n, p, q)

    @staticmethod
    def function(poly: Polynomial) -> "Superform":
        return Superform(poly.n, 0, 0, {((), ()): poly})

    @staticmethod
    def monomial(n: int, i_idx, j_idx, poly=None) -> "Superform":
        i_idx, j_idx = tuple(i_idx), tuple(j_idx)
        poly = poly if poly is not None else Polynomial.constant(n, 1)
        return Superform(n, len(i_idx), len(j_idx), {(i_idx, j_idx): poly})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, Superform) and self.n == other.n
                and self.p == other.p and self.q == other.q
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, self.p, self.q,
                     tuple(sorted((k, hash(v)) for k, v in self.terms.items()))))

    def __add__(self, other):
        self._check_compat(other)
        out = dict(self.terms)
        merged = {k: v for k, v in out.items()}
        for k, v in other.terms.items():
            merged[k] = merged[k] + v if k in merged else v
        return Superform(self.n, self.p, self.q, merged)

    def __neg__(self):
        return Superform(self.n, self.p, self.q,
                         {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Superform":
        return Superform(self.n, self.p, self.q,
                         {k: v.scale(c) for k, v in self.terms.items()})

    def _check_compat(self, other):
        if self.n != other.n:
            raise DimensionMismatch("ambient dimension mismatch")
        if self.p != other.p or self.q != other.q:
            raise BidegreeMismatch("bidegree mismatch")

    def dprime(self) -> "Superform":
        out = {}
        for (i_idx, j_idx), poly in self.terms.items():
            for k in range(self.n):
                d = poly.diff(k)
                if d.is_zero():
                    continue
                merged = _merge_index(i_idx, k)
                if merged is None:
                    continue
                sign, new_i = merged
                key = (new_i, j_idx)
                add = d.scale(sign)
                out[key] = out[key] + add if key in out else add
        return Superform(self.n, self.p + 1, self.q, out)

    def dsecond(self) -> "Superform":
        out = {}
        sgn_i = (-1) ** self.p
        for (i_idx, j_idx), poly in self.terms.items():
            for k in range(self.n):
                d = poly.diff(k)
                if d.is_zero():
                    continue
                merged = _merge_index(j_idx, k)
                if merged is None:
                    continue
                sign, new_j = merged
                key = (i_idx, new_j)
                add = d.scale(sign * sgn_i)
                out[key] = out[key] + add if key in out else add
        return Superform(self.n, self.p, self.q + 1, out)

    def wedge(self, other: "Superform") -> "Superform":
        if self.n != other.n:
            raise DimensionMismatch("ambient dimension mismatch")
        out = {}
        cross = (-1) ** (self.q * other.p)
        for (i1, j1), f in self.terms.items():
            for (i2, j2), g in other.terms.items():
                mi = _shuffle_sign(i1, i2)
                if mi is None:
                    continue
                mj = _shuffle_sign(j1, j2)
                if mj is None:
                    continue
                sign = cross * mi[0] * mj[0]
                key = (mi[1], mj[1])
                add = (f * g).scale(sign)
                out[key] = out[key] + add if key in out else add
        return Superform(self.n, self.p + other.p, self.q + other.q, out)

    def contract(self, v, kind: str, slot: int = 1) -> "Superform":
        """Interior product of v into the given slot (1-based) and kind."""
        v = la.vec(v)
        if len(v) != self.n:
            raise DimensionMismatch("vector dimension mismatch")
        deg = self.p if kind == "dprime" else self.q
        if not 1 <= slot <= deg:
            raise SlotOutOfRange(f"slot {slot} of {kind} degree {deg}")
        out = {}
        for (i_idx, j_idx), poly in self.terms.items():
            idx = i_idx if kind == "dprime" else j_idx
            for a, coord in enumerate(idx, start=1):
                if v[coord] == 0:
                    continue
                sign = (-1) ** (a - slot)
                rest = idx[:a - 1] + idx[a:]
                key = ((rest, j_idx) if kind == "dprime" else (i_idx, rest))
                add = poly.scale(sign * v[coord])
                out[key] = out[key] + add if key in out else add
        if kind == "dprime":
            return Superform(self.n, self.p - 1, self.q, out)
        return Superform(self.n, self.p, self.q - 1, out)

    def pullback(self, matrix, shift) -> "Superform":
        """Pull back along t |-> matrix @ t + shift (matrix: n x m)."""
        matrix = tuple(tuple(Fraction(e) for e in row) for row in matrix)
        shift = la.vec(shift)
        if len(matrix) != self.n or len(shift) != self.n:
            raise DimensionMismatch("map codomain mismatch")
        m = len(matrix[0]) if matrix else 0
        out = {}
        from itertools import combinations
        for (i_idx, j_idx), poly in self.terms.items():
            sub_poly = poly.compose_affine(matrix, shift)
            if sub_poly.is_zero():
                continue
            for k_idx in combinations(range(m), self.p):
                di = _minor_det(matrix, i_idx, k_idx)
                if di == 0:
                    continue
                for l_idx in combinations(range(m), self.q):
                    dj = _minor_det(matrix, j_idx, l_idx)
                    if dj == 0:
                        continue
                    key = (k_idx, l_idx)
                    add = sub_poly.scale(di * dj)
                    out[key] = out[key] + add if key in out else add
        return Superform(m, self.p, self.q, out)

    def eval_coeffs(self, x) -> "Superform":
        """Freeze coefficients at a point (constant-coefficient form)."""
        return Superform(self.n, self.p, self.q, {
            k: Polynomial.constant(self.n, poly.eval(x))
            for k, poly in self.terms.items()})

    def max_degree(self) -> int:
        return max((poly.degree() for poly in self.terms.values()), default=0)

    def __repr__(self):
        if not self.terms:
            return f"0[({self.p},{self.q})-form]"
        bits = []
        for (i_idx, j_idx), poly in sorted(self.terms.items()):
            di = "^".join(f"d'x{i}" for i in i_idx)
            dj = "^".join(f"d''x{j}" for j in j_idx)
            wedge = "^".join(x for x in (di, dj) if x)
            bits.append(f"({poly}) {wedge}".strip())
        return " + ".join(bits)


def _minor_det(matrix, rows, cols):
    sub = tuple(tuple(matrix[r][c] for c in cols) for r in rows)
    if not sub:
        return Fraction(1)
    return la.det(sub)


@lru_cache(maxsize=None)
def simplex_monomial_integral(exps: tuple) -> Fraction:
    """Integral of prod t_i^{e_i} over the standard simplex in dim len(exps)."""
    d = len(exps)
    num = 1
    for e in exps:
        num *= factorial(e)
    return Fraction(num, factorial(d + sum(exps)))


# ---------------------------------------------------------------------------
# piecewise data on complexes


class PLFunction:
    """Continuous piecewise-affine function on a polyhedral complex.

    Stored as affine data (slope, const) per top cell.
    """

    def __init__(self, carrier: PolyComplex, data: dict):
        self.carrier = carrier
        self.data = {cid: (la.vec(slope), Fraction(const))
                     for cid, (slope, const) in data.items()}

    @staticmethod
    def constant(carrier: PolyComplex, c) -> "PLFunction":
        n = carrier.ambient_dim
        return PLFunction(carrier, {cid: ((0,) * n, c)
                                    for cid in carrier.maximal_cells})

    @staticmethod
    def linear(carrier: PolyComplex, slope, const=0) -> "PLFunction":
        return PLFunction(carrier, {cid: (slope, const)
                                    for cid in carrier.maximal_cells})

    def eval(self, x):
        x = la.vec(x)
        for cid in self.carrier.maximal_cells:
            if self.carrier.cells[cid].contains(x):
                slope, const = self.data[cid]
                return la.dot(slope, x) + const
        raise ValueError(f"point {x} outside carrier")

    def has_integer_slopes(self) -> bool:
        return all(all(s.denominator == 1 for s in slope)
                   for slope, _ in self.data.values())

    def is_continuous(self) -> bool:
        """Exact agreement of neighbouring affine pieces on shared faces."""
        from . import polyhedra as ph
        tops = self.carrier.maximal_cells
        for i, a in enumerate(tops):
            for b in tops[i + 1:]:
                cap = ph.intersect(self.carrier.cells[a],
                                   self.carrier.cells[b])
                if cap.is_empty:
                    continue
                sa, ca = self.data[a]
                sb, cb = self.data[b]
                for v in cap.vertices:
                    if la.dot(sa, la.vec(v)) + ca != la.dot(sb, la.vec(v)) + cb:
                        return False
                for r in list(cap.rays) + list(cap.lineality):
                    if la.dot(sa, la.vec(r)) != la.dot(sb, la.vec(r)):
                        return False
        return True

    def transfer(self, ref: Refinement) -> "PLFunction":
        """Carry the data onto a refinement of the carrier."""
        out = {}
        for cid in ref.complex.maximal_cells:
            src = ref.parents[cid]
            src = src[0] if isinstance(src, tuple) else src
            out[cid] = self.data[src]
        return PLFunction(ref.complex, out)

    def scale(self, c) -> "PLFunction":
        c = Fraction(c)
        return PLFunction(self.carrier, {
            cid: (la.scale(c, slope), c * const)
            for cid, (slope, const) in self.data.items()})

    def shift(self, c) -> "PLFunction":
        c = Fraction(c)
        return PLFunction(self.carrier, {
            cid: (slope, const + c)
            for cid, (slope, const) in self.data.items()})

    def __add__(self, other: "PLFunction") -> "PLFunction":
        a, b = align_pl(self, other)
        return PLFunction(a.carrier, {
            cid: (la.add(a.data[cid][0], b.data[cid][0]),
                  a.data[cid][1] + b.data[cid][1])
            for cid in a.carrier.maximal_cells})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def as_polynomial(self, cid: int) -> Polynomial:
        slope, const = self.data[cid]
        return Polynomial.affine(slope, const)

    def dsecond_form(self) -> "PiecewiseForm":
        """Cellwise d'' of the function: a (0,1)-form, constant per cell."""
        n = self.carrier.ambient_dim
        forms = {}
        for cid, (slope, const) in self.data.items():
            terms = {}
            for k, s in enumerate(slope):
                if s:
                    terms[((), (k,))] = Polynomial.constant(n, s)
            forms[cid] = Superform(n, 0, 1, terms)
        return PiecewiseForm(self.carrier, forms, 0, 1)

    def dprime_form(self) -> "PiecewiseForm":
        """Cellwise d' of the function: a (1,0)-form, constant per cell."""
        n = self.carrier.ambient_dim
        forms = {}
        for cid, (slope, const) in self.data.items():
            terms = {}
            for k, s in enumerate(slope):
                if s:
                    terms[((k,), ())] = Polynomial.constant(n, s)
            forms[cid] = Superform(n, 1, 0, terms)
        return PiecewiseForm(self.carrier, forms, 1, 0)


def align_pl(*funcs):
    """Bring PL functions onto one common carrier by pairwise refinement."""
    from .complexes import refine
    if len({id(f.carrier) for f in funcs}) == 1:
        return funcs
    aligned = [funcs[0]]
    for f in funcs[1:]:
        ref_pair = refine(aligned[0].carrier, f.carrier)
        tops = ref_pair.complex.maximal_cells
        aligned = [PLFunction(ref_pair.complex,
                              {cid: g.data[ref_pair.parents[cid][0]]
                               for cid in tops})
                   for g in aligned]
        aligned.append(PLFunction(ref_pair.complex,
                                  {cid: f.data[ref_pair.parents[cid][1]]
                                   for cid in tops}))
    return tuple(aligned)


def _pl_select(f: PLFunction, g: PLFunction, pick_max: bool) -> PLFunction:
    """max or min of two PL functions on a shared carrier."""
    if f.carrier is not g.carrier:
        f, g = align_pl(f, g)
    cuts = []
    for cid in f.carrier.maximal_cells:
        cell = f.carrier.cells[cid]
        if not cell.is_bounded:
            raise Unbounded("PL max/min needs bounded cells")
        sf, cf = f.data[cid]
        sg, cg = g.data[cid]
        ds, dc = la.sub(sf, sg), cf - cg
        vals = [la.dot(ds, la.vec(v)) + dc for v in cell.vertices]
        if any(v > 0 for v in vals) and any(v < 0 for v in vals):
            cuts.append((ds, -dc))
    if cuts:
        seen = set()
        uniq = []
        for a, b in cuts:
            ap = la.primitive(a)
            s = next(x / y for x, y in zip(a, ap) if y != 0)
            key = (ap, b / s)
            if key not in seen:
                seen.add(key)
                uniq.append(key)
        ref = refine_by_hyperplanes(f.carrier, uniq)
        f, g = f.transfer(ref), g.transfer(ref)
    data = {}
    for cid in f.carrier.maximal_cells:
        cell = f.carrier.cells[cid]
        sf, cf = f.data[cid]
        sg, cg = g.data[cid]
        x0 = cell.relative_interior_point()
        fv = la.dot(sf, x0) + cf
        gv = la.dot(sg, x0) + cg
        take_f = fv >= gv if pick_max else fv <= gv
        data[cid] = (sf, cf) if take_f else (sg, cg)
    return PLFunction(f.carrier, data)


def pl_max(f: PLFunction, g: PLFunction) -> PLFunction:
    return _pl_select(f, g, True)


def pl_min(f: PLFunction, g: PLFunction) -> PLFunction:
    return _pl_select(f, g, False)


class PiecewiseForm:
    """A superform given cellwise on the top cells of a carrier complex."""

    def __init__(self, carrier: PolyComplex, cell_forms: dict, p: int, q: int):
        self.carrier = carrier
        self.p = p
        self.q = q
        self.cell_forms = {}
        n = carrier.ambient_dim
        for cid in carrier.maximal_cells:
            f = cell_forms.get(cid, Superform.zero(n, p, q))
            if f.p != p or f.q != q or f.n != n:
                raise DimensionMismatch("cell form has wrong shape")
            self.cell_forms[cid] = f

    @staticmethod
    def constant(carrier: PolyComplex, form: Superform) -> "PiecewiseForm":
        return PiecewiseForm(carrier,
                             {cid: form for cid in carrier.maximal_cells},
                             form.p, form.q)

    @staticmethod
    def zero(carrier: PolyComplex, p: int, q: int) -> "PiecewiseForm":
        return PiecewiseForm(carrier, {}, p, q)

    def _check(self, other):
        if self.carrier is not other.carrier:
            raise CarrierMismatch("piecewise forms on different carriers")

    def __add__(self, other):
        self._check(other)
        return PiecewiseForm(self.carrier, {
            cid: self.cell_forms[cid] + other.cell_forms[cid]
            for cid in self.cell_forms}, self.p, self.q)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return PiecewiseForm(self.carrier, {
            cid: f.scale(c) for cid, f in self.cell_forms.items()},
            self.p, self.q)

    def dprime(self):
        return PiecewiseForm(self.carrier, {
            cid: f.dprime() for cid, f in self.cell_forms.items()},
            self.p + 1, self.q)

    def dsecond(self):
        return PiecewiseForm(self.carrier, {
            cid: f.dsecond() for cid, f in self.cell_forms.items()},
            self.p, self.q + 1)

    def wedge(self, other):
        self._check(other)
        return PiecewiseForm(self.carrier, {
            cid: self.cell_forms[cid].wedge(other.cell_forms[cid])
            for cid in self.cell_forms}, self.p + other.p, self.q + other.q)

    def mul_pl(self, f: PLFunction):
        if f.carrier is not self.carrier:
            raise CarrierMismatch("PL factor on a different carrier")
        out = {}
        for cid, form in self.cell_forms.items():
            poly = f.as_polynomial(cid)
            out[cid] = Superform(form.n, form.p, form.q, {
                k: poly * g for k, g in form.terms.items()})
        return PiecewiseForm(self.carrier, out, self.p, self.q)

    def contract(self, v, kind: str, slot: int = 1):
        out = {cid: f.contract(v, kind, slot)
               for cid, f in self.cell_forms.items()}
        p = self.p - 1 if kind == "dprime" else self.p
        q = self.q if kind == "dprime" else self.q - 1
        return PiecewiseForm(self.carrier, out, p, q)

    def transfer(self, ref: Refinement) -> "PiecewiseForm":
        out = {}
        for cid in ref.complex.maximal_cells:
            src = ref.parents[cid]
            src = src[0] if isinstance(src, tuple) else src
            out[cid] = self.cell_forms[src]
        return PiecewiseForm(ref.complex, out, self.p, self.q)

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.cell_forms.values())

    def is_continuous(self) -> bool:
        """Coefficientwise agreement of neighbouring cells on shared faces."""
        from . import polyhedra as ph
        tops = self.carrier.maximal_cells
        for i, a in enumerate(tops):
            for b in tops[i + 1:]:
                cap = ph.intersect(self.carrier.cells[a],
                                   self.carrier.cells[b])
                if cap.is_empty or cap.dim < self.carrier.dim - 1:
                    continue
                diff = self.cell_forms[a] - self.cell_forms[b]
                for poly in diff.terms.values():
                    for v in cap.vertices:
                        if poly.eval(v) != 0:
                            return False
        return True


def align_piecewise(a: PiecewiseForm, b: PiecewiseForm):
    """Bring two piecewise forms onto a common refined carrier."""
    if a.carrier is b.carrier:
        return a, b
    from .complexes import refine
    ref = refine(a.carrier, b.carrier)
    tops = ref.complex.maximal_cells
    fa = PiecewiseForm(ref.complex,
                       {cid: a.cell_forms[ref.parents[cid][0]] for cid in tops
                        if cid in ref.parents},
                       a.p, a.q)
    fb = PiecewiseForm(ref.complex,
                       {cid: b.cell_forms[ref.parents[cid][1]] for cid in tops
                        if cid in ref.parents},
                       b.p, b.q)
    return fa, fb


def pl_partition_of_unity(cover, carrier: PolyComplex):
    """Exact PL partition of unity subordinate to a finite open cover.

    cover: list of Polyhedron, the closures of the open sets; the open
    interiors must jointly cover the carrier.  Returns PL functions
    rho_i >= 0 with sum rho_i = 1 on the carrier and supp rho_i strictly
    inside the i-th open set.
    """
    if not cover:
        raise NotACover("empty cover")
    n = carrier.ambient_dim

    def holds_on_carrier(a, b):
        # constraints valid on the whole carrier bound nothing relatively
        a = la.vec(a)
        for p in carrier.cells.values():
            if any(la.dot(a, la.vec(v)) > b for v in p.vertices):
                return False
            if any(la.dot(a, la.vec(r)) > 0 for r in p.rays):
                return False
            if any(la.dot(a, la.vec(l)) != 0 for l in p.lineality):
                return False
        return True

    # distance-like PL functions: d_i = min over facet slacks, clipped at 0
    dists = []
    for u in cover:
        eqs, ineqs = u.hrep
        if any(not holds_on_carrier(a, b) or not holds_on_carrier(la.neg(la.vec(a)), -b)
               for a, b in eqs):
            raise NotACover("cover sets must be full-dimensional in the carrier")
        d = None
        for a, b in ineqs:
            if holds_on_carrier(a, b):
                continue
            slack = PLFunction.linear(carrier, la.neg(la.vec(a)), b)
            d = slack if d is None else pl_min(d, slack)
        if d is None:
            d = PLFunction.constant(carrier, 1)
        d = pl_max(d, PLFunction.constant(carrier, 0))
        dists.append(d)
    # Lebesgue number: mu = min over support of max_i d_i
    big = dists[0]
    for d in dists[1:]:
        big = pl_max(big, d)
    mu = None
    for cid in big.carrier.maximal_cells:
        slope, const = big.data[cid]
        for v in big.carrier.cells[cid].vertices:
            val = la.dot(slope, la.vec(v)) + const
            mu = val if mu is None else min(mu, val)
    if mu is None or mu <= 0:
        raise NotACover("open interiors do not cover the complex")
    k = 1
    while Fraction(k) * mu < 2:
        k *= 2
    gs = []
    for d in dists:
        g = d.scale(k).shift(-1)
        g = pl_max(g, PLFunction.constant(g.carrier, 0))
        g = pl_min(g, PLFunction.constant(g.carrier, 1))
        gs.append(g)
    # rho_i = max(0, g_i - max(g_1..g_{i-1})); telescopes to max g = 1
    rhos = []
    running = None
    for g in gs:
        if running is None:
            rho = g
            running = g
        else:
            g2, run2 = align_pl(g, running)
            rho = pl_max(g2 - run2,
                         PLFunction.constant(g2.carrier, 0))
            running = pl_max(g2, run2)
        rhos.append(rho)
    rhos = list(align_pl(*rhos))
    return rhos
