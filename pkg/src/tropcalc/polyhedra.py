"""Rational polyhedra in V-representation, with exact face enumeration.

A polyhedron is conv(vertices) + cone(rays) + span(lineality).  The
H-representation is derived on demand by brute-force supporting-hyperplane
enumeration, which is exact and adequate at the small scales this library
targets (ambient dimension <= ~4, a handful of generators per cell).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from . import linalg as la
from .errors import NonComplex, Unbounded


@dataclass(frozen=True)
class Polyhedron:
    ambient_dim: int
    vertices: tuple = ()
    rays: tuple = ()
    lineality: tuple = ()

    @staticmethod
    def make(ambient_dim, vertices=(), rays=(), lineality=()):
        verts = tuple(sorted(set(la.vec(v) for v in vertices)))
        rys = tuple(sorted(set(la.primitive(r) for r in rays if not la.is_zero(la.vec(r)))))
        lin = tuple(la.saturated_lattice_basis([la.vec(l) for l in lineality], ambient_dim))
        return Polyhedron(ambient_dim, verts, rys, lin)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @cached_property
    def dim(self) -> int:
        if self.is_empty:
            return -1
        return la.rank(list(self.direction_generators()))

    def direction_generators(self):
        if self.is_empty:
            return []
        v0 = self.vertices[0]
        dirs = [la.sub(la.vec(v), v0) for v in self.vertices[1:]]
        dirs += [la.vec(r) for r in self.rays]
        dirs += [la.vec(l) for l in self.lineality]
        return [d for d in dirs if not la.is_zero(d)]

    @cached_property
    def lattice_basis(self) -> tuple:
        """Basis of L(sigma) cap Z^N, the saturated direction lattice."""
        return tuple(la.saturated_lattice_basis(self.direction_generators(),
                                                self.ambient_dim))

    @property
    def is_bounded(self) -> bool:
        return not self.rays and not self.lineality

    def key(self):
        return (self.ambient_dim, self.vertices, self.rays, self.lineality)

    @cached_property
    def hrep(self):
        """(equalities, inequalities) as lists of (a, b): a.x = b / a.x <= b.

        Normals are primitive integer vectors; the equalities cut out the
        affine hull.
        """
        if self.is_empty:
            return ([(tuple([0] * self.ambient_dim), Fraction(-1))], [])
        n = self.ambient_dim
        v0 = la.vec(self.vertices[0])
        span = self.lattice_basis
        # affine hull: a . x = a . v0 for a in the orthogonal complement
        complement = la.nullspace([la.vec(b) for b in span], n)
        eqs = []
        for c in complement:
            a = la.primitive(c)
            eqs.append((a, la.dot(la.vec(a), v0)))
        ineqs = [(a, b) for a, b in _facet_hyperplanes(self)]
        return (eqs, ineqs)

    def contains(self, x) -> bool:
        if self.is_empty:
            return False
        x = la.vec(x)
        eqs, ineqs = self.hrep
        return (all(la.dot(la.vec(a), x) == b for a, b in eqs)
                and all(la.dot(la.vec(a), x) <= b for a, b in ineqs))

    def relative_interior_point(self):
        """A deterministic rational point in the relative interior."""
        if self.is_empty:
            raise ValueError("empty polyhedron")
        p = la.zeros(self.ambient_dim)
        for v in self.vertices:
            p = la.add(p, la.vec(v))
        p = la.scale(Fraction(1, len(self.vertices)), p)
        for r in self.rays:
            p = la.add(p, la.scale(Fraction(1, 2), la.vec(r)))
        return p

    @cached_property
    def facets(self) -> tuple:
        """Codimension-one faces, in deterministic order."""
        out = []
        for a, b in self.hrep[1]:
            out.append(_tight_face(self, a, b))
        return tuple(sorted(set(out), key=lambda p: p.key()))

    def all_faces(self) -> list:
        """Every nonempty face, self included."""
        seen = {self.key(): self}
        frontier = [self]
        while frontier:
            nxt = []
            for f in frontier:
                for g in f.facets:
                    if g.key() not in seen:
                        seen[g.key()] = g
                        nxt.append(g)
            frontier = nxt
        return sorted(seen.values(), key=lambda p: (p.dim, p.key()))


def _facet_hyperplanes(p: Polyhedron):
    """Supporting hyperplanes of facets: (a, b) with p in {a.x <= b}."""
    n = p.ambient_dim
    d = p.dim
    if d <= 0:
        return []
    lin = [la.vec(l) for l in p.lineality]
    k = len(lin)
    verts = [la.vec(v) for v in p.vertices]
    rays = [la.vec(r) for r in p.rays]
    gens = [("v", v) for v in verts] + [("r", r) for r in rays]
    # the affine hull is cut out separately; a facet hyperplane satisfies
    # a . lin = 0 and is spanned inside the hull by d - k - 1 more directions
    need = d - k - 1
    found = {}
    for subset in combinations(range(len(gens)), need + 1):
        # unknowns (a, b); homogeneous system rows
        rows = []
        for l in lin:
            rows.append(tuple(l) + (Fraction(0),))
        kinds = [gens[i] for i in subset]
        if not any(t == "v" for t, _ in kinds):
            # every facet of a polyhedron with generators contains a vertex
            continue
        for t, g in kinds:
            if t == "v":
                rows.append(tuple(g) + (Fraction(-1),))
            else:
                rows.append(tuple(g) + (Fraction(0),))
        # restrict a to the direction span to avoid hull-parallel junk:
        # a = sum over span basis; substitute a = B^T y
        span = [la.vec(b) for b in p.lattice_basis]
        sub_rows = []
        for row in rows:
            a_part, b_part = row[:n], row[n]
            sub_rows.append(tuple(la.dot(a_part, bv) for bv in span) + (b_part,))
        sols = la.nullspace(sub_rows, d + 1)
        if len(sols) != 1:
            continue
        y, bcoef = sols[0][:d], sols[0][d]
        a = la.zeros(n)
        for yi, bv in zip(y, span):
            a = la.add(a, la.scale(yi, bv))
        if la.is_zero(a):
            continue
        b = bcoef
        # orient: all vertices on the <= side, rays nonpositive
        vals = [la.dot(a, v) - b for v in verts] + [la.dot(a, r) for r in rays]
        if all(x <= 0 for x in vals):
            pass
        elif all(x >= 0 for x in vals):
            a, b = la.neg(a), -b
        else:
            continue
        if all(x == 0 for x in vals):
            continue
        ap = la.primitive(a)
        scale = next(x for x, y0 in zip(a, ap) if y0 != 0) / next(
            y0 for y0 in ap if y0 != 0)
        bp = b / scale
        found[(ap, bp)] = True
    return sorted(found.keys())


def _tight_face(p: Polyhedron, a, b):
    a = la.vec(a)
    verts = [v for v in p.vertices if la.dot(a, la.vec(v)) == b]
    rays = [r for r in p.rays if la.dot(a, la.vec(r)) == 0]
    return Polyhedron.make(p.ambient_dim, verts, rays, p.lineality)


# ---------------------------------------------------------------------------
# H-representation -> V-representation


def from_hrep(n: int, eqs, ineqs) -> Polyhedron:
    """Vertex/ray enumeration from constraints, exact brute force."""
    eqs = [(la.vec(a), Fraction(b)) for a, b in eqs]
    ineqs = [(la.vec(a), Fraction(b)) for a, b in ineqs]
    normals = [a for a, _ in eqs] + [a for a, _ in ineqs]
    lin = la.nullspace([tuple(a) for a in normals], n)
    lin_basis = la.saturated_lattice_basis(lin, n)
    # quotient by the lineality space: work in complement coordinates
    if lin_basis:
        proj = la.int_kernel([list(b) for b in lin_basis], n)  # functionals
        # proj rows: Z^n -> Z^m surjective; section: solve for preimages
        m = len(proj)
        proj_rows = [la.vec(r) for r in proj]
        sect_cols = []
        for i in range(m):
            target = la.unit(m, i)
            s = la.solve([la.vec(tuple(r[j] for r in proj)) for j in range(n)],
                         target)
            # s has length n: solve sum_j x_j * proj-column_j = e_i, i.e.
            # proj @ x = e_i
            sect_cols.append(s)
        def push(x):
            return tuple(la.dot(r, x) for r in proj_rows)
        def lift(t):
            x = la.zeros(n)
            for ti, s in zip(t, sect_cols):
                x = la.add(x, la.scale(ti, s))
            return x
        q_eqs = [(push_normal(a, lift, m), b) for a, b in eqs]
        q_ineqs = [(push_normal(a, lift, m), b) for a, b in ineqs]
        inner = from_hrep(m, q_eqs, q_ineqs)
        if inner.is_empty:
            return Polyhedron.make(n)
        return Polyhedron.make(
            n,
            vertices=[lift(la.vec(v)) for v in inner.vertices],
            rays=[lift(la.vec(r)) for r in inner.rays],
            lineality=lin_basis,
        )
    constraints = [(a, b, True) for a, b in eqs] + [(a, b, False) for a, b in ineqs]

    def satisfies(x):
        for a, b, is_eq in constraints:
            v = la.dot(a, x)
            if is_eq and v != b:
                return False
            if not is_eq and v > b:
                return False
        return True

    verts = set()
    idx = range(len(constraints))
    forced = [i for i in idx if constraints[i][2]]
    free = [i for i in idx if not constraints[i][2]]
    forced_rank = la.rank([tuple(constraints[i][0]) for i in forced])
    for extra in combinations(free, max(0, n - forced_rank)):
        chosen = forced + list(extra)
        rows = [tuple(constraints[i][0]) + (constraints[i][1],) for i in chosen]
        red, pivots = la.rref(rows)
        if len(red) != n or n in pivots:
            continue
        x = [Fraction(0)] * n
        for row, pcol in zip(red, pivots):
            x[pcol] = row[-1]
        x = tuple(x)
        if satisfies(x):
            verts.add(x)
    if not verts:
        return Polyhedron.make(n)
    rays = set()
    hom = [(a, True) for a, _, e in constraints if e] + \
          [(a, False) for a, _, e in constraints if not e]

    def ray_ok(r):
        return all(la.dot(a, r) == 0 if e else la.dot(a, r) <= 0 for a, e in hom)

    forced_h = [a for a, e in hom if e]
    free_h = [a for a, e in hom if not e]
    forced_h_rank = la.rank([tuple(a) for a in forced_h])
    for extra in combinations(range(len(free_h)), max(0, n - 1 - forced_h_rank)):
        rows = [tuple(a) for a in forced_h] + [tuple(free_h[i]) for i in extra]
        ker = la.nullspace(rows, n)
        if len(ker) != 1:
            continue
        r = la.primitive(ker[0])
        for cand in (r, la.neg(la.vec(r))):
            if ray_ok(la.vec(cand)):
                rays.add(la.primitive(cand))
    return Polyhedron.make(n, vertices=verts, rays=rays)


def push_normal(a, lift, m):
    """Express a constraint normal in quotient coordinates."""
    return tuple(la.dot(la.vec(a), lift(la.unit(m, i))) for i in range(m))


def canonicalize(p: Polyhedron) -> Polyhedron:
    """Extremal V-representation (drops non-extremal generators)."""
    if p.is_empty:
        return Polyhedron.make(p.ambient_dim)
    eqs, ineqs = p.hrep
    return from_hrep(p.ambient_dim, eqs, ineqs)


def intersect(p: Polyhedron, q: Polyhedron) -> Polyhedron:
    if p.ambient_dim != q.ambient_dim:
        raise NonComplex("ambient dimension mismatch")
    if p.is_empty or q.is_empty:
        return Polyhedron.make(p.ambient_dim)
    pe, pi = p.hrep
    qe, qi = q.hrep
    return from_hrep(p.ambient_dim, pe + qe, pi + qi)


def decompose_simplices(p: Polyhedron) -> list:
    """Partition a polytope into simplices (pulling triangulation).

    Returns a list of vertex tuples (v0, ..., vd), each a d-simplex; the
    pieces cover p and overlap only in measure zero.
    """
    if not p.is_bounded:
        raise Unbounded("cannot triangulate an unbounded polyhedron")
    if p.is_empty:
        return []
    p = canonicalize(p)
    d = p.dim
    if len(p.vertices) == d + 1:
        return [tuple(p.vertices)]
    apex = p.vertices[0]  # deterministic: lexicographically smallest
    simplices = []
    for f in p.facets:
        if apex in f.vertices:
            continue
        for s in decompose_simplices(f):
            simplices.append((apex,) + s)
    return simplices
