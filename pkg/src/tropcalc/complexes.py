"""Rational polyhedral complexes with face incidences and cell lattices.

Two flavours share one type.  Embedded complexes live in Q^N and their
incidences are geometric inclusions.  Glued complexes also carry model
polyhedra per cell, but a face may be attached to a parent along a
nontrivial integral-affine map (several times, with signs), which is how
quotients such as tori are hosted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import linalg as la
from . import polyhedra as ph
from .errors import NonComplex, NotAFacet
from .polyhedra import Polyhedron


@dataclass(frozen=True)
class AffineMap:
    """x |-> A x + b with integral A, mapping child coords to parent coords."""

    matrix: tuple  # rows
    shift: tuple

    @staticmethod
    def identity(n: int) -> "AffineMap":
        return AffineMap(tuple(tuple(1 if i == j else 0 for j in range(n))
                               for i in range(n)),
                         tuple(Fraction(0) for _ in range(n)))

    @staticmethod
    def translation(b) -> "AffineMap":
        b = la.vec(b)
        return AffineMap(AffineMap.identity(len(b)).matrix, b)

    @staticmethod
    def make(matrix, shift) -> "AffineMap":
        return AffineMap(tuple(tuple(Fraction(e) for e in row) for row in matrix),
                         la.vec(shift))

    def apply(self, x):
        return la.add(la.matvec(self.matrix, la.vec(x)), self.shift)

    def apply_dir(self, v):
        return la.matvec(self.matrix, la.vec(v))

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """self o inner."""
        m = la.matmul(self.matrix, inner.matrix)
        return AffineMap(m, la.add(la.matvec(self.matrix, inner.shift), self.shift))

    def apply_poly(self, p: Polyhedron) -> Polyhedron:
        return Polyhedron.make(len(self.shift),
                               vertices=[self.apply(v) for v in p.vertices],
                               rays=[self.apply_dir(r) for r in p.rays],
                               lineality=[self.apply_dir(l) for l in p.lineality])


@dataclass(frozen=True)
class Incidence:
    child: int
    parent: int
    sign: int
    attach: AffineMap


class PolyComplex:
    """Finite complex of rational polyhedra, closed under faces."""

    def __init__(self, cells: dict, incidences: list, mode: str = "embedded"):
        self.mode = mode
        self.cells = dict(cells)
        self.incidences = list(incidences)
        if cells:
            dims = {p.ambient_dim for p in cells.values()}
            if mode == "embedded" and len(dims) != 1:
                raise NonComplex("mixed ambient dimensions")
        self._normal_cache = {}

    # -- basic queries ------------------------------------------------------

    @cached_property
    def ambient_dim(self) -> int:
        return next(iter(self.cells.values())).ambient_dim if self.cells else 0

    @cached_property
    def dim(self) -> int:
        return max((p.dim for p in self.cells.values()), default=-1)

    def cells_of_dim(self, d: int) -> list:
        return sorted(cid for cid, p in self.cells.items() if p.dim == d)

    @cached_property
    def maximal_cells(self) -> list:
        children = {inc.child for inc in self.incidences}
        return sorted(cid for cid in self.cells if cid not in children)

    def top_cells(self) -> list:
        return self.cells_of_dim(self.dim)

    def facet_incidences_of(self, parent: int) -> list:
        return [inc for inc in self.incidences if inc.parent == parent]

    def coface_incidences_of(self, child: int) -> list:
        return [inc for inc in self.incidences if inc.child == child]

    @cached_property
    def coface_closure(self) -> dict:
        """cell -> list of (coface cell, AffineMap child->coface), reflexive."""
        out = {}
        for cid, p in self.cells.items():
            found = {(cid,): (cid, AffineMap.identity(p.ambient_dim))}
            frontier = [(cid, AffineMap.identity(p.ambient_dim))]
            acc = [(cid, AffineMap.identity(p.ambient_dim))]
            while frontier:
                nxt = []
                for cur, amap in frontier:
                    for inc in self.coface_incidences_of(cur):
                        comp = inc.attach.compose(amap)
                        key = (inc.parent, comp.matrix, comp.shift)
                        if key not in found:
                            found[key] = True
                            nxt.append((inc.parent, comp))
                            acc.append((inc.parent, comp))
                frontier = nxt
            out[cid] = acc
        return out

    def euler_characteristic(self) -> int:
        return sum((-1) ** p.dim for p in self.cells.values())

    def span_lattice(self, cid: int) -> tuple:
        """Basis of L_Z(cell) in the cell's model coordinates."""
        return self.cells[cid].lattice_basis

    # -- incidence geometry -------------------------------------------------

    def primitive_normal(self, child: int, parent: int):
        """Canonical inward primitive normal of a facet, spec convention."""
        incs = [i for i in self.incidences
                if i.child == child and i.parent == parent]
        if not incs:
            raise NotAFacet(f"{child} is not a facet of {parent}")
        return self.incidence_normal(incs[0])

    def incidence_normal(self, inc: Incidence):
        """Inward primitive normal for one incidence, in parent coordinates.

        Canonical representative: reduced modulo a Hermite basis of the
        facet's lattice.
        """
        key = (inc.child, inc.parent, inc.attach.matrix, inc.attach.shift)
        if key in self._normal_cache:
            return self._normal_cache[key]
        sigma = self.cells[inc.parent]
        tau_model = self.cells[inc.child]
        face_img = inc.attach.apply_poly(tau_model)
        if face_img.dim != sigma.dim - 1:
            raise NotAFacet("attached cell is not codimension one")
        u = _inward_primitive_normal(sigma, face_img)
        self._normal_cache[key] = u
        return u

    def incidence_sign(self, inc_or_pair) -> int:
        if isinstance(inc_or_pair, Incidence):
            return inc_or_pair.sign
        child, parent = inc_or_pair
        for inc in self.incidences:
            if inc.child == child and inc.parent == parent:
                return inc.sign
        raise NotAFacet(f"{child} is not a facet of {parent}")

    def net_incidence(self, child: int, parent: int) -> int:
        return sum(i.sign for i in self.incidences
                   if i.child == child and i.parent == parent)

    # -- construction helpers ----------------------------------------------

    def find_cell(self, poly: Polyhedron):
        k = poly.key()
        for cid, p in self.cells.items():
            if p.key() == k:
                return cid
        return None

    def with_weights(self, weights):
        from .cycles import WeightedCycle
        return WeightedCycle(self, dict(weights))


def _inward_primitive_normal(sigma: Polyhedron, face: Polyhedron):
    """Inward primitive lattice normal of a facet, canonical mod L_Z(face)."""
    b_sigma = [la.vec(b) for b in sigma.lattice_basis]
    d = len(b_sigma)
    coords = []
    for b in face.lattice_basis:
        x = la.solve(b_sigma, la.vec(b))
        if x is None:
            raise NotAFacet("facet lattice not inside cell lattice")
        coords.append(la.to_int_vec(x))
    if coords:
        phi_basis = la.int_kernel([list(c) for c in coords], d)
    else:
        phi_basis = [tuple(1 if i == 0 else 0 for i in range(d))]
    if len(phi_basis) != 1:
        raise NotAFacet("face is not codimension one in the cell")
    phi = phi_basis[0]
    u = list(la.solve_int_unit(phi, 1))
    # orient inward
    w = la.sub(sigma.relative_interior_point(), face.relative_interior_point())
    wc = la.solve(b_sigma, w)
    s = la.dot(la.vec(phi), wc)
    if s == 0:
        raise NotAFacet("degenerate facet orientation")
    if s < 0:
        u = [-x for x in u]
    # canonical representative: reduce modulo HNF of the facet lattice
    if coords:
        a_rows = [[c[r] for c in coords] for r in range(d)]  # columns = coords
        h, _ = la.hnf_col(a_rows, len(coords))
        pivots = []
        for j in range(len(coords)):
            r = next((r for r in range(d) if h[r][j] != 0), None)
            if r is not None:
                pivots.append((r, j))
        for r, j in pivots:
            q = u[r] // h[r][j]
            if q:
                for rr in range(d):
                    u[rr] -= q * h[rr][j]
    out = la.zeros(sigma.ambient_dim)
    for ui, b in zip(u, b_sigma):
        out = la.add(out, la.scale(ui, b))
    return la.to_int_vec(out)


def _orientation_sign(sigma: Polyhedron, face: Polyhedron, normal) -> int:
    """Incidence sign: does [outward normal, face basis] match sigma's basis."""
    b_sigma = [la.vec(b) for b in sigma.lattice_basis]
    cols = [la.solve(b_sigma, la.neg(la.vec(normal)))]
    for b in face.lattice_basis:
        cols.append(la.solve(b_sigma, la.vec(b)))
    m = tuple(tuple(col[i] for col in cols) for i in range(len(b_sigma)))
    dt = la.det(m)
    return 1 if dt > 0 else -1


def face_lattice(maximal_cells) -> PolyComplex:
    """Closure of the given cells under faces, with incidence signs.

    Raises NonComplex unless any two cells intersect in a common face.
    """
    maxs = [ph.canonicalize(p) for p in maximal_cells]
    maxs = [p for p in maxs if not p.is_empty]
    if not maxs:
        return PolyComplex({}, [])
    n = maxs[0].ambient_dim
    if any(p.ambient_dim != n for p in maxs):
        raise NonComplex("mixed ambient dimensions")
    face_sets = []
    for p in maxs:
        face_sets.append({f.key(): f for f in p.all_faces()})
    for i in range(len(maxs)):
        for j in range(i + 1, len(maxs)):
            cap = ph.intersect(maxs[i], maxs[j])
            if cap.is_empty:
                continue
            if cap.key() not in face_sets[i] or cap.key() not in face_sets[j]:
                raise NonComplex(
                    f"cells {i} and {j} intersect in a non-face")
    all_faces = {}
    for fs in face_sets:
        all_faces.update(fs)
    ordered = sorted(all_faces.values(), key=lambda p: (p.dim, p.key()))
    ids = {p.key(): i for i, p in enumerate(ordered)}
    cells = {i: p for i, p in enumerate(ordered)}
    incidences = []
    for cid, p in cells.items():
        for f in p.facets:
            tid = ids[f.key()]
            u = _inward_primitive_normal(p, f)
            sign = _orientation_sign(p, f, u)
            incidences.append(Incidence(tid, cid, sign, AffineMap.identity(n)))
    return PolyComplex(cells, incidences)


def glued_complex(model_cells, attachments) -> PolyComplex:
    """Build a glued complex from models and attachment maps.

    model_cells: dict id -> Polyhedron.  attachments: list of
    (child, parent, AffineMap).  Signs are derived from orientations.
    """
    incidences = []
    for child, parent, amap in attachments:
        sigma = model_cells[parent]
        img = amap.apply_poly(model_cells[child])
        u = _inward_primitive_normal(sigma, img)
        sign = _orientation_sign(sigma, img, u)
        incidences.append(Incidence(child, parent, sign, amap))
    return PolyComplex(dict(model_cells), incidences, mode="glued")


# -- refinement -------------------------------------------------------------


class Refinement:
    """A complex refining another, with parent references per top cell."""

    def __init__(self, complex_: PolyComplex, parents: dict):
        self.complex = complex_
        self.parents = parents  # top cell id -> tuple of source top cell ids


def _contained(p: Polyhedron, q: Polyhedron) -> bool:
    if not all(q.contains(v) for v in p.vertices):
        return False
    qe, qi = q.hrep
    for r in p.rays:
        r = la.vec(r)
        if not all(la.dot(la.vec(a), r) == 0 for a, _ in qe):
            return False
        if not all(la.dot(la.vec(a), r) <= 0 for a, _ in qi):
            return False
    for l in p.lineality:
        l = la.vec(l)
        if not all(la.dot(la.vec(a), l) == 0 for a, _ in qe + qi):
            return False
    return True


def refine(x: PolyComplex, y: PolyComplex) -> Refinement:
    """Common refinement of two embedded complexes on the same support."""
    if x.mode != "embedded" or y.mode != "embedded":
        raise NonComplex("refine requires embedded complexes")
    if x.ambient_dim != y.ambient_dim:
        raise NonComplex("ambient dimension mismatch")
    pieces = []
    for cx in x.maximal_cells:
        for cy in y.maximal_cells:
            cap = ph.intersect(x.cells[cx], y.cells[cy])
            if not cap.is_empty:
                pieces.append((cap, (cx, cy)))
    keep = []
    for i, (p, src) in enumerate(pieces):
        if any(j != i and _contained(p, q) and p.key() != q.key()
               for j, (q, _) in enumerate(pieces)):
            continue
        if any(p.key() == q.key() for q, _ in pieces[:i]):
            continue
        keep.append((p, src))
    out = face_lattice([p for p, _ in keep])
    parents = {}
    for p, src in keep:
        cid = out.find_cell(ph.canonicalize(p))
        if cid is not None:
            parents[cid] = src
    return Refinement(out, parents)


def refine_by_hyperplanes(x: PolyComplex, hyperplanes) -> Refinement:
    """Cut every top cell of x along the hyperplanes {a . v = b}.

    Returns a Refinement whose parents map top cells to the source top
    cell id.
    """
    pieces = []
    for cid in x.maximal_cells:
        parts = [x.cells[cid]]
        for a, b in hyperplanes:
            a = la.vec(a)
            b = Fraction(b)
            nxt = []
            for p in parts:
                eqs, ineqs = p.hrep
                lo = ph.from_hrep(p.ambient_dim, eqs, ineqs + [(a, b)])
                hi = ph.from_hrep(p.ambient_dim, eqs,
                                  ineqs + [(la.neg(a), -b)])
                for piece in (lo, hi):
                    if not piece.is_empty and piece.dim == p.dim:
                        nxt.append(piece)
            parts = nxt
        for p in parts:
            pieces.append((p, cid))
    out = face_lattice([p for p, _ in pieces])
    parents = {}
    for p, src in pieces:
        cid = out.find_cell(ph.canonicalize(p))
        if cid is not None:
            parents[cid] = src
    return Refinement(out, parents)


# -- canned model complexes --------------------------------------------------


def point_complex(coords=((0,),)) -> PolyComplex:
    return face_lattice([Polyhedron.make(len(coords[0]), vertices=[c])
                         for c in coords])


def interval_complex(a, b) -> PolyComplex:
    return face_lattice([Polyhedron.make(1, vertices=[(a,), (b,)])])


def box_complex(lo, hi, n: int) -> PolyComplex:
    """The box [lo, hi]^n as a single top cell with its faces."""
    verts = [[]]
    for _ in range(n):
        verts = [v + [c] for v in verts for c in (lo, hi)]
    return face_lattice([Polyhedron.make(n, vertices=verts)])


def circle_complex() -> PolyComplex:
    """Q/Z: one vertex, one edge glued at both ends."""
    v = Polyhedron.make(1, vertices=[(0,)])
    e = Polyhedron.make(1, vertices=[(0,), (1,)])
    cells = {0: v, 1: e}
    att = [(0, 1, AffineMap.identity(1)),
           (0, 1, AffineMap.translation((1,)))]
    return glued_complex(cells, att)


def torus_complex() -> PolyComplex:
    """Q^2/Z^2: one vertex, two edges, one square."""
    v = Polyhedron.make(2, vertices=[(0, 0)])
    e1 = Polyhedron.make(2, vertices=[(0, 0), (1, 0)])
    e2 = Polyhedron.make(2, vertices=[(0, 0), (0, 1)])
    sq = Polyhedron.make(2, vertices=[(0, 0), (1, 0), (0, 1), (1, 1)])
    cells = {0: v, 1: e1, 2: e2, 3: sq}
    ident = AffineMap.identity(2)
    att = [
        (0, 1, ident), (0, 1, AffineMap.translation((1, 0))),
        (0, 2, ident), (0, 2, AffineMap.translation((0, 1))),
        (1, 3, ident), (1, 3, AffineMap.translation((0, 1))),
        (2, 3, ident), (2, 3, AffineMap.translation((1, 0))),
    ]
    return glued_complex(cells, att)
