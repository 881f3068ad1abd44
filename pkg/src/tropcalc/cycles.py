"""Weighted tropical cycles, balancing, degree, and tube models."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg as la
from .complexes import PolyComplex, face_lattice
from .errors import BadRange, UnboundedSupport, WrongDimension
from .polyhedra import Polyhedron


class WeightedCycle:
    """Pure-dimensional subcomplex with nonzero integer weights on top cells."""

    def __init__(self, support: PolyComplex, weights: dict):
        self.support = support
        self.weights = {int(c): int(w) for c, w in weights.items() if int(w) != 0}
        dims = {support.cells[c].dim for c in self.weights}
        if len(dims) > 1:
            raise WrongDimension("weighted cells of mixed dimension")
        self.dimension = dims.pop() if dims else -1

    @staticmethod
    def all_ones(support: PolyComplex) -> "WeightedCycle":
        return WeightedCycle(support, {c: 1 for c in support.top_cells()})

    def scale_weights(self, m: int) -> "WeightedCycle":
        return WeightedCycle(self.support, {c: m * w for c, w in self.weights.items()})


@dataclass
class BalanceReport:
    balanced: bool
    violations: list  # (codim-1 cell id, defect vector)
    boundary: list    # codim-1 cell ids with a single coface


def check_balanced(z: WeightedCycle) -> BalanceReport:
    """Weighted primitive normals around each interior codim-1 face must sum
    into the face's own lattice."""
    x = z.support
    d = z.dimension
    violations = []
    boundary = []
    for tau in x.cells_of_dim(d - 1):
        incs = [inc for inc in x.incidences
                if inc.child == tau and inc.parent in z.weights]
        if not incs:
            continue
        if len(incs) == 1:
            boundary.append(tau)
            continue
        total = la.zeros(x.ambient_dim)
        for inc in incs:
            u = x.incidence_normal(inc)
            total = la.add(total, la.scale(z.weights[inc.parent], la.vec(u)))
        tau_lattice = [la.vec(b) for b in x.cells[tau].lattice_basis]
        # the face lattice may sit elsewhere for glued cells; compare via the
        # first incidence's attachment image
        img = incs[0].attach.apply_poly(x.cells[tau])
        img_lattice = [la.vec(b) for b in img.lattice_basis]
        if not la.in_lattice(total, img_lattice or tau_lattice):
            violations.append((tau, la.to_int_vec(total)
                               if all(Fraction(t).denominator == 1 for t in total)
                               else tuple(total)))
    return BalanceReport(not violations, violations, boundary)


def degree(z: WeightedCycle) -> int:
    if z.weights and z.dimension != 0:
        raise WrongDimension("degree needs a zero-dimensional cycle")
    return sum(z.weights.values())


def product_polyhedron(a: Polyhedron, b: Polyhedron) -> Polyhedron:
    na, nb = a.ambient_dim, b.ambient_dim
    zero_a, zero_b = (0,) * na, (0,) * nb
    return Polyhedron.make(
        na + nb,
        vertices=[tuple(v) + tuple(w) for v in a.vertices for w in b.vertices],
        rays=[tuple(r) + zero_b for r in a.rays] +
             [zero_a + tuple(r) for r in b.rays],
        lineality=[tuple(l) + zero_b for l in a.lineality] +
                  [zero_a + tuple(l) for l in b.lineality])


@dataclass
class TubeModel:
    """P x [h,H]^q with its 2^q corner faces V^I (I: slots pinned at h)."""

    base: PolyComplex
    q: int
    h: Fraction
    H: Fraction
    m: int
    tube: PolyComplex = field(default=None)
    tube_base_parent: dict = field(default_factory=dict)
    corner_faces: dict = field(default_factory=dict)  # frozenset -> PolyComplex
    corner_base_parent: dict = field(default_factory=dict)

    @property
    def base_dim(self) -> int:
        return self.base.ambient_dim

    @property
    def ambient_dim(self) -> int:
        return self.base.ambient_dim + self.q

    def normal(self, slot: int):
        """Inward normal of the face {y_slot = h}, pointing into the tube."""
        return la.to_int_vec(la.unit(self.ambient_dim, self.base_dim + slot - 1))

    def face(self, subset) -> PolyComplex:
        return self.corner_faces[frozenset(subset)]

    @property
    def corner(self) -> PolyComplex:
        return self.corner_faces[frozenset(range(1, self.q + 1))]


def build_tube(base: PolyComplex, q: int, h, H, m: int) -> TubeModel:
    """Enumerate the tube complex and all corner faces of P x [h,H]^q."""
    h, H = Fraction(h), Fraction(H)
    if not H > h:
        raise BadRange("tube needs H > h")
    if any(not base.cells[c].is_bounded for c in base.maximal_cells):
        raise UnboundedSupport("tube base must be bounded")
    t = TubeModel(base, q, h, H, m)
    seg = Polyhedron.make(1, vertices=[(h,), (H,)])
    pt = Polyhedron.make(1, vertices=[(h,)])
    for pinned in _subsets(q):
        tops = []
        srcs = []
        for cid in base.maximal_cells:
            piece = base.cells[cid]
            for i in range(1, q + 1):
                piece = product_polyhedron(piece, pt if i in pinned else seg)
            tops.append(piece)
            srcs.append(cid)
        cplx = face_lattice(tops)
        parent = {}
        for piece, src in zip(tops, srcs):
            cid = cplx.find_cell(piece)
            if cid is None:
                from . import polyhedra as ph
                cid = cplx.find_cell(ph.canonicalize(piece))
            parent[cid] = src
        if pinned:
            t.corner_faces[frozenset(pinned)] = cplx
            t.corner_base_parent[frozenset(pinned)] = parent
        else:
            t.tube = cplx
            t.tube_base_parent = parent
            t.corner_faces[frozenset()] = cplx
            t.corner_base_parent[frozenset()] = parent
    return t


def _subsets(q: int):
    out = [[]]
    for i in range(1, q + 1):
        out = [s + t for s in out for t in ([], [i])]
    return [tuple(s) for s in out]
