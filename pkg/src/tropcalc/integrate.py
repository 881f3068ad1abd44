"""Exact lattice-normalized integration, boundary integrals, and Stokes.

Conventions (one consistent sign set, used throughout):

  * a cell of dimension d is parametrized as x = x0 + B t where the
    columns of B are a Z-basis of its saturated direction lattice; the
    integral of a (d,d)-form is the Lebesgue integral of the pulled-back
    coefficient in t-space (no extra Jacobian: the lattice normalization
    is the basis choice, and det^2 makes the value basis-independent);
  * the boundary integral of a (d,d-1)-form contracts minus the inward
    primitive normal into the last d' slot, and Stokes reads
    int_sigma d''a = -int_{boundary sigma} a, in every dimension;
  * a tube face V^I is integrated by iterating that same boundary
    contraction <. ; -e_i> (slot-last, e_i the inward tube normals) in
    decreasing order of i — this and only this ordering makes the
    iterated formula below hold with the stated signs at every level;
  * the Cech sign (-1)^(j,J) counts the 1-based position of j in J from
    the rear, and iterated Stokes on a face reads
    int_{V^I} d''a = sum_{j not in I} (-1)^(j,I+j) int_{V^{I+j}} a;
  * the corner pairing divides out the orientation factor (-1)^(q(d+1))
    left over from those conventions, so that the pairing of a weight-m
    tube class with a pulled-back d''-closed omega is +m * int_P omega.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from . import polyhedra as ph
from .complexes import PolyComplex, face_lattice, refine
from .cycles import TubeModel, WeightedCycle
from .errors import (BidegreeMismatch, CarrierMismatch, DimensionMismatch,
                     NotPulledBack, UnboundedSupport)
from .forms import (PiecewiseForm, Polynomial, Superform, align_piecewise,
                    simplex_monomial_integral)
from .polyhedra import Polyhedron


@dataclass
class IntegralResult:
    value: Fraction
    cells: dict  # support top cell id -> contribution


def integrate_cell(form: Superform, cell: Polyhedron) -> Fraction:
    """Lattice-normalized integral of a (d,d)-form over one d-cell."""
    d = cell.dim
    if form.p != d or form.q != d:
        raise BidegreeMismatch(f"({form.p},{form.q})-form on a {d}-cell")
    if form.n != cell.ambient_dim:
        raise DimensionMismatch("form and cell ambient dimensions differ")
    x0 = la.vec(cell.vertices[0])
    basis = [la.vec(b) for b in cell.lattice_basis]
    matrix = tuple(tuple(b[i] for b in basis)
                   for i in range(cell.ambient_dim))
    pulled = form.pullback(matrix, x0)
    g = pulled.terms.get((tuple(range(d)), tuple(range(d))))
    if g is None or g.is_zero():
        return Fraction(0)
    if not cell.is_bounded:
        raise UnboundedSupport("nonzero integrand on an unbounded cell")
    t_verts = [la.solve(basis, la.sub(la.vec(v), x0)) for v in cell.vertices]
    param = Polyhedron.make(d, vertices=t_verts)
    total = Fraction(0)
    for simplex in ph.decompose_simplices(param):
        w0 = la.vec(simplex[0])
        cols = [la.sub(la.vec(w), w0) for w in simplex[1:]]
        mmat = tuple(tuple(c[i] for c in cols) for i in range(d))
        jac = abs(la.det(mmat))
        if d and jac == 0:
            continue
        gs = g.compose_affine(mmat, w0)
        total += jac * sum((c * simplex_monomial_integral(e)
                            for e, c in gs.coeffs.items()), Fraction(0))
    return total


def integrate(alpha: PiecewiseForm, z) -> IntegralResult:
    """Integral of a piecewise (d,d)-form over a weighted d-cycle."""
    if isinstance(z, PolyComplex):
        z = WeightedCycle.all_ones(z)
    d = z.dimension
    if z.weights and (alpha.p != d or alpha.q != d):
        raise BidegreeMismatch(
            f"({alpha.p},{alpha.q})-form on a {d}-dimensional cycle")
    breakdown = {c: Fraction(0) for c in z.weights}
    direct = (alpha.carrier is z.support
              or all(c in alpha.cell_forms for c in z.weights))
    if z.support.mode == "glued" or alpha.carrier.mode == "glued":
        if not direct:
            raise CarrierMismatch("glued integration needs matching carriers")
    if direct:
        for cid, w in z.weights.items():
            breakdown[cid] += w * integrate_cell(alpha.cell_forms[cid],
                                                 z.support.cells[cid])
    else:
        if alpha.carrier.ambient_dim != z.support.ambient_dim:
            raise DimensionMismatch("carrier and support ambient mismatch")
        ref = refine(alpha.carrier, z.support)
        for cid, (cx, cy) in ref.parents.items():
            piece = ref.complex.cells[cid]
            if piece.dim != d or cy not in z.weights:
                continue
            breakdown[cy] += z.weights[cy] * integrate_cell(
                alpha.cell_forms[cx], piece)
    value = sum(breakdown.values(), Fraction(0))
    return IntegralResult(value, breakdown)


def boundary_integral(alpha: PiecewiseForm, region) -> IntegralResult:
    """Integral over the outer boundary facets of a region.

    A facet counts as outer when it has exactly one top-cell coface; the
    integrand is alpha contracted with minus the inward normal.
    """
    if isinstance(region, Polyhedron):
        region = face_lattice([region])
    d = region.dim
    if alpha.p != d or alpha.q != d - 1:
        raise BidegreeMismatch(
            f"({alpha.p},{alpha.q})-form on the boundary of a {d}-region")
    tops = set(region.top_cells())
    breakdown = {}
    for tau in region.cells_of_dim(d - 1):
        incs = [inc for inc in region.incidences
                if inc.child == tau and inc.parent in tops]
        if len(incs) != 1:
            continue
        inc = incs[0]
        nu = region.incidence_normal(inc)
        img = inc.attach.apply_poly(region.cells[tau])
        if region.mode == "glued":
            if alpha.carrier is not region:
                raise CarrierMismatch("glued boundary needs matching carrier")
            beta = alpha.cell_forms[inc.parent].contract(
                la.neg(la.vec(nu)), "dprime", alpha.p)
            val = integrate_cell(beta, img)
        else:
            beta = alpha.contract(la.neg(la.vec(nu)), "dprime", alpha.p)
            val = integrate(beta, face_lattice([img])).value
        breakdown[tau] = breakdown.get(tau, Fraction(0)) + val
    value = sum(breakdown.values(), Fraction(0))
    return IntegralResult(value, breakdown)


def stokes_verify(alpha: PiecewiseForm, region) -> Fraction:
    """Residual of int d''alpha + int_boundary alpha; zero iff Stokes holds."""
    if isinstance(region, Polyhedron):
        region = face_lattice([region])
    return (integrate(alpha.dsecond(), region).value
            + boundary_integral(alpha, region).value)


# ---------------------------------------------------------------------------
# tube faces


def cech_sign(j: int, subset) -> int:
    """(-1)^(j,J): 1-based position of j in sorted J, counted from the rear."""
    s = sorted(subset)
    return (-1) ** (len(s) - s.index(j))


def face_integral(face: PolyComplex, alpha: PiecewiseForm, normals) -> Fraction:
    """Integrate over a face, contracting -normals slot-last, largest first.

    The normals are passed in increasing coordinate order, as listed by
    the tube model; they are consumed from the rear.
    """
    beta = alpha
    for nu in reversed(list(normals)):
        beta = beta.contract(la.neg(la.vec(nu)), "dprime", beta.p)
    return integrate(beta, face).value


def stokes_face_residual(t: TubeModel, alpha: PiecewiseForm, subset) -> Fraction:
    """Residual of iterated Stokes on the tube face V^I.

    Zero for forms vanishing near the non-corner parts of the face
    boundary:  int_{V^I} d''a = sum_j (-1)^(j,I+j) int_{V^{I+j}} a.
    """
    subset = tuple(sorted(subset))
    lhs = face_integral(t.face(subset), alpha.dsecond(),
                        [t.normal(i) for i in subset])
    rhs = Fraction(0)
    for j in range(1, t.q + 1):
        if j in subset:
            continue
        bigger = tuple(sorted(subset + (j,)))
        rhs += cech_sign(j, bigger) * face_integral(
            t.face(bigger), alpha, [t.normal(i) for i in bigger])
    return lhs - rhs


def extend_to_tube(omega: PiecewiseForm, t: TubeModel) -> PiecewiseForm:
    """Pull a form on the base back to the tube (constant in tube coords)."""
    nb, n = t.base_dim, t.ambient_dim
    if omega.carrier.ambient_dim == n:
        for f in omega.cell_forms.values():
            for (i_idx, j_idx), poly in f.terms.items():
                if any(i >= nb for i in i_idx + j_idx):
                    raise NotPulledBack("form uses tube-direction indices")
                if any(any(e[nb:]) for e in poly.coeffs):
                    raise NotPulledBack("coefficients vary in tube directions")
        return omega
    if omega.carrier is t.base:
        base_form = dict(omega.cell_forms)
    else:
        # match the base top cells geometrically against omega's carrier
        lookup = {ph.canonicalize(omega.carrier.cells[c]).key(): c
                  for c in omega.carrier.top_cells()}
        base_form = {}
        for bid in t.base.top_cells():
            cid = lookup.get(ph.canonicalize(t.base.cells[bid]).key())
            if cid is None:
                raise CarrierMismatch("expected a form on the tube base")
            base_form[bid] = omega.cell_forms[cid]
    out = {}
    for tid, bid in t.tube_base_parent.items():
        out[tid] = _embed_form(base_form[bid], n)
    return PiecewiseForm(t.tube, out, omega.p, omega.q)


def _embed_form(f: Superform, n: int) -> Superform:
    pad = n - f.n
    return Superform(n, f.p, f.q, {
        key: Polynomial(n, {e + (0,) * pad: c for e, c in poly.coeffs.items()})
        for key, poly in f.terms.items()})


def pairing_sign(t: TubeModel) -> int:
    """Orientation normalization (-1)^(q(d+1)) of the corner pairing.

    With d the dimension of the base cycle: sorting theta ^ omega into
    canonical index order costs (-1)^(q d) and the q slot-last
    contractions cost (-1)^q; dividing both out makes the corner
    pairing equal +m * int_P omega.
    """
    return -1 if (t.q * (t.base.dim + 1)) % 2 else 1


def tube_pairing(t: TubeModel, theta0: PiecewiseForm,
                 omega: PiecewiseForm) -> Fraction:
    """Corner pairing m * int_{V^{1..q}} <theta0 ^ omega; e_1, ..., e_q>."""
    omega_t = extend_to_tube(omega, t)
    a, b = align_piecewise(theta0, omega_t)
    integrand = a.wedge(b)
    full = tuple(range(1, t.q + 1))
    return t.m * pairing_sign(t) * face_integral(
        t.corner, integrand, [t.normal(i) for i in full])
