"""Cellular Dolbeault cohomology, Cech zig-zag, cycle classes, pairing."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg as la
from . import polyhedra as ph
from .complexes import PolyComplex, face_lattice, refine_by_hyperplanes
from .cycles import TubeModel
from .errors import Mismatch, NoPartition, NotACover
from .forms import (PiecewiseForm, PLFunction, Superform, align_piecewise,
                    pl_partition_of_unity)
from .integrate import (cech_sign, extend_to_tube, face_integral, integrate,
                        pairing_sign)
from .milnor import Symbol, tau


# ---------------------------------------------------------------------------
# cellular cohomology


def _wedge_coords(vectors, n: int, p: int):
    """Pluecker coordinates of v_1 ^ ... ^ v_p over C(n,p) index sets."""
    out = []
    for k_idx in combinations(range(n), p):
        m = tuple(tuple(v[k] for k in k_idx) for v in vectors)
        out.append(la.det(m) if p else Fraction(1))
    return tuple(out)


def coefficient_space(x: PolyComplex, sigma: int, p: int):
    """Basis of F_p(sigma) = sum over cofaces tau of wedge^p L(tau)."""
    n = x.ambient_dim
    rows = []
    for tau, amap in x.coface_closure[sigma]:
        dirs = []
        a_cols = [la.vec(col) for col in la.transpose(amap.matrix)]
        for b in x.cells[tau].lattice_basis:
            d = la.solve(a_cols, la.vec(b))
            if d is None:
                raise Mismatch("non-invertible attachment matrix")
            dirs.append(d)
        for sub in combinations(dirs, p):
            w = _wedge_coords(sub, n, p)
            if not la.is_zero(w):
                rows.append(w)
    if p == 0:
        rows = [(Fraction(1),)]
    basis, _ = la.rref(rows)
    return basis


def hpq(x: PolyComplex, p: int) -> list:
    """Exact dims of H^{p,q} for q = 0..dim X, via the cellular model."""
    n = x.ambient_dim
    bases = {cid: coefficient_space(x, cid, p) for cid in x.cells}
    labels = {}   # q -> list of (cell, basis index)
    for q in range(x.dim + 1):
        labels[q] = [(cid, a) for cid in x.cells_of_dim(q)
                     for a in range(len(bases[cid]))]
    pos = {q: {lab: i for i, lab in enumerate(labels[q])}
           for q in labels}
    deltas = {}
    for q in range(x.dim):
        nrows = len(labels[q + 1])
        ncols = len(labels[q])
        m = [[Fraction(0)] * ncols for _ in range(nrows)]
        for inc in x.incidences:
            tau, sig = inc.child, inc.parent
            if x.cells[sig].dim != q + 1 or x.cells[tau].dim != q:
                continue
            a_cols = [la.vec(col) for col in la.transpose(inc.attach.matrix)]
            wedge_cols = []
            for l_idx in combinations(range(n), p):
                col_vecs = [la.solve(a_cols, la.unit(n, l))
                            for l in l_idx]
                wedge_cols.append(_wedge_coords(col_vecs, n, p))
            tau_basis = [la.vec(b) for b in bases[tau]]
            for b, v in enumerate(bases[sig]):
                # pull v back through the attachment, expand in tau's basis
                pulled = la.solve(wedge_cols, la.vec(v)) if p else la.vec(v)
                coords = la.solve(tau_basis, pulled)
                if coords is None:
                    raise Mismatch("F_p(sigma) not contained in F_p(tau)")
                for a, c in enumerate(coords):
                    if c:
                        m[pos[q + 1][(sig, b)]][pos[q][(tau, a)]] += inc.sign * c
        deltas[q] = m
    dims = []
    for q in range(x.dim + 1):
        cq = len(labels[q])
        up = la.rank(deltas[q]) if q in deltas and labels[q] else 0
        down = la.rank(deltas[q - 1]) if q - 1 in deltas else 0
        dims.append(cq - up - down)
    return dims


# ---------------------------------------------------------------------------
# Cech machinery


class CechCocycle:
    """Alternating Cech cochain of piecewise forms on a polyhedral cover."""

    def __init__(self, cover, degree: int, comps: dict):
        self.cover = list(cover)
        self.degree = degree
        self.comps = {}
        for key, form in comps.items():
            key = tuple(key)
            if tuple(sorted(key)) != key:
                raise Mismatch("store components on sorted index tuples")
            self.comps[key] = form

    def component(self, indices):
        """Component for an arbitrary index sequence, with alternating sign."""
        seq = tuple(indices)
        if len(set(seq)) != len(seq):
            return None
        key = tuple(sorted(seq))
        if key not in self.comps:
            return None
        sign = _perm_sign(seq)
        form = self.comps[key]
        return form if sign == 1 else form.scale(-1)


def _perm_sign(seq) -> int:
    sign = 1
    items = list(seq)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return sign


def cech_delta(c: CechCocycle) -> CechCocycle:
    """Cech coboundary with the rear-position sign convention."""
    n_sets = len(c.cover)
    out = {}
    for key in combinations(range(n_sets), c.degree + 2):
        total = None
        for j in key:
            rest = tuple(i for i in key if i != j)
            comp = c.component(rest)
            if comp is None:
                continue
            piece = comp.scale(cech_sign(j, key))
            total = piece if total is None else total + piece
        if total is not None and not total.is_zero():
            out[key] = total
    return CechCocycle(c.cover, c.degree + 1, out)


@dataclass
class CycleClassResult:
    tube: TubeModel
    cover: list            # list of Polyhedron (closures of the opens)
    rhos: list             # PL partition of unity on the working carrier
    thetas: list           # theta_0 .. theta_{q-1} as CechCocycles
    varthetas: list        # vartheta_1 .. vartheta_{q-1}

    @property
    def representative(self) -> CechCocycle:
        return self.thetas[-1]


def zigzag(theta0: CechCocycle, rhos) -> CycleClassResult:
    """Fine-sheaf ladder: vartheta_{i,J} = sum_k rho_k theta_{i-1,(k)+J}.

    Verifies the rung identities delta(vartheta_i) = theta_{i-1} and
    theta_i = d'' vartheta_i exactly at every level.
    """
    q = theta0.degree + 1
    cover = theta0.cover
    thetas = [theta0]
    varthetas = []
    for i in range(1, q):
        prev = thetas[-1]
        comps = {}
        for key in combinations(range(len(cover)), q - i):
            total = None
            for k in range(len(cover)):
                src = prev.component((k,) + key)
                if src is None:
                    continue
                piece = src.mul_pl(rhos[k])
                total = piece if total is None else total + piece
            if total is not None:
                comps[key] = total
        vt = CechCocycle(cover, q - i - 1, comps)
        rung = cech_delta(vt)
        for key, form in thetas[-1].comps.items():
            other = rung.comps.get(key)
            diff = form - other if other is not None else form
            if not diff.is_zero():
                raise Mismatch(f"zig-zag rung delta failure at {key}")
        varthetas.append(vt)
        thetas.append(CechCocycle(
            cover, q - i - 1,
            {key: f.dsecond() for key, f in vt.comps.items()}))
    return CycleClassResult(None, cover, list(rhos), thetas, varthetas)


# ---------------------------------------------------------------------------
# cycle classes on tube models


def _tube_cover(t: TubeModel):
    """Cover of the working region by neighbourhoods of the bottom faces.

    U_j = {y_j <= c_j} with distinct clip levels strictly inside (h, H),
    so that partition-of-unity creases meet every corner face V^I in
    measure zero.
    """
    n = t.ambient_dim
    c = (t.h + t.H) / 2
    levels = [c + (t.H - c) * Fraction(j, 2 * t.q)
              for j in range(1, t.q + 1)]
    cover = []
    for j, cj in enumerate(levels):
        a = la.unit(n, t.base_dim + j)
        cover.append(ph.from_hrep(n, [], [(a, cj)]))
    return cover, c


def _working_carrier(t: TubeModel, c) -> PolyComplex:
    """Sub complex of the tube cut at level c, keeping {min_j y_j <= c}."""
    cuts = [(la.unit(t.ambient_dim, t.base_dim + j), c)
            for j in range(t.q)]
    ref = refine_by_hyperplanes(t.tube, cuts)
    keep = []
    for cid in ref.complex.maximal_cells:
        cell = ref.complex.cells[cid]
        x = cell.relative_interior_point()
        if any(x[t.base_dim + j] < c for j in range(t.q)):
            keep.append(cell)
    return face_lattice(keep)


def cycle_class(t: TubeModel) -> CycleClassResult:
    """Dolbeault class of the weighted corner cycle of a tube model.

    Builds theta_0 = tau(m {y_1, ..., y_q}) on the intersection of the
    facet-neighbourhood cover and runs the zig-zag ladder.
    """
    cover, c = _tube_cover(t)
    carrier = _working_carrier(t, c)
    try:
        rhos = pl_partition_of_unity(cover, carrier)
    except NotACover as e:
        raise NoPartition(str(e)) from e
    carrier = rhos[0].carrier
    ys = [PLFunction.linear(carrier, la.unit(t.ambient_dim, t.base_dim + j))
          for j in range(t.q)]
    sym = Symbol.of(*ys).scale(t.m)
    theta0_form = tau(sym)
    if theta0_form.carrier is not carrier:
        theta0_form = PiecewiseForm(
            carrier, {cid: theta0_form.cell_forms[cid]
                      for cid in carrier.maximal_cells},
            theta0_form.p, theta0_form.q)
    theta0 = CechCocycle(cover, t.q - 1,
                         {tuple(range(t.q)): theta0_form})
    result = zigzag(theta0, rhos)
    result.tube = t
    return result


def pair(c: CycleClassResult, omega: PiecewiseForm) -> Fraction:
    """Pairing of a cycle class with a d''-closed pulled-back form.

    Computes the telescoping face-integral route at every ladder level
    and the direct corner route; raises Mismatch unless all agree.
    """
    t = c.tube
    q = t.q
    omega_t = extend_to_tube(omega, t)
    levels = []
    for i, theta in enumerate(c.thetas):
        # theta_i pairs against the faces V^I with |I| = q - i
        total = Fraction(0)
        for key, form in theta.comps.items():
            subset = tuple(j + 1 for j in key)
            a, b = align_piecewise(form, omega_t)
            total += face_integral(t.face(subset), a.wedge(b),
                                   [t.normal(j) for j in subset])
        levels.append(pairing_sign(t) * total)
    if len(set(levels)) > 1:
        raise Mismatch(f"telescoping levels disagree: {levels}")
    theta0_unit = c.thetas[0].comps[tuple(range(q))].scale(Fraction(1, t.m))
    from .integrate import tube_pairing
    direct = tube_pairing(t, theta0_unit, omega)
    if direct != levels[0]:
        raise Mismatch(f"corner route {direct} != telescoping {levels[0]}")
    return direct
