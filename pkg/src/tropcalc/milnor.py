"""Milnor-type symbols of PL functions and the tau map to (q,0)-forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .complexes import PolyComplex, face_lattice
from .errors import CarrierMismatch, NotPolyhedral
from .forms import PiecewiseForm, PLFunction, Polynomial, Superform, align_pl
from .polyhedra import Polyhedron


def _pl_key(f: PLFunction):
    return tuple(sorted((cid, tuple(slope), const)
                        for cid, (slope, const) in f.data.items()))


class Symbol:
    """Rational combination of q-tuples of integer-slope PL functions.

    A tuple entry may itself be a list of PLFunctions, read as the
    tropicalization of a product; normalize expands it multilinearly.
    """

    def __init__(self, q: int, terms):
        self.q = q
        self.terms = []
        for coef, tup in terms:
            coef = Fraction(coef)
            tup = tuple(tup)
            if len(tup) != q:
                raise CarrierMismatch(f"tuple of length {len(tup)} in a "
                                      f"degree-{q} symbol")
            if coef:
                self.terms.append((coef, tup))

    @staticmethod
    def of(*functions) -> "Symbol":
        return Symbol(len(functions), [(Fraction(1), functions)])

    def scale(self, c) -> "Symbol":
        c = Fraction(c)
        return Symbol(self.q, [(c * a, t) for a, t in self.terms])

    def __add__(self, other: "Symbol") -> "Symbol":
        if self.q != other.q:
            raise CarrierMismatch("symbol degrees differ")
        return Symbol(self.q, self.terms + other.terms)

    def __neg__(self):
        return self.scale(-1)


def normalize(s: Symbol) -> Symbol:
    """Expand product entries multilinearly, sort, and merge equal tuples."""
    expanded = []
    for coef, tup in s.terms:
        partial = [(coef, ())]
        for entry in tup:
            factors = entry if isinstance(entry, (list, tuple)) else [entry]
            partial = [(c, done + (f,)) for c, done in partial
                       for f in factors]
        expanded.extend(partial)
    merged = {}
    keyed = {}
    for coef, tup in expanded:
        key = tuple(_pl_key(f) for f in tup)
        merged[key] = merged.get(key, Fraction(0)) + coef
        keyed[key] = tup
    out = [(merged[k], keyed[k]) for k in sorted(merged) if merged[k]]
    return Symbol(s.q, out)


def tau(s: Symbol) -> PiecewiseForm:
    """Cellwise d'slope_1 ^ ... ^ d'slope_q, a d''-closed (q,0)-form."""
    s = normalize(s)
    funcs = [f for _, tup in s.terms for f in tup]
    if not funcs:
        raise CarrierMismatch("tau of an empty symbol has no carrier")
    aligned = align_pl(*funcs)
    carrier = aligned[0].carrier
    it = iter(aligned)
    terms = [(coef, tuple(next(it) for _ in tup)) for coef, tup in s.terms]
    n = carrier.ambient_dim
    cell_forms = {}
    for cid in carrier.maximal_cells:
        total = Superform.zero(n, s.q, 0)
        for coef, tup in terms:
            piece = Superform.function(Polynomial.constant(n, coef))
            for f in tup:
                piece = piece.wedge(f.dprime_form().cell_forms[cid])
            total = total + piece
        cell_forms[cid] = total
    return PiecewiseForm(carrier, cell_forms, s.q, 0)


@dataclass
class TropChart:
    carrier: PolyComplex
    functions: list
    image: PolyComplex
    sigma_u: int
    cell_map: dict  # carrier top cell -> image cell id


def trop_chart(functions, u: PolyComplex) -> TropChart:
    """Image complex of u |-> (y_1(u), ..., y_N(u)) with its minimal cell."""
    aligned = list(align_pl(*functions))
    carrier = aligned[0].carrier
    big_n = len(aligned)
    images = []
    for cid in carrier.maximal_cells:
        cell = carrier.cells[cid]
        verts = [tuple(f.data[cid][1] + la.dot(f.data[cid][0], la.vec(v))
                       for f in aligned) for v in cell.vertices]
        rays = [tuple(la.dot(f.data[cid][0], la.vec(r)) for f in aligned)
                for r in cell.rays]
        lin = [tuple(la.dot(f.data[cid][0], la.vec(l)) for f in aligned)
               for l in cell.lineality]
        images.append((cid, Polyhedron.make(big_n, vertices=verts, rays=rays,
                                            lineality=lin)))
    from .errors import NonComplex
    try:
        image = face_lattice([p for _, p in images])
    except NonComplex as e:
        raise NotPolyhedral(str(e)) from e
    cell_map = {}
    from . import polyhedra as ph
    for cid, p in images:
        cell_map[cid] = image.find_cell(ph.canonicalize(p))
    minimal = None
    for _, p in images:
        minimal = p if minimal is None else ph.intersect(minimal, p)
    sigma_u = image.find_cell(ph.canonicalize(minimal))
    if sigma_u is None:
        raise NotPolyhedral("no minimal polyhedron common to all cells")
    return TropChart(carrier, aligned, image, sigma_u, cell_map)
