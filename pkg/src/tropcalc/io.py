"""JSON (de)serialization; all rationals travel as exact strings "p/q"."""

from __future__ import annotations

import json
from fractions import Fraction

from .complexes import AffineMap, Incidence, PolyComplex
from .cycles import TubeModel, WeightedCycle, build_tube
from .errors import ParseError, SchemaError
from .forms import PiecewiseForm, PLFunction, Polynomial, Superform
from .milnor import Symbol
from .polyhedra import Polyhedron


def rat_to_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rat_from_str(s) -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as e:
        raise SchemaError(f"bad rational {s!r}") from e


def _vec_out(v):
    return [rat_to_str(x) for x in v]


def _vec_in(v):
    if not isinstance(v, list):
        raise SchemaError("expected a list of rationals")
    return tuple(rat_from_str(x) for x in v)


# -- polyhedra ---------------------------------------------------------------


def polyhedron_to_json(p: Polyhedron) -> dict:
    return {"dim": p.ambient_dim,
            "vertices": [_vec_out(v) for v in p.vertices],
            "rays": [_vec_out(r) for r in p.rays],
            "lineality": [_vec_out(l) for l in p.lineality]}


def polyhedron_from_json(d: dict) -> Polyhedron:
    try:
        n = int(d["dim"])
    except (KeyError, TypeError, ValueError) as e:
        raise SchemaError("polyhedron needs an integer 'dim'") from e
    return Polyhedron.make(n,
                           vertices=[_vec_in(v) for v in d.get("vertices", [])],
                           rays=[_vec_in(r) for r in d.get("rays", [])],
                           lineality=[_vec_in(l) for l in d.get("lineality", [])])


# -- complexes ---------------------------------------------------------------


def _map_to_json(m: AffineMap) -> dict:
    return {"matrix": [_vec_out(row) for row in m.matrix],
            "shift": _vec_out(m.shift)}


def _map_from_json(d: dict) -> AffineMap:
    return AffineMap.make([_vec_in(row) for row in d["matrix"]],
                          _vec_in(d["shift"]))


def complex_to_json(x: PolyComplex) -> dict:
    ids = sorted(x.cells)
    pos = {cid: i for i, cid in enumerate(ids)}
    faces = []
    for inc in x.incidences:
        entry = [pos[inc.child], pos[inc.parent], inc.sign]
        n = x.cells[inc.parent].ambient_dim
        if inc.attach != AffineMap.identity(n):
            entry.append(_map_to_json(inc.attach))
        faces.append(entry)
    return {"mode": x.mode,
            "cells": [polyhedron_to_json(x.cells[cid]) for cid in ids],
            "faces": faces}


def complex_from_json(d: dict) -> PolyComplex:
    cells = {i: polyhedron_from_json(c) for i, c in enumerate(d.get("cells", []))}
    incidences = []
    for entry in d.get("faces", []):
        if len(entry) not in (3, 4):
            raise SchemaError("face entry must be [child, parent, sign(, map)]")
        child, parent, sign = int(entry[0]), int(entry[1]), int(entry[2])
        if child not in cells or parent not in cells:
            raise SchemaError("face entry references a missing cell")
        if len(entry) == 4:
            amap = _map_from_json(entry[3])
        else:
            amap = AffineMap.identity(cells[parent].ambient_dim)
        incidences.append(Incidence(child, parent, sign, amap))
    return PolyComplex(cells, incidences, mode=d.get("mode", "embedded"))


# -- cycles ------------------------------------------------------------------


def cycle_to_json(z: WeightedCycle) -> dict:
    pos = {cid: i for i, cid in enumerate(sorted(z.support.cells))}
    return {"complex": complex_to_json(z.support),
            "weights": {str(pos[c]): w for c, w in sorted(z.weights.items())}}


def cycle_from_json(d: dict) -> WeightedCycle:
    if "complex" not in d or "weights" not in d:
        raise SchemaError("cycle needs 'complex' and 'weights'")
    support = complex_from_json(d["complex"])
    try:
        weights = {int(c): int(w) for c, w in d["weights"].items()}
    except (TypeError, ValueError, AttributeError) as e:
        raise SchemaError("weights must map cell ids to integers") from e
    return WeightedCycle(support, weights)


# -- forms -------------------------------------------------------------------


def _poly_to_json(p: Polynomial) -> dict:
    return {"monomials": [{"exps": list(e), "coef": rat_to_str(c)}
                          for e, c in sorted(p.coeffs.items())]}


def _poly_from_json(d: dict, n: int) -> Polynomial:
    coeffs = {}
    for m in d.get("monomials", []):
        exps = tuple(int(e) for e in m["exps"])
        if len(exps) != n:
            raise SchemaError("monomial exponent length mismatch")
        coeffs[exps] = coeffs.get(exps, Fraction(0)) + rat_from_str(m["coef"])
    return Polynomial(n, coeffs)


def superform_to_json(f: Superform) -> dict:
    return {"dim": f.n, "p": f.p, "q": f.q,
            "terms": [{"I": list(i_idx), "J": list(j_idx),
                       "poly": _poly_to_json(poly)}
                      for (i_idx, j_idx), poly in sorted(f.terms.items())]}


def superform_from_json(d: dict) -> Superform:
    try:
        n, p, q = int(d["dim"]), int(d["p"]), int(d["q"])
    except (KeyError, TypeError, ValueError) as e:
        raise SchemaError("superform needs integer 'dim', 'p', 'q'") from e
    terms = {}
    for t in d.get("terms", []):
        i_idx = tuple(int(i) for i in t["I"])
        j_idx = tuple(int(j) for j in t["J"])
        if list(i_idx) != sorted(set(i_idx)) or list(j_idx) != sorted(set(j_idx)):
            raise SchemaError("multi-indices must be strictly increasing")
        poly = _poly_from_json(t.get("poly", {}), n)
        key = (i_idx, j_idx)
        terms[key] = terms[key] + poly if key in terms else poly
    return Superform(n, p, q, terms)


def piecewise_to_json(f: PiecewiseForm) -> dict:
    pos = {cid: i for i, cid in enumerate(sorted(f.carrier.cells))}
    return {"carrier": complex_to_json(f.carrier), "p": f.p, "q": f.q,
            "cell_forms": {str(pos[c]): superform_to_json(g)
                           for c, g in sorted(f.cell_forms.items())}}


def piecewise_from_json(d: dict) -> PiecewiseForm:
    carrier = complex_from_json(d["carrier"])
    forms = {int(c): superform_from_json(g)
             for c, g in d.get("cell_forms", {}).items()}
    return PiecewiseForm(carrier, forms, int(d["p"]), int(d["q"]))


def plfun_to_json(f: PLFunction) -> dict:
    pos = {cid: i for i, cid in enumerate(sorted(f.carrier.cells))}
    return {"carrier": complex_to_json(f.carrier),
            "data": {str(pos[c]): {"slope": _vec_out(slope),
                                   "const": rat_to_str(const)}
                     for c, (slope, const) in sorted(f.data.items())}}


def plfun_from_json(d: dict, carrier: PolyComplex = None) -> PLFunction:
    if carrier is None:
        carrier = complex_from_json(d["carrier"])
    data = {}
    for c, entry in d.get("data", {}).items():
        data[int(c)] = (_vec_in(entry["slope"]), rat_from_str(entry["const"]))
    if set(data) != set(carrier.maximal_cells):
        raise SchemaError("PL data must cover exactly the maximal cells")
    return PLFunction(carrier, data)


def symbol_to_json(s: Symbol) -> dict:
    return {"q": s.q,
            "terms": [{"coef": rat_to_str(c),
                       "tuple": [plfun_to_json(f) for f in tup]}
                      for c, tup in s.terms]}


def symbol_from_json(d: dict) -> Symbol:
    terms = []
    for t in d.get("terms", []):
        tup = [plfun_from_json(f) for f in t["tuple"]]
        terms.append((rat_from_str(t["coef"]), tup))
    return Symbol(int(d["q"]), terms)


# -- tube models -------------------------------------------------------------


def tube_to_json(t: TubeModel) -> dict:
    return {"base": complex_to_json(t.base), "q": t.q,
            "h": rat_to_str(t.h), "H": rat_to_str(t.H), "m": t.m}


def tube_from_json(d: dict) -> TubeModel:
    for key in ("base", "q", "h", "H", "m"):
        if key not in d:
            raise SchemaError(f"tube model needs '{key}'")
    return build_tube(complex_from_json(d["base"]), int(d["q"]),
                      rat_from_str(d["h"]), rat_from_str(d["H"]), int(d["m"]))


# -- files -------------------------------------------------------------------


def load(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON in {path}: {e}") from e


def dump(obj: dict, path: str):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1, sort_keys=True)
        fh.write("\n")


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=1, sort_keys=True)
