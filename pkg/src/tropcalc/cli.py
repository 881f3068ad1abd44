"""Command-line front end for tropcalc.

All numeric output is exact ("p/q"); output ordering is deterministic.
TROPCALC_THREADS caps worker parallelism (the reference implementation
computes sequentially, which is the deterministic baseline).
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import io as tio
from .complexes import box_complex, circle_complex, face_lattice, \
    point_complex, torus_complex
from .cycles import WeightedCycle, check_balanced, degree as cycle_degree
from .dolbeault import cycle_class, hpq, pair
from .errors import TropcalcError
from .forms import PiecewiseForm, Polynomial, Superform
from .integrate import integrate, stokes_face_residual, stokes_verify
from .polyhedra import Polyhedron


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("TROPCALC_THREADS", "1")))
    except ValueError:
        return 1


def _print_rat(label, value):
    print(f"{label}: {tio.rat_to_str(value)}")


# -- commands ----------------------------------------------------------------


def cmd_check_balance(args) -> int:
    z = tio.cycle_from_json(tio.load(args.cycle))
    rep = check_balanced(z)
    print(f"balanced: {'yes' if rep.balanced else 'no'}")
    for cell, defect in rep.violations:
        print(f"violation at cell {cell}: defect {list(defect)}")
    for cell in rep.boundary:
        print(f"boundary face: cell {cell}")
    return 0 if rep.balanced else 1


def cmd_degree(args) -> int:
    z = tio.cycle_from_json(tio.load(args.cycle))
    print(f"degree: {cycle_degree(z)}")
    return 0


def cmd_integrate(args) -> int:
    alpha = tio.piecewise_from_json(tio.load(args.form))
    z = tio.cycle_from_json(tio.load(args.cycle))
    res = integrate(alpha, z)
    _print_rat("integral", res.value)
    for cid in sorted(res.cells):
        _print_rat(f"cell {cid}", res.cells[cid])
    return 0


def cmd_stokes(args) -> int:
    alpha = tio.piecewise_from_json(tio.load(args.form))
    if args.tube is not None:
        t = tio.tube_from_json(tio.load(args.region))
        subset = tuple(int(s) for s in args.tube.split(",") if s.strip())
        residual = stokes_face_residual(t, alpha, subset)
    else:
        data = tio.load(args.region)
        if "cells" in data:
            region = tio.complex_from_json(data)
        else:
            region = face_lattice([tio.polyhedron_from_json(data)])
        residual = stokes_verify(alpha, region)
    _print_rat("residual", residual)
    return 0 if residual == 0 else 1


_DEMO_COMPLEXES = {
    "point": lambda: point_complex(),
    "circle": circle_complex,
    "torus": torus_complex,
}


def cmd_hpq(args) -> int:
    if args.demo:
        x = _DEMO_COMPLEXES[args.demo]()
    else:
        x = tio.complex_from_json(tio.load(args.complex))
    dims = hpq(x, args.p)
    if args.emit_csv:
        print("p,q,dim")
        for q, d in enumerate(dims):
            print(f"{args.p},{q},{d}")
    else:
        print(f"h^({args.p},q) for q = 0..{len(dims) - 1}: {dims}")
    return 0


def cmd_cycle_class(args) -> int:
    t = tio.tube_from_json(tio.load(args.tube))
    c = cycle_class(t)
    print(f"cover size: {len(c.cover)}")
    for i, theta in enumerate(c.thetas):
        comps = sorted(theta.comps)
        print(f"theta_{i}: degree {theta.degree}, components {comps}")
    print("rung identities: verified")
    if args.out:
        tio.dump({"tube": tio.tube_to_json(t)}, args.out)
        print(f"class written to {args.out}")
    return 0


def cmd_pair(args) -> int:
    if args.klass:
        t = tio.tube_from_json(tio.load(args.klass)["tube"])
    else:
        t = tio.tube_from_json(tio.load(args.tube))
    omega = tio.piecewise_from_json(tio.load(args.form))
    c = cycle_class(t)
    value = pair(c, omega)
    _print_rat("pairing", value)
    base_val = integrate(omega, WeightedCycle.all_ones(t.base)).value
    _print_rat("m * base integral", t.m * base_val)
    return 0 if value == t.m * base_val else 1


# -- demos -------------------------------------------------------------------


def _demo_cauchy(n: int, q: int, m: int = 1) -> int:
    from .cycles import build_tube
    nb = n - q
    if nb < 0:
        raise TropcalcError("need q <= n")
    base = point_complex(((0,),)) if nb == 0 else box_complex(0, 1, nb)
    t = build_tube(base, q, 0, 1, m)
    bn = base.ambient_dim
    if nb == 0:
        form = Superform.function(Polynomial.constant(bn, 1))
    else:
        form = Superform.monomial(bn, tuple(range(nb)), tuple(range(nb)))
    omega = PiecewiseForm.constant(base, form)
    c = cycle_class(t)
    value = pair(c, omega)
    base_val = integrate(omega, WeightedCycle.all_ones(base)).value
    _print_rat("pairing <cl(Z), omega>", value)
    _print_rat("m * integral over P", m * base_val)
    print("equal: " + ("yes" if value == m * base_val else "no"))
    return 0 if value == m * base_val else 1


def _demo_degree(points: str) -> int:
    weights = [int(w) for w in points.split(",") if w.strip()]
    cells = [Polyhedron.make(1, vertices=[(i,)]) for i in range(len(weights))]
    support = face_lattice(cells)
    z = WeightedCycle(support, dict(zip(support.top_cells(), weights)))
    print(f"degree: {cycle_degree(z)}")
    return 0


def _demo_torus() -> int:
    x = torus_complex()
    for p in range(3):
        print(f"h^({p},q) for q = 0..2: {hpq(x, p)}")
    vol = PiecewiseForm.constant(x, Superform.monomial(2, (0, 1), (0, 1)))
    _print_rat("volume", integrate(vol, WeightedCycle.all_ones(x)).value)
    return 0


def cmd_demo(args) -> int:
    if args.scenario == "cauchy":
        return _demo_cauchy(args.n, args.q, args.m)
    if args.scenario == "degree":
        return _demo_degree(args.points)
    if args.scenario == "torus":
        return _demo_torus()
    raise TropcalcError(f"unknown demo {args.scenario!r}")


# -- corpus ------------------------------------------------------------------


def cmd_corpus(args) -> int:
    from .corpus import run_corpus
    return run_corpus(verbose=True)


# -- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tropcalc",
                                 description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-balance", help="balancing condition of a cycle")
    p.add_argument("cycle")
    p.set_defaults(func=cmd_check_balance)

    p = sub.add_parser("degree", help="degree of a zero-cycle")
    p.add_argument("cycle")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("integrate", help="exact integral of a form over a cycle")
    p.add_argument("--form", required=True)
    p.add_argument("--cycle", required=True)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("stokes", help="Stokes residual on a region or tube face")
    p.add_argument("--form", required=True)
    p.add_argument("--region", required=True)
    p.add_argument("--tube", default=None,
                   help="comma list of pinned tube slots; region is a tube file")
    p.set_defaults(func=cmd_stokes)

    p = sub.add_parser("hpq", help="cellular Dolbeault cohomology dimensions")
    p.add_argument("--complex", dest="complex", default=None)
    p.add_argument("--demo", choices=sorted(_DEMO_COMPLEXES), default=None)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--emit-csv", action="store_true")
    p.set_defaults(func=cmd_hpq)

    p = sub.add_parser("cycle-class", help="zig-zag cycle class of a tube corner")
    p.add_argument("--tube", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_cycle_class)

    p = sub.add_parser("pair", help="pair a cycle class with a form")
    p.add_argument("--class", dest="klass", default=None)
    p.add_argument("--tube", default=None)
    p.add_argument("--form", required=True)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("demo", help="built-in scenarios")
    p.add_argument("scenario", choices=["cauchy", "degree", "torus"])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--q", type=int, default=1)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--points", default="1")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("corpus", help="run the packaged regression corpus")
    p.set_defaults(func=cmd_corpus)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "pair" and not (args.klass or args.tube):
        print("pair needs --class or --tube", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except TropcalcError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
