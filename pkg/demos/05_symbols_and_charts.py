"""Milnor-type symbols of PL functions and the tau map.

A degree-q symbol is a rational combination of q-tuples of piecewise
linear functions with integer slopes.  tau sends {f_1, ..., f_q} to the
cellwise form d'f_1 ^ ... ^ d'f_q, which is d''-closed because the
slopes are cellwise constant.
"""

from fractions import Fraction

from tropcalc import (PLFunction, Polyhedron, Symbol, box_complex,
                      face_lattice, normalize, tau, trop_chart)

sq = box_complex(0, 1, 2)
f = PLFunction.linear(sq, (1, 0))        # x
g = PLFunction.linear(sq, (0, 1))        # y
h = PLFunction.linear(sq, (2, 3), 1)     # 2x + 3y + 1

s = Symbol.of(f, g)
form = tau(s)
cid = sorted(form.carrier.maximal_cells)[0]
print("tau{x, y} on the square:", form.cell_forms[cid])

# bilinearity and antisymmetry
assert tau(Symbol.of(f, g) + Symbol.of(f, h)).cell_forms[cid] == \
    tau(Symbol(2, [(Fraction(1), (f, [g, h]))])).cell_forms[cid]
assert (tau(Symbol.of(f, g)) + tau(Symbol.of(g, f))).is_zero()
print("bilinearity (via product entries) and antisymmetry hold")

# tau lands in d''-closed forms
assert tau(Symbol.of(f, h)).dsecond().is_zero()
print("tau{x, 2x+3y+1} is d''-closed")

# normalize merges equal tuples exactly
merged = normalize(Symbol.of(f, g) + Symbol.of(f, g).scale(Fraction(1, 2)))
print("normalize merges coefficients:", [str(c) for c, _ in merged.terms])
assert [c for c, _ in merged.terms] == [Fraction(3, 2)]

# a tropical chart: the image of u under cellwise max functions
line = face_lattice([
    Polyhedron.make(1, vertices=[(0,)], rays=[(1,)]),
    Polyhedron.make(1, vertices=[(0,)], rays=[(-1,)])])
m = PLFunction(line, {c: (((1,) if line.cells[c].rays[0] == (1,) else (0,)),
                          Fraction(0)) for c in line.top_cells()})   # max(x, 0)
ident = PLFunction.linear(line, (1,))
chart = trop_chart([ident, m], line)
print("\nchart image cells:", len(chart.image.cells),
      " minimal cell sigma_u id:", chart.sigma_u)
