"""Exact calculus of (p,q)-superforms on rational polyhedral complexes."""

__version__ = "0.1.0"

from .complexes import (AffineMap, Incidence, PolyComplex, box_complex,
                        circle_complex, face_lattice, point_complex, refine,
                        refine_by_hyperplanes, torus_complex)
from .cycles import (BalanceReport, TubeModel, WeightedCycle, build_tube,
                     check_balanced, degree)
from .dolbeault import (CechCocycle, CycleClassResult, cech_delta,
                        coefficient_space, cycle_class, hpq, pair, zigzag)
from .errors import TropcalcError
from .forms import (PiecewiseForm, PLFunction, Polynomial, Superform,
                    align_pl, align_piecewise, pl_partition_of_unity)
from .integrate import (IntegralResult, boundary_integral, cech_sign,
                        extend_to_tube, face_integral, integrate,
                        integrate_cell, pairing_sign, stokes_face_residual,
                        stokes_verify, tube_pairing)
from .milnor import Symbol, TropChart, normalize, tau, trop_chart
from .polyhedra import Polyhedron
