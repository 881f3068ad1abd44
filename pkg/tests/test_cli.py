from fractions import Fraction

import pytest

from tropcalc import (PiecewiseForm, Polynomial, Polyhedron, Superform,
                      WeightedCycle, box_complex, build_tube, face_lattice)
from tropcalc import io as tio
from tropcalc.cli import main


@pytest.fixture
def files(tmp_path):
    out = {}
    base = box_complex(0, 1, 1)
    out["interval"] = tmp_path / "interval.json"
    tio.dump(tio.cycle_to_json(WeightedCycle.all_ones(base)), str(out["interval"]))

    f = PiecewiseForm.constant(base, Superform.monomial(
        1, (0,), (0,), Polynomial(1, {(1,): Fraction(1)})))
    out["xform"] = tmp_path / "xform.json"
    tio.dump(tio.piecewise_to_json(f), str(out["xform"]))

    rays = [(1, 0), (0, 1), (-1, -1)]
    line = face_lattice([Polyhedron.make(2, vertices=[(0, 0)], rays=[r])
                         for r in rays])
    out["line"] = tmp_path / "line.json"
    tio.dump(tio.cycle_to_json(WeightedCycle.all_ones(line)), str(out["line"]))

    pts = face_lattice([Polyhedron.make(1, vertices=[(i,)]) for i in range(2)])
    z0 = WeightedCycle(pts, dict(zip(sorted(pts.top_cells()), [2, 3])))
    out["points"] = tmp_path / "points.json"
    tio.dump(tio.cycle_to_json(z0), str(out["points"]))

    t = build_tube(base, 1, 0, 1, 3)
    out["tube"] = tmp_path / "tube.json"
    tio.dump(tio.tube_to_json(t), str(out["tube"]))
    return {k: str(v) for k, v in out.items()}


def test_check_balance(files, capsys):
    assert main(["check-balance", files["line"]]) == 0
    assert "balanced: yes" in capsys.readouterr().out


def test_degree(files, capsys):
    assert main(["degree", files["points"]]) == 0
    assert "degree: 5" in capsys.readouterr().out


def test_integrate(files, capsys):
    assert main(["integrate", "--form", files["xform"],
                 "--cycle", files["interval"]]) == 0
    assert "integral: 1/2" in capsys.readouterr().out


def test_hpq_demo(capsys):
    assert main(["hpq", "--demo", "torus", "--p", "1"]) == 0
    assert "[2, 4, 2]" in capsys.readouterr().out
    assert main(["hpq", "--demo", "circle", "--p", "0", "--emit-csv"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines() == ["p,q,dim", "0,0,1", "0,1,1"]


def test_pair_with_tube(files, capsys):
    assert main(["pair", "--tube", files["tube"],
                 "--form", files["xform"]]) == 0
    assert "pairing: 3/2" in capsys.readouterr().out


def test_demo_cauchy(capsys):
    assert main(["demo", "cauchy", "--n", "1", "--q", "1", "--m", "2"]) == 0
    assert "equal: yes" in capsys.readouterr().out


def test_demo_degree(capsys):
    assert main(["demo", "degree", "--points", "2,3,-1"]) == 0
    assert "degree: 4" in capsys.readouterr().out


def test_error_exit_code(tmp_path, capsys):
    missing = str(tmp_path / "nope.json")
    assert main(["degree", missing]) == 2
    assert "ParseError" in capsys.readouterr().err


def test_corpus(capsys):
    assert main(["corpus"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and "PASS" in out
