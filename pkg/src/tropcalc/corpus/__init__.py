"""Packaged regression corpus.

Each scenario file carries a provenance tag explaining where its
expected value comes from (hand computation, closed-form identity, ...);
the runner recomputes the value and compares exactly.
"""

from __future__ import annotations

import json
from importlib import resources

from .. import io as tio
from ..cycles import WeightedCycle, check_balanced, degree
from ..dolbeault import cycle_class, hpq, pair
from ..integrate import integrate, stokes_verify


def scenario_paths():
    root = resources.files(__package__)
    return sorted((p for p in root.iterdir() if p.name.endswith(".json")),
                  key=lambda p: p.name)


def run_scenario(data: dict):
    """Recompute a scenario; returns a JSON-comparable actual value."""
    kind = data["kind"]
    inp = data["input"]
    if kind == "integrate":
        value = integrate(tio.piecewise_from_json(inp["form"]),
                          tio.cycle_from_json(inp["cycle"])).value
        return tio.rat_to_str(value)
    if kind == "balance":
        return check_balanced(tio.cycle_from_json(inp["cycle"])).balanced
    if kind == "degree":
        return degree(tio.cycle_from_json(inp["cycle"]))
    if kind == "hpq":
        return hpq(tio.complex_from_json(inp["complex"]), int(inp["p"]))
    if kind == "stokes":
        value = stokes_verify(tio.piecewise_from_json(inp["form"]),
                              tio.complex_from_json(inp["region"]))
        return tio.rat_to_str(value)
    if kind == "pair":
        t = tio.tube_from_json(inp["tube"])
        value = pair(cycle_class(t), tio.piecewise_from_json(inp["form"]))
        return tio.rat_to_str(value)
    raise ValueError(f"unknown corpus kind {kind!r}")


def run_corpus(verbose: bool = False) -> int:
    failures = 0
    for path in scenario_paths():
        data = json.loads(path.read_text())
        try:
            actual = run_scenario(data)
            ok = actual == data["expected"]
        except Exception as e:  # a crash is a corpus failure, not an abort
            actual, ok = f"{type(e).__name__}: {e}", False
        if verbose:
            status = "PASS" if ok else "FAIL"
            line = f"{status} {data['name']}"
            if not ok:
                line += f": expected {data['expected']!r}, got {actual!r}"
            print(line)
        failures += 0 if ok else 1
    if verbose:
        print(f"{'all scenarios passed' if not failures else str(failures) + ' scenario(s) failed'}")
    return 1 if failures else 0
