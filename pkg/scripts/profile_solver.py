#!/usr/bin/env python3
"""Timing survey of the solver across graph families and restart budgets.

Useful for picking sweep configurations: prints milliseconds per solve and
the value gap against the known closed form where one exists.
"""

import argparse
import sys
import time

from hyperlag import (
    SolverConfig,
    colex_graph,
    complete_graph,
    complete_lagrangian,
    motzkin_straus_value,
    solve,
)


def time_solve(g, config):
    t0 = time.perf_counter()
    rep = solve(g, config)
    return rep, (time.perf_counter() - t0) * 1000


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--restarts", type=int, nargs="+", default=[8, 16, 64])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    cases = [
        ("complete(6,2)", complete_graph(6, 2), complete_lagrangian(6, 2)),
        ("complete(7,3)", complete_graph(7, 3), complete_lagrangian(7, 3)),
        ("complete(8,4)", complete_graph(8, 4), complete_lagrangian(8, 4)),
        ("colex(3,12)", colex_graph(3, 12), complete_lagrangian(5, 3)),
        ("colex(3,16)", colex_graph(3, 16), complete_lagrangian(5, 3)),
        ("colex(4,25)", colex_graph(4, 25), complete_lagrangian(6, 4)),
        ("path(2, 5 edges)", colex_graph(2, 5), None),
    ]
    print(f"{'graph':<18} {'restarts':>8} {'ms':>9} {'value':>20} {'gap':>10}")
    for name, g, reference in cases:
        if reference is None and g.r == 2:
            reference = motzkin_straus_value(g)
        for restarts in args.restarts:
            cfg = SolverConfig(restarts=restarts, seed=args.seed)
            rep, ms = time_solve(g, cfg)
            gap = "" if reference is None else f"{abs(rep.value - reference):.1e}"
            print(f"{name:<18} {restarts:>8} {ms:>9.1f} {rep.value:>20.15f} {gap:>10}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
