"""Command-line interface.

Subcommands: gen, solve, eval, compress, clique, link, verify. Exit status is
0 on success or a pass verdict, 1 on a fail verdict, 2 on usage or parse
errors, 3 on an inconclusive verdict. Text output prints 15 significant
digits; JSON is binary-faithful. HYPERLAG_SEED overrides the default seed.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from fractions import Fraction

from .errors import ParseError, ResourceLimitError
from .harness import (
    HARNESS_SOLVER,
    Budget,
    report_to_csv,
    report_to_json,
    report_to_text,
    run_claim,
)
from .hypergraph import (
    colex_graph,
    complete_graph,
    format_hypergraph,
    left_compress,
    link,
    max_clique_order,
    parse_hypergraph,
)
from .solver import SolverConfig, evaluate, solve

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

_VERDICT_EXIT = {"pass": EXIT_OK, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}


def _default_seed() -> int:
    raw = os.environ.get("HYPERLAG_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"HYPERLAG_SEED must be an integer, got {raw!r}")


def _add_solver_flags(p: argparse.ArgumentParser):
    p.add_argument("--config", default=None, help="JSON file with solver settings")
    p.add_argument("--restarts", type=int, default=None)
    p.add_argument("--max-iterations", type=int, default=None)
    p.add_argument("--step-gain-floor", type=float, default=None)
    p.add_argument("--kkt-tolerance", type=float, default=None)
    p.add_argument("--support-threshold", type=float, default=None)
    p.add_argument("--equality-tolerance", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument(
        "--clique-starts", choices=["on", "off", "auto"], default="auto"
    )


_CONFIG_FIELDS = (
    "restarts",
    "max_iterations",
    "step_gain_floor",
    "kkt_tolerance",
    "support_threshold",
    "equality_tolerance",
    "seed",
    "clique_starts",
)


def _load_config_file(path: str) -> dict:
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except FileNotFoundError:
        raise SystemExit(f"no such config file: {path}")
    except json.JSONDecodeError as exc:
        raise SystemExit(f"{path}: invalid JSON ({exc})")
    if not isinstance(raw, dict):
        raise SystemExit(f"{path}: config must be a JSON object")
    out = {}
    for key, value in raw.items():
        field = key.replace("-", "_")
        if field not in _CONFIG_FIELDS:
            raise SystemExit(f"{path}: unknown solver setting {key!r}")
        out[field] = value
    return out


def _solver_config(args, base: SolverConfig | None = None) -> SolverConfig:
    cfg = base or SolverConfig()
    overrides = dict(_load_config_file(args.config)) if args.config else {}
    for field in (
        "restarts",
        "max_iterations",
        "step_gain_floor",
        "kkt_tolerance",
        "support_threshold",
        "equality_tolerance",
    ):
        v = getattr(args, field)
        if v is not None:
            overrides[field] = v
    if args.seed is not None:
        overrides["seed"] = args.seed
    elif "seed" not in overrides:
        overrides["seed"] = _default_seed()
    if args.clique_starts != "auto":
        overrides["clique_starts"] = args.clique_starts == "on"
    return dataclasses.replace(cfg, **overrides)


def _parse_budget(spec: str | None) -> Budget | None:
    if spec is None:
        return None
    kwargs = {}
    if spec.isdigit():
        kwargs["max_graphs"] = int(spec)
    else:
        names = {"graphs": "max_graphs", "vertices": "max_vertices", "edges": "max_edges"}
        for part in spec.split(","):
            key, _, val = part.partition("=")
            if key not in names or not val.lstrip("-").isdigit():
                raise SystemExit(
                    f"bad --budget {spec!r}; use N or graphs=N,vertices=N,edges=N"
                )
            kwargs[names[key]] = int(val)
    base = Budget()
    return Budget(
        max_vertices=kwargs.get("max_vertices", base.max_vertices),
        max_edges=kwargs.get("max_edges", base.max_edges),
        max_graphs=kwargs.get("max_graphs", base.max_graphs),
    )


def _load(path: str):
    try:
        with open(path) as fh:
            return parse_hypergraph(fh.read())
    except FileNotFoundError:
        raise SystemExit(f"no such file: {path}")
    except ParseError as exc:
        raise SystemExit(f"{path}: {exc}")


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _parse_weights(raw: str, n: int) -> list[float]:
    parts = [p.strip() for p in raw.split(",") if p.strip()]
    try:
        fracs = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError):
        raise SystemExit(f"bad --weights {raw!r}; give comma-separated numbers")
    if len(fracs) != n:
        raise SystemExit(f"expected {n} weights, got {len(fracs)}")
    return [float(f) for f in fracs]


def _solve_report_dict(rep) -> dict:
    d = dataclasses.asdict(rep)
    d["weighting"] = list(d["weighting"])
    d["raw_weighting"] = list(d["raw_weighting"])
    d["support"] = list(d["support"])
    return d


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hyperlag", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a hypergraph file")
    gsub = gen.add_subparsers(dest="family", required=True)
    gc = gsub.add_parser("colex", help="first m r-sets in colex order")
    gc.add_argument("--r", type=int, required=True)
    gc.add_argument("--m", type=int, required=True)
    gc.add_argument("-o", "--output", default=None)
    gk = gsub.add_parser("complete", help="all r-subsets of t vertices")
    gk.add_argument("--r", type=int, required=True)
    gk.add_argument("--t", type=int, required=True)
    gk.add_argument("-o", "--output", default=None)

    sv = sub.add_parser("solve", help="maximize the edge polynomial")
    sv.add_argument("file")
    sv.add_argument("--format", choices=["text", "json"], default="text")
    sv.add_argument("-o", "--output", default=None)
    _add_solver_flags(sv)

    ev = sub.add_parser("eval", help="evaluate at a fixed weighting")
    ev.add_argument("file")
    ev.add_argument("--weights", required=True, help="comma list; rationals allowed")
    ev.add_argument("--format", choices=["text", "json"], default="text")

    cp = sub.add_parser("compress", help="left-compress the edge set")
    cp.add_argument("file")
    cp.add_argument("-o", "--output", default=None)

    cq = sub.add_parser("clique", help="maximum clique order")
    cq.add_argument("file")

    lk = sub.add_parser("link", help="link view at pinned vertices")
    lk.add_argument("file")
    lk.add_argument("--pin", required=True, help="one or two vertices, comma-separated")
    lk.add_argument("--complement", action="store_true")
    lk.add_argument("--minus", type=int, default=None)
    lk.add_argument("--format", choices=["text", "json"], default="text")

    vf = sub.add_parser("verify", help="run a claim check")
    vf.add_argument("claim")
    vf.add_argument("--t", type=int, default=None)
    vf.add_argument("--r", type=int, default=None)
    vf.add_argument("--m", type=int, default=None)
    vf.add_argument("--format", choices=["text", "json", "csv"], default="json")
    vf.add_argument("-o", "--output", default=None)
    vf.add_argument("--budget", default=None, help="N or graphs=N,vertices=N,edges=N")
    _add_solver_flags(vf)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return EXIT_USAGE
        raise
    except (ValueError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args) -> int:
    if args.command == "gen":
        g = (
            colex_graph(args.r, args.m)
            if args.family == "colex"
            else complete_graph(args.t, args.r)
        )
        _emit(format_hypergraph(g), args.output)
        return EXIT_OK

    if args.command == "solve":
        g = _load(args.file)
        rep = solve(g, _solver_config(args))
        if args.format == "json":
            _emit(json.dumps(_solve_report_dict(rep), sort_keys=True, indent=2) + "\n", args.output)
        else:
            lines = [
                f"value = {rep.value:.15g}",
                f"converged = {str(rep.converged).lower()}",
                f"kkt_residual = {rep.kkt_residual:.15g}",
                "support = " + " ".join(str(v) for v in rep.support),
                "weighting = " + " ".join(f"{w:.15g}" for w in rep.weighting),
                f"iterations = {rep.iterations}",
                f"restarts_used = {rep.restarts_used}",
                f"pairs_covered = {str(rep.pairs_covered).lower()}",
            ]
            _emit("\n".join(lines) + "\n", args.output)
        return EXIT_OK

    if args.command == "eval":
        g = _load(args.file)
        value = evaluate(g, _parse_weights(args.weights, g.n))
        if args.format == "json":
            print(json.dumps({"value": value}))
        else:
            print(f"{value:.15g}")
        return EXIT_OK

    if args.command == "compress":
        g = _load(args.file)
        _emit(format_hypergraph(left_compress(g)), args.output)
        return EXIT_OK

    if args.command == "clique":
        print(max_clique_order(_load(args.file)))
        return EXIT_OK

    if args.command == "link":
        g = _load(args.file)
        try:
            pins = [int(p) for p in args.pin.split(",") if p.strip()]
        except ValueError:
            raise SystemExit(f"bad --pin {args.pin!r}")
        try:
            view = link(g, pins, complemented=args.complement, difference_against=args.minus)
        except IndexError as exc:
            raise SystemExit(str(exc))
        members = sorted(view.sets)
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "pinned": sorted(view.pinned),
                        "complemented": view.complemented,
                        "minus": view.minus,
                        "sets": [list(s) for s in members],
                    },
                    sort_keys=True,
                )
            )
        else:
            for s in members:
                print(" ".join(str(v) for v in s))
        return EXIT_OK

    if args.command == "verify":
        report = run_claim(
            args.claim,
            t=args.t,
            r=args.r,
            m=args.m,
            config=_solver_config(args, base=HARNESS_SOLVER),
            budget=_parse_budget(args.budget),
        )
        render = {"json": report_to_json, "csv": report_to_csv, "text": report_to_text}
        _emit(render[args.format](report), args.output)
        return _VERDICT_EXIT[report.verdict]

    raise SystemExit(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
