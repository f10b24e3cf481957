"""Command-line entry point.

Verbs: ``run`` (a scenario file), ``case1`` / ``case2`` (built-ins),
``validate`` (parse and check only), ``convergence`` (transport order
study).  Exit codes: 0 success, 1 validation error, 2 runtime abort,
64 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .output import DIAGNOSTICS_FILE, write_frame
from .scenario import (ScenarioError, apply_overrides, builtin_document,
                       parse_scenario, render_scenario)
from .solver import SolverError, advection_convergence, run

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_RUNTIME = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scenario", metavar="PATH",
                        help="scenario JSON file, or the name of a built-in")
    common.add_argument("--out", metavar="DIR",
                        help="output directory (default: $KC_OUT or ./out)")
    common.add_argument("--override", metavar="K=V", action="append",
                        default=[], help="dotted-path override, repeatable")
    common.add_argument("--threads", metavar="N|auto", default="1",
                        help="worker count for the solver")
    common.add_argument("--limiter", choices=["none", "minmod"],
                        help="shortcut for stepping.limiter")
    common.add_argument("--splitting", choices=["lie", "strang"],
                        help="shortcut for stepping.splitting")

    parser = _Parser(prog="kcrowd",
                     description="Discrete-velocity kinetic crowd simulator")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    sub.add_parser("run", parents=[common], help="run a scenario file")
    sub.add_parser("case1", parents=[common],
                   help="run the corner-exit case study")
    sub.add_parser("case2", parents=[common],
                   help="run the opposing-crowds case study")
    sub.add_parser("validate", parents=[common],
                   help="parse and validate, print the normalized scenario")
    sub.add_parser("convergence", parents=[common],
                   help="measure transport convergence orders")
    return parser


def _load_document(args) -> dict:
    name = args.scenario
    if args.verb in ("case1", "case2"):
        name = args.verb
    if name is None:
        raise ScenarioError("scenario", "a --scenario file is required")
    if name in ("case1", "case2") and not Path(name).exists():
        doc = builtin_document(name)
    else:
        path = Path(name)
        if not path.exists():
            raise ScenarioError("scenario", f"no such file: {name}")
        import json
        try:
            doc = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise ScenarioError("scenario", f"not valid JSON: {exc}") from exc
    overrides = list(args.override)
    if args.limiter:
        overrides.append(f"stepping.limiter={args.limiter}")
    if args.splitting:
        overrides.append(f"stepping.splitting={args.splitting}")
    return apply_overrides(doc, overrides)


def _resolve_threads(text: str) -> int:
    if text == "auto":
        return os.cpu_count() or 1
    try:
        n = int(text)
    except ValueError:
        raise ScenarioError("threads", f"not a worker count: {text!r}")
    if n < 1:
        raise ScenarioError("threads", "worker count must be at least 1")
    return n


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.verb == "convergence":
        for limiter in ("none", "minmod"):
            errors, rates = advection_convergence(limiter=limiter)
            err_text = ", ".join(f"{e:.3e}" for e in errors)
            rate_text = ", ".join(f"{r:.3f}" for r in rates)
            print(f"{limiter:>7}: L1 errors [{err_text}]  rates [{rate_text}]")
        return EXIT_OK

    try:
        doc = _load_document(args)
        scenario = parse_scenario(doc)
        threads = _resolve_threads(args.threads)
    except ScenarioError as exc:
        print(f"kcrowd: validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    if args.verb == "validate":
        sys.stdout.write(render_scenario(scenario))
        return EXIT_OK

    out_dir = Path(args.out or os.environ.get("KC_OUT") or "out")
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "scenario.json").write_text(render_scenario(scenario))
    jsonl = out_dir / DIAGNOSTICS_FILE
    if jsonl.exists():
        jsonl.unlink()

    def sink(state, diag, frame):
        write_frame(state, diag, out_dir, frame,
                    rho_display_max=scenario.output.rho_display_max,
                    full_state=scenario.output.full_state)

    try:
        result = run(scenario, threads=threads, sink=sink)
    except SolverError as exc:
        print(f"kcrowd: runtime abort: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    last = result.frames[-1]
    print(f"completed: t = {last.t:.6g}, frames = {len(result.frames)}, "
          f"min f = {result.f_min:.3e}, max rho = {result.rho_max:.6f}, "
          f"mass = {[f'{m:.6g}' for m in last.mass]}, out -> {out_dir}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
