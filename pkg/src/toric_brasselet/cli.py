"""Command line entry point: ``toric-brasselet <command> ...`` or ``python -m toric_brasselet``."""

from __future__ import annotations

import argparse
import json
import sys

from .errors import HYPOTHESIS_FAILURES, ToricError
from .problem import EXIT_HYPOTHESIS, EXIT_INPUT, TASK_KINDS, Problem, run_problem, to_json, to_text


def _samples(text: str):
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) != 2:
            raise argparse.ArgumentTypeError(f"sample {chunk!r} is not an 's,t' pair")
        pairs.append(parts)
    return pairs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toric-brasselet",
        description="Brasselet numbers, Euler obstructions and related invariants on affine toric varieties.",
    )
    parser.add_argument("command", choices=TASK_KINDS)
    parser.add_argument("--problem", help="JSON problem file (runs all of its tasks of this kind)")
    src = parser.add_argument_group("inline input")
    src.add_argument("--p", type=int, help="surface X(p,q); use --p 1 --q 0 for C^2")
    src.add_argument("--q", type=int)
    src.add_argument("--n", type=int, help="use the affine space C^n instead of a surface")
    src.add_argument("--f", help="function f")
    src.add_argument("--g", action="append", default=[], help="component g (repeat for several)")
    src.add_argument("--h", action="append", default=[], help="deformation of f (family)")
    src.add_argument("--l", action="append", default=[], help="deformation of g (family)")
    src.add_argument("--samples", type=_samples, help="family samples 's,t;s,t;...'")
    src.add_argument("--prepolar", action="store_true", help="brasselet-ci: use the prepolar formula")
    parser.add_argument("--mode", choices=["strict", "paper-example"], help="volume convention")
    parser.add_argument("--seed", type=int, help="random seed (default 0)")
    parser.add_argument("--trials", type=int, default=64, help="non-degeneracy trials (default 64)")
    out = parser.add_mutually_exclusive_group()
    out.add_argument("--json", dest="fmt", action="store_const", const="json")
    out.add_argument("--text", dest="fmt", action="store_const", const="text")
    parser.set_defaults(fmt="text")
    return parser


def inline_problem(args) -> Problem:
    if args.n is not None:
        variety = {"affine_space": {"n": args.n}}
    elif args.p is not None and args.q is not None:
        variety = {"surface": {"p": args.p, "q": args.q}}
    else:
        raise ValueError("give --problem, --p and --q, or --n")
    polys, inputs = {}, {}
    if args.f is not None:
        polys["f"] = args.f
        inputs["f"] = "f"
    gnames = []
    for i, g in enumerate(args.g, 1):
        name = "g" if len(args.g) == 1 else f"g{i}"
        polys[name] = g
        gnames.append(name)
    if gnames:
        inputs["g"] = gnames if len(gnames) > 1 else gnames[0]
    task = {"kind": args.command, "inputs": inputs}
    if args.command == "family":
        defs = {}
        for i, h in enumerate(args.h, 1):
            polys[f"h{i}"] = h
            defs.setdefault("f", []).append(f"h{i}")
        if args.l:
            if len(gnames) != 1:
                raise ValueError("--l needs exactly one --g")
            for i, l in enumerate(args.l, 1):
                polys[f"l{i}"] = l
                defs.setdefault(gnames[0], []).append(f"l{i}")
        task["family"] = {"deformations": defs}
        if args.samples:
            task["family"]["samples"] = args.samples
    if args.prepolar:
        task["prepolar"] = True
    return Problem.from_dict({"variety": variety, "polynomials": polys, "tasks": [task]})


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.trials < 1:
            raise ValueError("--trials must be >= 1")
        if args.problem:
            problem = Problem.load(args.problem)
            problem.tasks = [t for t in problem.tasks if t["kind"] == args.command]
            if not problem.tasks:
                raise ValueError(f"the problem file has no '{args.command}' task")
        else:
            problem = inline_problem(args)
        report, code = run_problem(problem, args.trials, args.mode, args.seed)
    except HYPOTHESIS_FAILURES as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (ToricError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        code_name = getattr(exc, "code", type(exc).__name__)
        print(f"error: {code_name}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(to_json(report) if args.fmt == "json" else to_text(report))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
