"""Command-line front end.

    colonlab classify "ideal(x^2, y^2)"
    colonlab threshold ni "ideal(x^3, y^3)" --index 1
    colonlab threshold coloncor "ideal(x,y)" "ideal(0)" "ideal(1)"
    colonlab threshold fullthm "ideal(x^2,y^2)" "ideal(1)" --property m-full
    colonlab verify engine-oracle --cases 100 --format json

Exit codes: 0 success, 1 mathematical failure, 2 input error, 3 resource cap
(including a threshold not found within --cap), 4 genericity ambiguity.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .asymptotics import (ThresholdReport, coloncor_threshold, fullthm_check, lemma_threshold,
                          n_invariant)
from .errors import (ColonLabError, EngineInconsistency, GenericityError, HypothesisNotMet,
                     ParseError, ResourceError)
from .fullness import classify, normalize_property
from .ideal import Ideal
from .parsing import parse_ideal_generators
from .ring import RingContext
from .suites import SUITES, RunConfig, run_suite

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_GENERICITY = 4

THRESHOLD_ARITY = {"lemma": ("I", "K"), "coloncor": ("I", "J", "K"), "fullthm": ("J", "K"), "ni": ("I",)}


class InputError(ColonLabError):
    pass


def parse_ideal(text: str, ring: RingContext) -> Ideal:
    gens = parse_ideal_generators(text, ring)
    gens = [g for g in gens if g]
    if any(g.constant_term() for g in gens):
        if any(g.constant_term() and len(g.raw) > 1 for g in gens):
            raise InputError(f"{text!r}: generators must lie in m or be constants")
        return Ideal.unit(ring)
    return Ideal(ring, gens)


def read_expressions(args: argparse.Namespace) -> list[str]:
    exprs = list(args.exprs)
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line and not line.startswith("#"):
                    exprs.append(line)
    return exprs


def config_from(args: argparse.Namespace) -> RunConfig:
    for name in ("trials", "window", "cap"):
        if getattr(args, name) < 1:
            raise InputError(f"--{name} must be >= 1")
    if args.cap < args.window:
        raise InputError("--cap must be >= --window")
    return RunConfig(characteristic=args.char, variables=args.vars, seed=args.seed,
                     trials=args.trials, window=args.window, cap=args.cap)


def emit(doc: dict, text: str, fmt: str):
    if fmt == "json":
        print(json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        print(text)


# -- classify --------------------------------------------------------------------------------


def cmd_classify(args: argparse.Namespace, cfg: RunConfig) -> int:
    ring = cfg.ring
    exprs = read_expressions(args)
    if not exprs:
        raise InputError("classify needs at least one ideal expression")
    ideals = [parse_ideal(e, ring) for e in exprs]
    for e, i in zip(exprs, ideals):
        if i.is_unit():
            raise InputError(f"{e!r}: generators must lie in m")
        if i.is_zero():
            raise InputError(f"{e!r}: the zero ideal has nothing to classify")
    rng = random.Random(cfg.seed)
    reports = [classify(i, cfg.trials, rng) for i in ideals]
    lines = []
    for r in reports:
        lines.append(str(r.ideal))
        for key in ("m_full", "full", "weakly_m_full", "burch"):
            lines.append(f"  {key:14s} {str(getattr(r, key)).lower()}")
        lines.append(f"  sampled forms  {', '.join(str(f) for f in r.sampled_forms)}")
        lines.append(f"  I:m            {r.witness_colons['I:m']}")
        lines.append(f"  Im:m           {r.witness_colons['Im:m']}")
    doc = {"command": "classify", "config": cfg.to_dict(), "results": [r.to_dict() for r in reports]}
    emit(doc, "\n".join(lines), args.format)
    return EXIT_OK


# -- threshold -------------------------------------------------------------------------------


def _threshold_text(rep: ThresholdReport) -> str:
    if rep.found:
        head = f"threshold {rep.threshold}"
    else:
        head = f"threshold not found <= {rep.cap}"
    trace = " ".join(f"{n}:{'T' if ok else 'F'}" for n, ok in rep.trace)
    lines = [f"formula   {rep.formula_id}", head,
             f"HEURISTIC holds on a window of {rep.window} past the threshold; evidence, not proof",
             f"trace     {trace}"]
    for k in sorted(rep.details):
        lines.append(f"{k:9s} {rep.details[k]}")
    return "\n".join(lines)


def cmd_threshold(args: argparse.Namespace, cfg: RunConfig) -> int:
    ring = cfg.ring
    exprs = read_expressions(args)
    need = THRESHOLD_ARITY[args.formula]
    if len(exprs) != len(need):
        raise InputError(f"{args.formula} takes {len(need)} ideal(s) ({', '.join(need)}), got {len(exprs)}")
    ideals = [parse_ideal(e, ring) for e in exprs]
    rng = random.Random(cfg.seed)
    doc: dict = {"command": "threshold", "config": cfg.to_dict(),
                 "inputs": dict(zip(need, (str(i) for i in ideals)))}
    if args.formula == "lemma":
        rep = lemma_threshold(ideals[0], ideals[1], cfg.trials, cfg.window, cfg.cap, rng)
    elif args.formula == "coloncor":
        rep = coloncor_threshold(ideals[0], ideals[1], ideals[2], cfg.window, cfg.cap)
    elif args.formula == "fullthm":
        if not args.property:
            raise InputError("fullthm needs --property")
        _, rep = fullthm_check(ideals[0], ideals[1], normalize_property(args.property), cfg.trials,
                               cfg.window, cfg.cap, rng)
    else:
        if args.index is None:
            raise InputError("ni needs --index 1, 2 or 3")
        rep = n_invariant(ideals[0], args.index, cfg.trials, cfg.window, cfg.cap, rng)
    doc["report"] = rep.to_dict()
    emit(doc, _threshold_text(rep), args.format)
    return EXIT_OK if rep.found else EXIT_RESOURCE


# -- verify ----------------------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.cases is not None and args.cases < 0:
        raise InputError("--cases must be >= 0")
    report = run_suite(args.suite, args.cases, cfg)
    doc = {"command": "verify", **report.to_dict()}
    lines = [f"suite     {report.suite}", f"anchor    {report.anchor}", f"seed      {cfg.seed}"]
    for c in report.cases:
        extra = f" (re-run {c.reruns}x)" if c.reruns else ""
        err = f" {c.data['error']}" if "error" in c.data else ""
        lines.append(f"  case {c.index:4d} {'pass' if c.passed else 'FAIL'}{extra}{err}")
    lines.append(f"{report.passed}/{len(report.cases)} passed, {report.genericity_events} genericity events")
    emit(doc, "\n".join(lines), args.format)
    return EXIT_OK if report.ok else EXIT_FAILURE


# -- entry point -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, default=32003, help="field characteristic (prime)")
    common.add_argument("--vars", default="x,y", help="comma-separated variable names")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=3, help="linear forms sampled per Monte Carlo test")
    common.add_argument("--window", type=int, default=5)
    common.add_argument("--cap", type=int, default=40)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="colonlab", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="m-full / full / weakly m-full / Burch")
    p.add_argument("exprs", nargs="*", metavar="IDEAL")
    p.add_argument("--file", help="read one ideal expression per line")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("threshold", parents=[common], help="search for an eventual-stabilization threshold")
    p.add_argument("formula", choices=sorted(THRESHOLD_ARITY))
    p.add_argument("exprs", nargs="*", metavar="IDEAL")
    p.add_argument("--file", help="read one ideal expression per line")
    p.add_argument("--index", type=int, choices=(1, 2, 3), help="which n_i for the ni formula")
    p.add_argument("--property", help="m-full, full or weakly-m-full (fullthm)")
    p.set_defaults(handler=cmd_threshold)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=list(SUITES))
    p.add_argument("--cases", type=int, help="number of random cases (suite default if omitted)")
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from(args)
        return args.handler(args, cfg)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GenericityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GENERICITY
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except EngineInconsistency as exc:
        print(f"engine inconsistency: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (InputError, HypothesisNotMet, ColonLabError, ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
