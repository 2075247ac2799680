"""Command line front end.

Two subcommands:

* ``satgb compute <file>`` runs a single strategy on one input system and
  prints the reduced Groebner basis.
* ``satgb bench <file|cyclic:<k>>`` runs several strategies on the same
  system and prints a comparison table (or a JSON report).

Exit codes: 0 success, 2 parse error, 3 computation refused (the grading
is not positive for the requested ordering), 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time

from .bench import emit_report, generate_cyclic, run_benchmark, strategy_config
from .core import format_vector
from .engine import buchberger, compute_inhom_gb, render_transcript
from .errors import DomainError, EngineTimeout, NonPositiveGradingError
from .fields import QQ, PrimeField
from .modular import modular_reduced_gb
from .parser import ParseError, parse_system

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_REFUSED = 3
EXIT_TIMEOUT = 4

STRATEGY_FLAGS = {
    "sugar": "A",
    "homog": "H",
    "selfsat": "S",
}


def _load_problem(source: str, field_override=None):
    if source.startswith("cyclic:"):
        try:
            k = int(source.split(":", 1)[1])
        except ValueError:
            raise ParseError(f"bad cyclic size in {source!r}")
        return generate_cyclic(k, field_override) if field_override else generate_cyclic(k)
    with open(source, encoding="utf-8") as fh:
        return parse_system(fh.read(), name=source)


def _cmd_compute(args) -> int:
    problem = _load_problem(args.file)
    name = STRATEGY_FLAGS.get(args.strategy, args.strategy)
    cfg = strategy_config(name)
    if args.no_coprime:
        cfg = dataclasses.replace(cfg, coprime_criterion=False)
    if args.no_chain:
        cfg = dataclasses.replace(cfg, chain_criterion=False)
    deadline = time.monotonic() + args.budget if args.budget else None
    want_transcript = args.transcript is not None

    t0 = time.monotonic()
    if args.modular:
        if want_transcript:
            raise DomainError("--transcript is unavailable with --modular")
        if problem.ctx.field != QQ:
            raise DomainError("--modular applies only to rational inputs")
        reduced, stats = modular_reduced_gb(
            problem.generators, problem.order, problem.ctx, cfg, deadline
        )
        events = None
        tctx = problem.ctx
    elif cfg.remainder_mode == "plain":
        res = buchberger(
            problem.generators, problem.order, problem.ctx, cfg,
            deadline=deadline, want_transcript=want_transcript,
        )
        reduced = res.reduced
        stats = res.stats
        events = res.transcript
        tctx = problem.ctx
    else:
        ir = compute_inhom_gb(
            problem.generators, problem.order, problem.ctx, cfg,
            deadline=deadline, want_transcript=want_transcript,
        )
        reduced = ir.reduced
        stats = ir.homogeneous.stats
        events = ir.homogeneous.transcript
        tctx = ir.hctx
    elapsed = time.monotonic() - t0

    if args.transcript is not None:
        with open(args.transcript, "w", encoding="utf-8") as fh:
            fh.write(render_transcript(events, tctx))

    if args.json:
        payload = {
            "problem": problem.name or args.file,
            "field": problem.ctx.field.name,
            "ordering": problem.order.display(),
            "strategy": args.strategy,
            "basis": [format_vector(v, problem.ctx) for v in reduced],
            "stats": {
                "gbLen": stats.gb_len,
                "polyRed": stats.poly_red,
                "pairsIns": stats.pairs_ins,
                "wallTimeSec": elapsed,
            },
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"reduced Groebner basis ({len(reduced)} elements):")
        for v in reduced:
            print(f"  {format_vector(v, problem.ctx)}")
        if args.stats:
            print(
                f"gb_len={stats.gb_len} poly_red={stats.poly_red} "
                f"pairs_ins={stats.pairs_ins} time={elapsed:.2f}s"
            )
    return EXIT_OK


def _cmd_bench(args) -> int:
    field = PrimeField(args.prime) if args.prime else None
    problem = _load_problem(args.file, field)
    strategies = [s.strip() for s in args.strategies.split(",") if s.strip()]
    for s in strategies:
        strategy_config(s)  # validate names before doing any work
    report = run_benchmark(problem, strategies, budget=args.budget)
    sys.stdout.write(emit_report(report, "json" if args.json else "text"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satgb",
        description="Groebner bases of inhomogeneous ideals via self-saturating Buchberger variants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", help="compute one reduced Groebner basis")
    comp.add_argument("file", help="input system file")
    comp.add_argument(
        "--strategy",
        default="sugar",
        help="sugar | homog | selfsat | weaksat:<never|ymultiply|saturatefinal>",
    )
    comp.add_argument("--no-coprime", action="store_true", help="disable the coprime pair criterion")
    comp.add_argument("--no-chain", action="store_true", help="disable the chain pair criterion")
    comp.add_argument("--stats", action="store_true", help="print run counters")
    comp.add_argument("--transcript", metavar="PATH", help="write the event transcript to PATH")
    comp.add_argument("--json", action="store_true", help="emit a JSON result")
    comp.add_argument("--budget", type=float, metavar="SEC", help="abort after SEC seconds")
    comp.add_argument(
        "--modular",
        action="store_true",
        help="over Q, compute via prime fields with rational reconstruction "
        "(avoids rational intermediate swell; no transcript)",
    )
    comp.set_defaults(func=_cmd_compute)

    bench = sub.add_parser("bench", help="compare strategies on one system")
    bench.add_argument("file", help="input system file, or cyclic:<k>")
    bench.add_argument("--strategies", default="A,H,S", help="comma-separated strategy names")
    bench.add_argument("--budget", type=float, metavar="SEC", help="per-strategy time budget")
    bench.add_argument("--json", action="store_true", help="emit the JSON report schema")
    bench.add_argument("--prime", type=int, metavar="P", help="run cyclic systems over Z/P instead of Q")
    bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"parse error: cannot read {exc.filename}", file=sys.stderr)
        return EXIT_PARSE
    except NonPositiveGradingError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except EngineTimeout as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
