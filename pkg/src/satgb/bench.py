"""Benchmark corpus and the strategy-comparison runner.

A strategy row runs one configuration end to end and records the reduced
basis cardinality (measured on the homogenized side for the homogenizing
and self-saturating pipelines), the number of S-vectors reduced, the
number of candidate pairs formed, and wall time. Timings are reported but
never asserted: they are hardware-dependent.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from .core import ModuleVector, ring
from .engine import (
    STRATEGY_A,
    STRATEGY_H,
    STRATEGY_S,
    StrategyConfig,
    buchberger,
    compute_inhom_gb,
)
from .errors import DomainError, EngineTimeout
from .fields import QQ
from .modular import modular_reduced_gb
from .ordering import DEGREVLEX
from .parser import ProblemSpec

REPORT_VERSION = 1


def generate_cyclic(k: int, field=QQ) -> ProblemSpec:
    """The cyclic-k system: for d = 1..k-1 the sum over i of the product
    x_{i} x_{i+1} ... x_{i+d-1} (indices mod k), plus x_1...x_k - 1."""
    if k < 2:
        raise DomainError("cyclic systems need at least two indeterminates")
    names = tuple(f"x{i + 1}" for i in range(k))
    ctx = ring(names, field)
    key = DEGREVLEX.key_func(ctx)
    gens = []
    for d in range(1, k):
        acc = {}
        for i in range(k):
            exps = [0] * k
            for j in range(d):
                exps[(i + j) % k] += 1
            t = ctx.term(tuple(exps), 0)
            acc[t] = ctx.field.add(acc.get(t, ctx.field.zero), ctx.field.one)
        gens.append(ModuleVector.from_map(acc, ctx.field, key))
    top = ctx.term((1,) * k, 0)
    unit = ctx.term((0,) * k, 0)
    gens.append(
        ModuleVector.from_map({top: ctx.field.one, unit: ctx.field.neg(ctx.field.one)}, ctx.field, key)
    )
    return ProblemSpec(ctx=ctx, order=DEGREVLEX, generators=tuple(gens), name=f"cyclic-{k}")


NAMED_STRATEGIES = {
    "A": STRATEGY_A,
    "H": STRATEGY_H,
    "S": STRATEGY_S,
}


def strategy_config(name: str) -> StrategyConfig:
    if name in NAMED_STRATEGIES:
        return NAMED_STRATEGIES[name]
    if name.startswith("weaksat:"):
        policy = {
            "never": "never",
            "ymultiply": "ymultiply",
            "saturatefinal": "saturate_final",
        }.get(name.split(":", 1)[1])
        if policy is None:
            raise DomainError(f"unknown weak-saturation policy in {name!r}")
        return StrategyConfig(selection="sugar", remainder_mode="weaksat", weaksat_policy=policy)
    raise DomainError(f"unknown strategy {name!r}")


@dataclass
class StrategyRow:
    strategy: str
    gb_len: int
    poly_red: int
    pairs_ins: int
    wall_time: float
    timed_out: bool


@dataclass
class BenchReport:
    problem: str
    field: str
    ordering: str
    rows: list[StrategyRow]
    bases_agree: bool | None
    version: int = REPORT_VERSION


def run_strategy(
    problem: ProblemSpec,
    name: str,
    deadline: float | None = None,
    modular: bool | None = None,
):
    """Run one strategy; returns (reduced inhomogeneous GB, StrategyRow).

    Over Q the run goes through the multi-modular pipeline by default
    (see ``modular``): identical reduced basis, counters from the first
    prime run, and no rational intermediate swell."""
    cfg = strategy_config(name)
    t0 = time.monotonic()
    if modular is None:
        modular = problem.ctx.field == QQ
    if modular:
        final, stats = modular_reduced_gb(
            problem.generators, problem.order, problem.ctx, cfg, deadline
        )
    elif cfg.remainder_mode == "plain":
        res = buchberger(problem.generators, problem.order, problem.ctx, cfg, deadline=deadline)
        final = res.reduced
        stats = res.stats
    else:
        ir = compute_inhom_gb(problem.generators, problem.order, problem.ctx, cfg, deadline=deadline)
        final = ir.reduced
        stats = ir.homogeneous.stats
    row = StrategyRow(
        strategy=name,
        gb_len=stats.gb_len,
        poly_red=stats.poly_red,
        pairs_ins=stats.pairs_ins,
        wall_time=time.monotonic() - t0,
        timed_out=False,
    )
    return final, row


def run_benchmark(problem: ProblemSpec, strategies, budget: float | None = None) -> BenchReport:
    """One row per strategy; runs over budget are marked timed out, and the
    reduced inhomogeneous bases of all completed strategies are compared."""
    strategies = list(strategies)
    if not strategies:
        raise DomainError("no strategies requested")
    rows = []
    bases = []
    for name in strategies:
        deadline = time.monotonic() + budget if budget else None
        try:
            final, row = run_strategy(problem, name, deadline)
            bases.append([v.summands for v in final])
        except EngineTimeout:
            row = StrategyRow(name, 0, 0, 0, budget or 0.0, True)
        rows.append(row)
    agree = None
    if len(bases) >= 2:
        agree = all(b == bases[0] for b in bases[1:])
    return BenchReport(
        problem=problem.name or "input",
        field=problem.ctx.field.name,
        ordering=problem.order.display(),
        rows=rows,
        bases_agree=agree,
    )


def emit_report(report: BenchReport, fmt: str = "text") -> str:
    if fmt == "json":
        payload = {
            "version": report.version,
            "problem": report.problem,
            "field": report.field,
            "ordering": report.ordering,
            "basesAgree": report.bases_agree,
            "rows": [
                {
                    "strategy": r.strategy,
                    "gbLen": r.gb_len,
                    "polyRed": r.poly_red,
                    "pairsIns": r.pairs_ins,
                    "wallTimeSec": r.wall_time,
                    "timedOut": r.timed_out,
                }
                for r in report.rows
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt != "text":
        raise DomainError(f"unknown report format {fmt!r}")
    names = [r.strategy for r in report.rows]
    width = max(10, *(len(n) + 2 for n in names))
    head = f"{report.problem}  ({report.field}, {report.ordering})"
    lines = [head, " " * 12 + "".join(f"{n:>{width}}" for n in names)]

    def cell(r: StrategyRow, value) -> str:
        return f"{'timeout' if r.timed_out else value:>{width}}"

    lines.append("GB Len      " + "".join(cell(r, r.gb_len) for r in report.rows))
    lines.append("Poly Red    " + "".join(cell(r, r.poly_red) for r in report.rows))
    lines.append("Pairs Ins   " + "".join(cell(r, r.pairs_ins) for r in report.rows))
    lines.append(
        "Time        " + "".join(cell(r, f"{r.wall_time:.2f}s") for r in report.rows)
    )
    if report.bases_agree is not None:
        lines.append(
            "reduced bases agree" if report.bases_agree else "reduced bases DISAGREE"
        )
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> BenchReport:
    """Inverse of the json emitter (used for round-trip checks)."""
    payload = json.loads(text)
    return BenchReport(
        problem=payload["problem"],
        field=payload["field"],
        ordering=payload["ordering"],
        bases_agree=payload.get("basesAgree"),
        version=payload["version"],
        rows=[
            StrategyRow(
                strategy=r["strategy"],
                gb_len=r["gbLen"],
                poly_red=r["polyRed"],
                pairs_ins=r["pairsIns"],
                wall_time=r["wallTimeSec"],
                timed_out=r["timedOut"],
            )
            for r in payload["rows"]
        ],
    )
