"""Groebner bases of inhomogeneous ideals and submodules via weakly and
fully self-saturating variants of Buchberger's algorithm, with multigraded
sugar bookkeeping and a strategy benchmark harness."""

from .bench import (
    BenchReport,
    StrategyRow,
    emit_report,
    generate_cyclic,
    parse_report,
    run_benchmark,
    run_strategy,
    strategy_config,
)
from .core import (
    ModuleVector,
    RingContext,
    Term,
    format_vector,
    ring,
    vector,
    vector_combine,
)
from .engine import (
    STRATEGY_A,
    STRATEGY_H,
    STRATEGY_S,
    GBResult,
    InhomResult,
    RunStats,
    StrategyConfig,
    buchberger,
    compute_inhom_gb,
    interreduce,
    is_groebner_basis,
    remainder,
    render_transcript,
    s_vector,
    sat_remainder,
    weak_sat_remainder,
)
from .errors import (
    DomainError,
    EngineTimeout,
    NonPositiveGradingError,
    SatGBError,
    StructureError,
)
from .fields import QQ, PrimeField, RationalField
from .modular import modular_reduced_gb, next_prime, rational_reconstruct
from .grading import Grading, deg_w, standard_grading, top, top_deg
from .homog import (
    dehomogenize,
    homogenize,
    homogenize_generators,
    homogenized_context,
    is_homogeneous,
    plain_context,
    saturate,
    y_excess,
)
from .ordering import (
    DEGLEX,
    DEGREVLEX,
    LEX,
    ExtendedOrder,
    OrderSpec,
    compare,
    extend_order,
    grading_checks,
    order_key,
)
from .parser import ParseError, ProblemSpec, emit_problem, parse_system
from .sugar import init_sugar, pair_sugar, reduction_sugar, replacement_sweetener

__all__ = [
    "BenchReport",
    "StrategyRow",
    "emit_report",
    "generate_cyclic",
    "parse_report",
    "run_benchmark",
    "run_strategy",
    "strategy_config",
    "ModuleVector",
    "RingContext",
    "Term",
    "format_vector",
    "ring",
    "vector",
    "vector_combine",
    "STRATEGY_A",
    "STRATEGY_H",
    "STRATEGY_S",
    "GBResult",
    "InhomResult",
    "RunStats",
    "StrategyConfig",
    "buchberger",
    "compute_inhom_gb",
    "interreduce",
    "is_groebner_basis",
    "remainder",
    "render_transcript",
    "s_vector",
    "sat_remainder",
    "weak_sat_remainder",
    "DomainError",
    "EngineTimeout",
    "NonPositiveGradingError",
    "SatGBError",
    "StructureError",
    "QQ",
    "PrimeField",
    "RationalField",
    "modular_reduced_gb",
    "next_prime",
    "rational_reconstruct",
    "Grading",
    "deg_w",
    "standard_grading",
    "top",
    "top_deg",
    "dehomogenize",
    "homogenize",
    "homogenize_generators",
    "homogenized_context",
    "is_homogeneous",
    "plain_context",
    "saturate",
    "y_excess",
    "DEGLEX",
    "DEGREVLEX",
    "LEX",
    "ExtendedOrder",
    "OrderSpec",
    "compare",
    "extend_order",
    "grading_checks",
    "order_key",
    "ParseError",
    "ProblemSpec",
    "emit_problem",
    "parse_system",
    "init_sugar",
    "pair_sugar",
    "reduction_sugar",
    "replacement_sweetener",
]
