"""Term orderings: named and matrix base orderings plus their extensions.

Comparison is key-based: every ordering can hand out a function mapping a
module term to a tuple of ints, and terms compare the way their keys do.
The extension of a base ordering by a grading compares shifted degree
tuples lexicographically first and falls back to the base ordering on the
dehomogenized power product; the module rule is term-over-position with
ties broken towards the lower component index.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .core import RingContext, Term
from .errors import StructureError
from .grading import Grading, _row_rank, weight_of


@dataclass(frozen=True)
class OrderSpec:
    """A base ordering on power products: Lex, DegLex, DegRevLex, or an
    arbitrary non-singular integer matrix."""

    kind: str
    matrix: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "deglex", "degrevlex", "matrix"):
            raise StructureError(f"unknown ordering kind {self.kind!r}")
        if self.kind == "matrix":
            mat = self.matrix
            if mat is None or not mat:
                raise StructureError("matrix ordering needs a matrix")
            n = len(mat[0])
            if any(len(r) != n for r in mat) or len(mat) != n:
                raise StructureError("ordering matrix must be square")
            if _row_rank(mat) != n:
                raise StructureError("ordering matrix must be non-singular")

    def as_matrix(self, n: int) -> tuple[tuple[int, ...], ...]:
        """Canonical matrix form of a named ordering."""
        if self.kind == "matrix":
            if len(self.matrix) != n:
                raise StructureError("ordering matrix size does not match n")
            return self.matrix
        ident = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        if self.kind == "lex":
            return tuple(ident)
        ones = (1,) * n
        if self.kind == "deglex":
            return (ones, *ident[: n - 1])
        # degrevlex: all-ones row, then negated reversed identity rows
        rev = [tuple(-1 if j == n - 1 - i else 0 for j in range(n)) for i in range(n - 1)]
        return (ones, *rev)

    def base_key(self, n: int):
        """Key function on bare x-exponent tuples of length n."""
        if self.kind == "lex":
            return lambda e: e
        if self.kind == "deglex":
            return lambda e: (sum(e), *e)
        if self.kind == "degrevlex":
            return lambda e: (sum(e), *(-v for v in reversed(e)))
        rows = self.as_matrix(n)
        return lambda e: tuple(sum(w * x for w, x in zip(row, e)) for row in rows)

    def key_func(self, ctx: RingContext):
        """Module-term key over an unhomogenized context."""
        if ctx.m != 0:
            raise StructureError("base ordering applies to the unhomogenized ring")
        bk = self.base_key(ctx.n)
        return lambda t: (bk(t.exps), -t.comp)

    def display(self) -> str:
        return {"lex": "Lex", "deglex": "DegLex", "degrevlex": "DegRevLex", "matrix": "matrix"}[
            self.kind
        ]


LEX = OrderSpec("lex")
DEGLEX = OrderSpec("deglex")
DEGREVLEX = OrderSpec("degrevlex")


@dataclass(frozen=True)
class ExtendedOrder:
    """Extension of a base ordering by a grading: degree tuples compared
    lexicographically, ties decided by the base ordering on dehomogenized
    power products, final ties by ascending component."""

    base: OrderSpec
    grading: Grading

    def key_func(self, ctx: RingContext):
        g = self.grading
        m = ctx.m
        if m != g.m:
            raise StructureError("context homogenizing slots do not match the grading")
        if m == 0:
            raise StructureError("extended ordering applies to the homogenized ring")
        bk = self.base.base_key(ctx.n)
        shifts = g.shifts
        rows = g.weights

        def key(t: Term):
            exps = t.exps
            xs = exps[m:]
            delta = shifts[t.comp]
            deg = tuple(
                exps[k] + sum(w * e for w, e in zip(rows[k], xs)) + delta[k]
                for k in range(m)
            )
            return (deg, bk(xs), -t.comp)

        return key


def extend_order(spec: OrderSpec, g: Grading) -> ExtendedOrder:
    return ExtendedOrder(spec, g)


def compare(a: Term, b: Term, order, ctx: RingContext) -> int:
    """-1, 0 or 1 as a <, =, > b under the given ordering."""
    key = order.key_func(ctx)
    ka, kb = key(a), key(b)
    return (ka > kb) - (ka < kb)


def leading_parts(v, key=None):
    """Leading (coefficient, term); re-evaluated under ``key`` when given,
    otherwise the first summand by the sortedness invariant."""
    from .errors import DomainError

    if v.is_zero():
        raise DomainError("leading part of the zero vector")
    if key is None:
        return v.summands[0]
    return max(v.summands, key=lambda ct: key(ct[1]))


def _in_row_span(rows, target) -> bool:
    """Is ``target`` a rational linear combination of ``rows``?"""
    mat = [[Fraction(v) for v in r] for r in rows]
    vec = [Fraction(v) for v in target]
    ncols = len(vec)
    pivots = []
    for row in mat:
        row = row[:]
        for col, src in pivots:
            if row[col]:
                f = row[col] / src[col]
                row = [a - f * b for a, b in zip(row, src)]
        for col in range(ncols):
            if row[col]:
                pivots.append((col, row))
                break
    for col, src in pivots:
        if vec[col]:
            f = vec[col] / src[col]
            vec = [a - f * b for a, b in zip(vec, src)]
    return all(v == 0 for v in vec)


@dataclass(frozen=True)
class GradingReport:
    positive: bool
    deg_compatible: bool


def grading_checks(
    g: Grading, spec: OrderSpec, samples: int = 10_000, seed: int = 0, max_exp: int = 6
) -> GradingReport:
    """Positivity by the column rule; degree compatibility by randomized
    sampling, strengthened by the row-span criterion for matrix orderings."""
    n = g.n
    bk = spec.base_key(n)
    rng = random.Random(seed)
    compatible = True
    for _ in range(samples):
        e1 = tuple(rng.randrange(max_exp) for _ in range(n))
        e2 = tuple(rng.randrange(max_exp) for _ in range(n))
        d1 = weight_of(e1, g, homogenized=False)
        d2 = weight_of(e2, g, homogenized=False)
        if d1 > d2 and not bk(e1) > bk(e2):
            compatible = False
            break
    if compatible and spec.kind == "matrix":
        head = spec.matrix[: g.m]
        if not all(_in_row_span(head, row) for row in g.weights):
            compatible = False
    return GradingReport(positive=g.positive, deg_compatible=compatible)


def order_key(order, ctx: RingContext):
    """Uniform entry point: both OrderSpec and ExtendedOrder provide
    key_func; pick whichever matches the context."""
    return order.key_func(ctx)
