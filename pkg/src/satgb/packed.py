"""Packed integer term representation for the division hot path.

A term is represented by two big integers:

* ``ok`` — the ordering key: the rows of a nonnegative integer matrix
  realization of the ordering, dotted with the exponent vector and packed
  into fixed-width fields, most significant row first, with a final field
  holding (rank - 1 - component). Integer comparison of ``ok`` values is
  exactly the term ordering, and multiplying by a ring term is integer
  addition (module shifts enter as a per-component addend that cancels in
  multiplier differences).

* ``px`` — the exponent vector itself in fixed-width fields plus a
  component field. Divisibility of power products within one component is
  the classic guard-bit test: ``((px | GUARD) - other) & GUARD == GUARD``.

Only orderings with a nonnegative row realization pack; ``codec_for``
returns None otherwise and callers fall back to tuple keys. DegRevLex
packs after the standard transform: at equal total degree, comparing
``-e_j`` is the same as comparing ``deg - e_j``, which is nonnegative.

Fields are 32 bits wide and encoded values are capped well below the
guard bit; ``check_exponents`` enforces the cap so overflow aborts with a
diagnostic instead of corrupting neighbouring fields.
"""

from __future__ import annotations

from .core import RingContext, Term
from .errors import DomainError

FIELD = 32
LIMIT = 1 << 24  # per-field cap enforced on every basis element


def _base_rows(kind, matrix, n):
    ident = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    ones = (1,) * n
    if kind == "lex":
        return ident
    if kind == "deglex":
        return [ones, *ident[: n - 1]]
    if kind == "degrevlex":
        # deg, then deg - e_{n-1}, deg - e_{n-2}, ...: nonnegative and
        # order-equivalent to the usual reversed negated rows
        rows = [ones]
        for i in range(n - 1):
            rows.append(tuple(0 if j == n - 1 - i else 1 for j in range(n)))
        return rows
    if kind == "matrix":
        if any(v < 0 for row in matrix for v in row):
            return None
        return [tuple(row) for row in matrix]
    return None


def rows_for(order, ctx: RingContext):
    """Nonnegative comparison rows over the full exponent width, or None."""
    width = ctx.width
    m = ctx.m
    n = ctx.n
    base = getattr(order, "base", None)
    if base is None:  # plain OrderSpec on an unhomogenized ring
        if m != 0:
            return None
        return _base_rows(order.kind, order.matrix, n)
    g = order.grading
    if any(v < 0 for row in g.weights for v in row):
        return None
    if any(v < 0 for delta in g.shifts for v in delta):
        return None
    xrows = _base_rows(base.kind, base.matrix, n)
    if xrows is None:
        return None
    rows = []
    for k in range(m):
        yslot = tuple(1 if j == k else 0 for j in range(m))
        rows.append(yslot + tuple(g.weights[k]))
    for row in xrows:
        rows.append((0,) * m + tuple(row))
    return rows


class PackedCodec:
    __slots__ = (
        "ctx", "rows", "width", "rank", "nrows",
        "ok_shifts", "px_shifts", "comp_shift", "guard", "shift_addend",
    )

    def __init__(self, rows, ctx: RingContext, shifts=None):
        self.ctx = ctx
        self.rows = rows
        self.width = ctx.width
        self.rank = ctx.rank
        self.nrows = len(rows)
        # ok fields: row 0 most significant, component field least
        self.ok_shifts = [FIELD * (self.nrows - i) for i in range(self.nrows)]
        self.px_shifts = [FIELD * (i + 1) for i in range(self.width)]
        self.comp_shift = 0
        guard = 0
        for i in range(self.width + 1):
            guard |= 1 << (FIELD * i + FIELD - 1)
        self.guard = guard
        self.shift_addend = []
        for comp in range(ctx.rank):
            add = ctx.rank - 1 - comp
            if shifts is not None:  # the first m rows are the degree rows
                for k, d in enumerate(shifts[comp]):
                    add += d << self.ok_shifts[k]
            self.shift_addend.append(add)

    def mult_key(self, exps) -> int:
        """Ordering-key addend of a ring multiplier (no component, no shift)."""
        ok = 0
        for row, sh in zip(self.rows, self.ok_shifts):
            ok += sum(w * e for w, e in zip(row, exps)) << sh
        return ok

    def mult_px(self, exps) -> int:
        px = 0
        for e, sh in zip(exps, self.px_shifts):
            px += e << sh
        return px

    def encode(self, t: Term) -> tuple[int, int]:
        ok = self.mult_key(t.exps) + self.shift_addend[t.comp]
        px = self.mult_px(t.exps) + t.comp
        return ok, px

    def decode_px(self, px: int) -> Term:
        exps = tuple((px >> sh) & ((1 << FIELD) - 1) for sh in self.px_shifts)
        return Term(exps, px & ((1 << FIELD) - 1))

    def decode_exps(self, px: int) -> tuple[int, ...]:
        return tuple((px >> sh) & ((1 << FIELD) - 1) for sh in self.px_shifts)

    def check_exponents(self, exps) -> None:
        if any(e >= LIMIT for e in exps):
            raise DomainError("exponent overflow: packed field capacity exceeded")


def codec_for(order, ctx: RingContext) -> PackedCodec | None:
    rows = rows_for(order, ctx)
    if rows is None:
        return None
    # key fields must stay clear of their neighbours even for exponents at
    # the enforced cap; huge matrix entries fall back to tuple keys
    if any(sum(row) * LIMIT >= 1 << (FIELD - 1) for row in rows):
        return None
    shifts = order.grading.shifts if getattr(order, "grading", None) is not None else None
    return PackedCodec(rows, ctx, shifts)
