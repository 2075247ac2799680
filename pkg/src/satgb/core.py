"""Power products, module terms and sparse module vectors.

Exponent tuples are dense, of length m+n, with the m homogenizing slots
first so dehomogenization is a slot truncation. Components are 0-based.
A ModuleVector keeps its summands sorted strictly descending under whatever
ordering it was built with; all arithmetic goes through ``from_map`` /
``vector_combine`` which re-establish the invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from .errors import DomainError, StructureError
from .grading import Grading

Exponents = tuple[int, ...]


def pp_one(width: int) -> Exponents:
    return (0,) * width


def _check_lengths(t1: Exponents, t2: Exponents) -> None:
    if len(t1) != len(t2):
        raise StructureError(f"exponent length mismatch: {len(t1)} vs {len(t2)}")


def pp_mul(t1: Exponents, t2: Exponents) -> Exponents:
    _check_lengths(t1, t2)
    return tuple(a + b for a, b in zip(t1, t2))


def pp_lcm(t1: Exponents, t2: Exponents) -> Exponents:
    _check_lengths(t1, t2)
    return tuple(a if a > b else b for a, b in zip(t1, t2))


def pp_quotient(t1: Exponents, t2: Exponents) -> Exponents | None:
    """t1/t2 when t2 divides t1 componentwise, else None. Callers branch
    on the None rather than catching an exception."""
    _check_lengths(t1, t2)
    out = []
    for a, b in zip(t1, t2):
        if b > a:
            return None
        out.append(a - b)
    return tuple(out)


def pp_divides(t1: Exponents, t2: Exponents) -> bool:
    """True when t1 divides t2 componentwise."""
    _check_lengths(t1, t2)
    return all(a <= b for a, b in zip(t1, t2))


class Term(NamedTuple):
    """A power product times a canonical basis vector e_comp."""

    exps: Exponents
    comp: int = 0


@dataclass(frozen=True)
class RingContext:
    """Ambient data: indeterminate names, module rank, grading, field.

    m == 0 is the plain (unhomogenized) ring; m > 0 adds that many
    homogenizing indeterminates in the leading exponent slots.
    """

    xnames: tuple[str, ...]
    ynames: tuple[str, ...]
    rank: int
    grading: Grading
    field: object

    def __post_init__(self):
        if len(self.xnames) < 1:
            raise StructureError("need at least one ordinary indeterminate")
        if self.rank < 1:
            raise StructureError("module rank must be at least 1")
        if self.grading.n != len(self.xnames):
            raise StructureError("grading width does not match indeterminate count")
        if self.ynames and len(self.ynames) != self.grading.m:
            raise StructureError("homogenizing indeterminate count must equal m")
        if self.grading.rank != self.rank:
            raise StructureError("grading shifts do not cover the module rank")
        if len(set(self.xnames) | set(self.ynames)) != len(self.xnames) + len(self.ynames):
            raise StructureError("indeterminate names must be distinct")

    @property
    def n(self) -> int:
        return len(self.xnames)

    @property
    def m(self) -> int:
        return len(self.ynames)

    @property
    def width(self) -> int:
        return self.m + self.n

    def check_term(self, t: Term) -> None:
        if len(t.exps) != self.width:
            raise StructureError("term width does not match the context")
        if not 0 <= t.comp < self.rank:
            raise StructureError("component outside the module rank")
        if any(e < 0 for e in t.exps):
            raise StructureError("negative exponent")

    def term(self, exps, comp: int = 0) -> Term:
        t = Term(tuple(exps), comp)
        self.check_term(t)
        return t


def ring(names, field, grading: Grading | None = None, rank: int = 1) -> RingContext:
    """Plain polynomial ring / free module over it (m = 0)."""
    names = tuple(names)
    if grading is None:
        from .grading import standard_grading

        grading = standard_grading(len(names), rank)
    return RingContext(names, (), rank, grading, field)


KeyFunc = Callable[[Term], tuple]


@dataclass(frozen=True)
class ModuleVector:
    """A finite sum of coefficient*term summands.

    Invariants: no zero coefficients, no repeated terms, summands sorted
    strictly descending under the ordering used at construction. The zero
    vector is the empty tuple.
    """

    summands: tuple

    def is_zero(self) -> bool:
        return not self.summands

    def leading(self):
        """Leading (coefficient, term) pair; first summand by sortedness."""
        if not self.summands:
            raise DomainError("leading part of the zero vector")
        return self.summands[0]

    def __len__(self) -> int:
        return len(self.summands)

    @staticmethod
    def zero() -> "ModuleVector":
        return ModuleVector(())

    @staticmethod
    def from_map(mapping, field, key: KeyFunc) -> "ModuleVector":
        items = [(c, t) for t, c in mapping.items() if c != field.zero]
        items.sort(key=lambda ct: key(ct[1]), reverse=True)
        return ModuleVector(tuple(items))

    def monic(self, field) -> "ModuleVector":
        if not self.summands:
            return self
        lc = self.summands[0][0]
        if lc == field.one:
            return self
        div = field.div
        return ModuleVector(tuple((div(c, lc), t) for c, t in self.summands))

    def scaled(self, coeff, exps: Exponents, field) -> "ModuleVector":
        """coeff * x^exps * self; term multiplication keeps components."""
        if coeff == field.zero:
            return ModuleVector(())
        mul = field.mul
        return ModuleVector(
            tuple((mul(coeff, c), Term(pp_mul(exps, t.exps), t.comp)) for c, t in self.summands)
        )

    def neg(self, field) -> "ModuleVector":
        neg = field.neg
        return ModuleVector(tuple((neg(c), t) for c, t in self.summands))

    def assert_sorted(self, key: KeyFunc) -> None:
        """Debug sweep: strict descending order under ``key``."""
        ks = [key(t) for _, t in self.summands]
        for a, b in zip(ks, ks[1:]):
            if not a > b:
                raise StructureError("summands not strictly descending")


def vector(ctx: RingContext, entries, key: KeyFunc) -> ModuleVector:
    """Build a vector from (coefficient, exponents, component) triples.
    Coefficients may be ints or field values; like terms are merged."""
    field = ctx.field
    acc: dict[Term, object] = {}
    for entry in entries:
        if len(entry) == 3:
            c, exps, comp = entry
        else:
            c, exps = entry
            comp = 0
        t = ctx.term(exps, comp)
        c = field.of(c) if isinstance(c, int) else c
        acc[t] = field.add(acc.get(t, field.zero), c)
    return ModuleVector.from_map(acc, field, key)


def vector_combine(
    field,
    key: KeyFunc,
    a,
    t: Exponents,
    u: ModuleVector,
    b,
    s: Exponents,
    v: ModuleVector,
) -> ModuleVector:
    """a * x^t * u  +  b * x^s * v, merged, zero-free, sorted under ``key``.

    This is the one primitive underlying S-vectors and reduction steps.
    """
    add, mul = field.add, field.mul
    acc: dict[Term, object] = {}
    if a != field.zero:
        for c, tm in u.summands:
            nt = Term(pp_mul(t, tm.exps), tm.comp)
            prev = acc.get(nt)
            acc[nt] = mul(a, c) if prev is None else add(prev, mul(a, c))
    if b != field.zero:
        for c, tm in v.summands:
            nt = Term(pp_mul(s, tm.exps), tm.comp)
            prev = acc.get(nt)
            acc[nt] = mul(b, c) if prev is None else add(prev, mul(b, c))
    return ModuleVector.from_map(acc, field, key)


def format_exps(exps: Exponents, ctx: RingContext) -> str:
    """Render a power product with x-names first, y-names after (so the
    single-grading homogenizer prints trailing, matching common usage)."""
    m = ctx.m
    parts = []
    for name, e in zip(ctx.xnames, exps[m:]):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    for name, e in zip(ctx.ynames, exps[:m]):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_vector(v: ModuleVector, ctx: RingContext) -> str:
    if v.is_zero():
        return "0"
    field = ctx.field
    chunks = []
    for i, (c, t) in enumerate(v.summands):
        mono = format_exps(t.exps, ctx)
        if ctx.rank > 1:
            mono = f"{mono}*e{t.comp + 1}" if mono != "1" else f"e{t.comp + 1}"
        neg = field.to_str(c).startswith("-")
        mag = field.to_str(field.neg(c)) if neg else field.to_str(c)
        coef = "" if mag == "1" and mono != "1" else mag
        body = mono if not coef else (f"{coef}*{mono}" if mono != "1" else coef)
        if i == 0:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)
