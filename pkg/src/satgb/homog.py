"""Homogenization, dehomogenization and saturation of module vectors."""

from __future__ import annotations

from .core import ModuleVector, RingContext, Term
from .errors import DomainError, StructureError
from .grading import deg_w, top, top_deg


def homogenized_context(ctx: RingContext, ynames=None) -> RingContext:
    """The homogenization ring of a plain context: m leading y-slots.
    For a single grading the homogenizing indeterminate is called 'h'."""
    if ctx.m != 0:
        raise StructureError("context is already homogenized")
    m = ctx.grading.m
    if ynames is None:
        ynames = ("h",) if m == 1 else tuple(f"y{k + 1}" for k in range(m))
    return RingContext(ctx.xnames, tuple(ynames), ctx.rank, ctx.grading, ctx.field)


def plain_context(hctx: RingContext) -> RingContext:
    if hctx.m == 0:
        raise StructureError("context is not homogenized")
    return RingContext(hctx.xnames, (), hctx.rank, hctx.grading, hctx.field)


def is_homogeneous(v: ModuleVector, g, homogenized: bool = True) -> bool:
    if v.is_zero():
        return True
    degs = {deg_w(t, g, homogenized) for _, t in v.summands}
    return len(degs) == 1


def homogenize(
    v: ModuleVector, hctx: RingContext, key, target_deg: tuple[int, ...] | None = None
) -> ModuleVector:
    """Fill each term with the y-exponents lifting its shifted degree to the
    top degree (or a larger target). 0 homogenizes to 0."""
    if v.is_zero():
        return v
    g = hctx.grading
    m = hctx.m
    degs = [deg_w(t, g, homogenized=False) for _, t in v.summands]
    mu = top(degs)
    if target_deg is not None:
        if any(a < b for a, b in zip(target_deg, mu)):
            raise DomainError("target degree below the top degree")
        mu = tuple(target_deg)
    out = {}
    for (c, t), d in zip(v.summands, degs):
        ys = tuple(a - b for a, b in zip(mu, d))
        if any(e < 0 for e in ys):
            raise StructureError("inconsistent shifts: negative homogenizing exponent")
        out[Term(ys + t.exps, t.comp)] = c
    return ModuleVector.from_map(out, hctx.field, key)


def dehomogenize(V: ModuleVector, pctx: RingContext, key) -> ModuleVector:
    """Drop the y-slots; merge collapsing terms, drop cancellations."""
    field = pctx.field
    m = pctx.grading.m
    acc = {}
    add = field.add
    for c, t in V.summands:
        nt = Term(t.exps[m:], t.comp)
        prev = acc.get(nt)
        acc[nt] = c if prev is None else add(prev, c)
    return ModuleVector.from_map(acc, field, key)


def saturate(V: ModuleVector, hctx: RingContext, key) -> ModuleVector:
    """Dehomogenize then rehomogenize. For a single grading this strips the
    largest power of the homogenizing indeterminate dividing the vector."""
    if V.is_zero():
        return V
    g = hctx.grading
    if not is_homogeneous(V, g, homogenized=True):
        raise DomainError("saturation applies to homogeneous vectors")
    m = hctx.m
    if m == 1:
        r = min(t.exps[0] for _, t in V.summands)
        if r == 0:
            return V
        return ModuleVector(
            tuple((c, Term((t.exps[0] - r,) + t.exps[1:], t.comp)) for c, t in V.summands)
        )
    # Dehomogenized terms can't collapse here (same degree, distinct y-parts
    # force distinct x-parts), so any total key is fine for the intermediate.
    pctx = plain_context(hctx)
    deh = dehomogenize(V, pctx, lambda t: (t.exps, -t.comp))
    return homogenize(deh, hctx, key)


def homogenize_generators(vs, hctx: RingContext, key) -> list[ModuleVector]:
    out = []
    for v in vs:
        if v.is_zero():
            raise DomainError("zero generator cannot be homogenized")
        out.append(homogenize(v, hctx, key))
    return out


def y_excess(V: ModuleVector, hctx: RingContext) -> tuple[int, ...]:
    """Exponent tuple e with V = y^e * V^sat (degree of V minus degree of
    its saturation); vectors in a graded free module are y-power multiples
    of their saturations."""
    g = hctx.grading
    d = top_deg(V, g, homogenized=True)
    deh_deg = top(
        deg_w(Term(t.exps[hctx.m:], t.comp), g, homogenized=False) for _, t in V.summands
    )
    return tuple(a - b for a, b in zip(d, deh_deg))
