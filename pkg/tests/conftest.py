"""Shared fixtures and random-input generators for the test suite.

Randomized suites use explicit ``random.Random`` instances with fixed
seeds so every run exercises exactly the same inputs; hypothesis-based
tests use their own reproducible machinery on top of that.
"""

from __future__ import annotations

import random

import pytest

from satgb import (
    QQ,
    Grading,
    ModuleVector,
    PrimeField,
    extend_order,
    homogenize,
    homogenized_context,
    order_key,
    vector,
)

FIELDS = {"Q": QQ, "Zp": PrimeField(32003)}


@pytest.fixture
def qq():
    return QQ


def random_exponents(rng: random.Random, n: int, max_exp: int = 4):
    return tuple(rng.randrange(max_exp + 1) for _ in range(n))


def random_vector(rng: random.Random, ctx, key, *, terms=4, max_exp=4, max_coeff=5):
    """A random (possibly zero) vector in the plain context ``ctx``."""
    entries = []
    for _ in range(rng.randrange(1, terms + 1)):
        c = rng.randint(-max_coeff, max_coeff)
        if c == 0:
            c = 1
        exps = random_exponents(rng, ctx.width, max_exp)
        comp = rng.randrange(ctx.rank)
        entries.append((c, exps, comp))
    return vector(ctx, entries, key)


def random_nonzero_vector(rng, ctx, key, **kw):
    v = random_vector(rng, ctx, key, **kw)
    while v.is_zero():
        v = random_vector(rng, ctx, key, **kw)
    return v


def random_grading(rng: random.Random, n: int, m: int, rank: int = 1) -> Grading:
    """A random positive grading: first row strictly positive, later rows
    arbitrary small integers, retried until the rank condition holds."""
    while True:
        rows = [tuple(rng.randint(1, 3) for _ in range(n))]
        for _ in range(m - 1):
            rows.append(tuple(rng.randint(-2, 3) for _ in range(n)))
        shifts = tuple(tuple(rng.randint(0, 2) for _ in range(m)) for _ in range(rank))
        try:
            return Grading(tuple(rows), shifts)
        except Exception:
            continue


def homogeneous_sample(rng: random.Random, ctx, spec, *, terms=4, max_exp=4):
    """A random nonzero vector in the plain context together with its
    homogenization (the generic way to get homogeneous test inputs)."""
    pkey = spec.key_func(ctx)
    v = random_nonzero_vector(rng, ctx, pkey, terms=terms, max_exp=max_exp)
    hctx = homogenized_context(ctx)
    ext = extend_order(spec, ctx.grading)
    hkey = order_key(ext, hctx)
    return v, homogenize(v, hctx, hkey), hctx, ext


def vectors_equal(a: ModuleVector, b: ModuleVector) -> bool:
    return a.summands == b.summands
