"""Multi-modular computation of reduced Gröbner bases over the rationals.

Buchberger runs over Q can suffer severe intermediate coefficient swell:
normal forms along the way may carry rationals orders of magnitude larger
than anything in the final reduced basis.  The standard remedy (as used by
the mainstream computer-algebra systems) is to run the exact same
algorithm over one or more large prime fields, glue the residues with the
Chinese remainder theorem, recover rational coefficients by rational
reconstruction, and validate the candidate with an independent check
prime.  The combinatorial by-products (reduction and pair counters) are
taken from the first prime run; they do not depend on the prime unless the
prime is unlucky, and unlucky primes are discarded.

The pipeline is Monte Carlo in the usual sense: a candidate that passes
the check prime agrees with the true reduced basis unless every prime used
was unlucky simultaneously, which for the fixed ladder of >=62-bit primes
is overwhelmingly improbable.  The check verifies, modulo a fresh prime,
that the candidate is interreduced, is a Gröbner basis (every S-vector
reduces to zero), and that the original generators reduce to zero
against it.
"""

from __future__ import annotations

import time
from dataclasses import replace
from math import gcd, isqrt

from .core import ModuleVector
from .engine import STRATEGY_A, buchberger, compute_inhom_gb, remainder
from .errors import DomainError, EngineTimeout
from .fields import QQ, PrimeField, _is_prime

# Bit sizes for the computation primes.  The first rung is cheap and
# settles the combinatorial shape; later rungs are sized so that the
# cumulative modulus roughly doubles each time reconstruction fails.
PRIME_BITS_LADDER = (62, 640, 1408, 2944, 6016)

_CHECK_PRIME_BITS = 63

_prime_cache: dict[int, int] = {}


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    if n < 2:
        return 2
    n += 2 if n % 2 else 1
    while not _is_prime(n):
        n += 2
    return n


def _nth_prime_above(bits: int, skip: int = 0) -> int:
    """The (skip+1)-th prime above 2**bits, cached per bit size."""
    p = _prime_cache.get(bits)
    if p is None:
        p = next_prime(1 << bits)
        _prime_cache[bits] = p
    for _ in range(skip):
        p = next_prime(p)
    return p


def rational_reconstruct(a: int, m: int):
    """Wang's algorithm: the unique n/d with n*d bounded by m/2 and
    n/d == a (mod m), or None when no such fraction exists."""
    bound = isqrt(m // 2)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    if s1 > bound or gcd(r1, s1) != 1:
        return None
    return (r1, s1)


def crt_pair(a1: int, m1: int, a2: int, m2: int) -> int:
    """x mod m1*m2 with x == a1 (mod m1) and x == a2 (mod m2)."""
    return (a1 + m1 * ((a2 - a1) * pow(m1, -1, m2) % m2)) % (m1 * m2)


class _UnluckyPrime(Exception):
    pass


def _map_vectors(vectors, field):
    """Map rational-coefficient vectors into a prime field; a vanishing
    denominator or coefficient marks the prime unlucky."""
    out = []
    for v in vectors:
        summands = []
        for c, t in v.summands:
            try:
                img = field.of(int(c.numerator), int(c.denominator))
            except ZeroDivisionError:
                raise _UnluckyPrime
            if img == field.zero:
                raise _UnluckyPrime
            summands.append((img, t))
        out.append(ModuleVector(tuple(summands)))
    return out


def _support(vectors):
    return tuple(tuple(t for _, t in v.summands) for v in vectors)


def _run_once(gens, order, ctx, cfg, deadline):
    """One strategy run over the prime field already installed in ctx;
    returns (reduced inhomogeneous basis, stats) per the bench convention
    (counters from the homogeneous side for the saturating pipelines)."""
    if cfg.remainder_mode == "plain":
        res = buchberger(gens, order, ctx, cfg, deadline=deadline)
        return res.reduced, res.stats
    ir = compute_inhom_gb(gens, order, ctx, cfg, deadline=deadline)
    return ir.reduced, ir.homogeneous.stats


def _check_candidate(candidate, gens, order, ctx, bits, skip, deadline):
    """Validate a reconstructed basis against a fresh prime: mapped mod p
    it must be its own reduced Gröbner basis, and the original generators
    must reduce to zero against it."""
    p = _nth_prime_above(bits, skip)
    fieldp = PrimeField(p)
    ctxp = replace(ctx, field=fieldp)
    try:
        cand_p = _map_vectors(candidate, fieldp)
        gens_p = _map_vectors(gens, fieldp)
    except _UnluckyPrime:
        return False
    res = buchberger(cand_p, order, ctxp, STRATEGY_A, deadline=deadline)
    if [v.summands for v in res.reduced] != [v.summands for v in cand_p]:
        return False
    return all(
        remainder(g, cand_p, order, ctxp).is_zero() for g in gens_p
    )


def modular_reduced_gb(gens, order, ctx, cfg, deadline=None):
    """Reduced Gröbner basis over Q of the submodule generated by ``gens``
    via the multi-modular pipeline.  Returns (reduced basis, stats of the
    first prime run)."""
    runs = []  # (prime, reduced basis mod prime)
    stats = None
    signature = None
    skip = 0
    ladder = iter(PRIME_BITS_LADDER)
    while True:
        if deadline is not None and time.monotonic() > deadline:
            raise EngineTimeout("time budget exceeded")
        try:
            bits = next(ladder)
        except StopIteration:
            raise DomainError("modular reconstruction did not converge")
        for attempt in range(8):
            p = _nth_prime_above(bits, attempt)
            fieldp = PrimeField(p)
            ctxp = replace(ctx, field=fieldp)
            try:
                gens_p = _map_vectors(gens, fieldp)
            except _UnluckyPrime:
                continue
            reduced_p, stats_p = _run_once(gens_p, order, ctxp, cfg, deadline)
            sig = _support(reduced_p)
            if signature is None:
                signature, stats = sig, stats_p
            elif sig != signature:
                # disagreeing shape: restart from scratch on the larger run
                runs, signature, stats = [], sig, stats_p
            runs.append((p, reduced_p))
            break
        else:
            raise DomainError("could not find a usable prime")

        candidate = _reconstruct(runs, signature)
        if candidate is None:
            continue
        if _check_candidate(
            candidate, gens, order, ctx, _CHECK_PRIME_BITS, skip, deadline
        ):
            return candidate, stats
        skip += 1  # a fresh check prime next time


def _reconstruct(runs, signature):
    """CRT+rational reconstruction across the runs, or None on failure."""
    vectors = []
    for vi, support in enumerate(signature):
        summands = []
        for ti, term in enumerate(support):
            a, m = 0, 1
            for p, reduced_p in runs:
                a = crt_pair(a, m, int(reduced_p[vi].summands[ti][0]), p)
                m *= p
            rec = rational_reconstruct(a, m)
            if rec is None:
                return None
            summands.append((QQ.of(rec[0], rec[1]), term))
        vectors.append(ModuleVector(tuple(summands)))
    return vectors
