from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satgb import (
    QQ,
    generate_cyclic,
    modular_reduced_gb,
    next_prime,
    rational_reconstruct,
    run_strategy,
    strategy_config,
    vector,
)
from satgb.core import ring
from satgb.fields import _is_prime
from satgb.modular import PRIME_BITS_LADDER, _nth_prime_above, crt_pair
from satgb.ordering import DEGREVLEX
from satgb.parser import ProblemSpec


def _sieve(limit):
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, limit):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(limit) if flags[i]]


def test_is_prime_small_range():
    primes = set(_sieve(2000))
    for n in range(2000):
        assert _is_prime(n) == (n in primes)


def test_is_prime_large_known_values():
    assert _is_prime(2**61 - 1)  # Mersenne prime
    assert not _is_prime(2**67 - 1)  # 193707721 * 761838257287
    assert _is_prime(2**89 - 1)  # Mersenne prime


def test_next_prime_agrees_with_sieve():
    primes = _sieve(2000)
    for lo, hi in zip(primes, primes[1:]):
        assert next_prime(lo) == hi
    assert next_prime(1) == 2
    assert next_prime(2) == 3


@given(
    num=st.integers(min_value=-(10**18), max_value=10**18),
    den=st.integers(min_value=1, max_value=10**18),
)
@settings(max_examples=200, deadline=None)
def test_rational_reconstruction_roundtrip(num, den):
    g = gcd(num, den)
    if g:
        num, den = num // g, den // g
    m = next_prime(1 << 70) * next_prime(1 << 71)
    residue = num * pow(den, -1, m) % m
    assert rational_reconstruct(residue, m) == (num, den)


@given(
    x=st.integers(min_value=0, max_value=10**30),
)
@settings(max_examples=100, deadline=None)
def test_crt_pair_roundtrip(x):
    m1 = next_prime(1 << 50)
    m2 = next_prime(1 << 51)
    combined = crt_pair(x % m1, m1, x % m2, m2)
    assert combined % m1 == x % m1
    assert combined % m2 == x % m2
    assert 0 <= combined < m1 * m2


def test_reconstruction_fails_when_modulus_too_small():
    # a fraction whose numerator*denominator exceeds m/2 cannot come back
    m = next_prime(1 << 20)
    num, den = 12345677, 1 << 19
    residue = num * pow(den, -1, m) % m
    assert rational_reconstruct(residue, m) != (num, den)


@pytest.mark.parametrize("name", ["A", "H", "S"])
def test_modular_matches_direct_on_cyclic4(name):
    problem = generate_cyclic(4)
    fm, rm = run_strategy(problem, name, modular=True)
    fd, rd = run_strategy(problem, name, modular=False)
    assert [v.summands for v in fm] == [v.summands for v in fd]
    assert (rm.gb_len, rm.poly_red, rm.pairs_ins) == (
        rd.gb_len,
        rd.poly_red,
        rd.pairs_ins,
    )


def test_modular_is_default_over_q():
    problem = generate_cyclic(4)
    f_default, _ = run_strategy(problem, "A")
    f_direct, _ = run_strategy(problem, "A", modular=False)
    assert [v.summands for v in f_default] == [v.summands for v in f_direct]


def _two_var_problem(triples_first):
    ctx = ring(("x", "y"), QQ)
    key = DEGREVLEX.key_func(ctx)
    gens = (
        vector(ctx, triples_first, key),
        vector(ctx, [(1, (0, 2), 0), (-1, (1, 0), 0)], key),
    )
    return ProblemSpec(ctx=ctx, order=DEGREVLEX, generators=gens, name="t")


def test_modular_survives_unlucky_prime():
    # a generator coefficient equal to the first ladder prime vanishes
    # modulo it, so the pipeline must move on to the next prime
    p0 = _nth_prime_above(PRIME_BITS_LADDER[0])
    problem = _two_var_problem([(p0, (2, 0), 0), (-1, (0, 1), 0)])
    cfg = strategy_config("A")
    reduced, _ = modular_reduced_gb(
        problem.generators, problem.order, problem.ctx, cfg
    )
    direct, _ = run_strategy(problem, "A", modular=False)
    assert [v.summands for v in reduced] == [v.summands for v in direct]


def test_modular_big_rational_coefficients():
    # force coefficients beyond the first rung so CRT across two primes
    # and a second reconstruction round actually run
    big = (1 << 200) + 3
    problem = _two_var_problem([(big, (1, 0), 0), (1, (0, 1), 0)])
    cfg = strategy_config("A")
    reduced, _ = modular_reduced_gb(
        problem.generators, problem.order, problem.ctx, cfg
    )
    direct, _ = run_strategy(problem, "A", modular=False)
    assert [v.summands for v in reduced] == [v.summands for v in direct]
