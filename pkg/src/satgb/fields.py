"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Both field classes expose the arithmetic as plain function attributes
(``add``, ``sub``, ``mul``, ``neg``, ``div``) so hot loops can bind them
to locals without method-lookup overhead.
"""

from __future__ import annotations

import operator

from gmpy2 import invert, mpq, mpz


class RationalField:
    """The field Q. Values are gmpy2.mpq, always in lowest terms with a
    positive denominator (gmpy2 keeps them canonical)."""

    name = "Q"
    # hot loops may run division fraction-free: integer working values with
    # one deferred rational scale instead of per-operation normalization
    fraction_free = True

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)
        self.add = operator.add
        self.sub = operator.sub
        self.mul = operator.mul
        self.neg = operator.neg
        self.div = operator.truediv

    def of(self, num, den=1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return mpq(num, den)

    def to_str(self, v) -> str:
        return str(v)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


QQ = RationalField()


def _is_prime(p: int) -> bool:
    """Miller-Rabin: deterministic below 3.3e24, else 48 fixed witnesses."""
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    d = p - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    witnesses = (
        (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
        if p < 3317044064679887385961981
        else tuple(range(2, 50))
    )
    for a in witnesses:
        x = pow(a, d, p)
        if x == 1 or x == p - 1:
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field Z/p for a prime p. Values are ints in [0, p)."""

    fraction_free = False

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"Zp {p}"
        # beyond machine width gmpy2 integers multiply and reduce faster
        # than CPython ints, which dominates with multi-hundred-bit primes
        pm = mpz(p) if p.bit_length() > 64 else p
        inv = (lambda b: invert(b, pm)) if p.bit_length() > 64 else (
            lambda b: pow(b, -1, p)
        )
        self.zero = 0 * pm
        self.one = 1 % pm
        self.add = lambda a, b: (a + b) % pm
        self.sub = lambda a, b: (a - b) % pm
        self.mul = lambda a, b: (a * b) % pm
        self.neg = lambda a: (-a) % pm
        self.div = lambda a, b: (a * inv(b)) % pm
        self._inv = inv
        self._pm = pm

    def of(self, num, den=1):
        if den % self.p == 0:
            raise ZeroDivisionError("denominator vanishes mod p")
        return (num * self._inv(den)) % self._pm

    def to_str(self, v) -> str:
        return str(v)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Zp", self.p))
