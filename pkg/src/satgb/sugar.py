"""Sugar arithmetic: phantom degrees tracked alongside saturation shortcuts.

The sugar of a vector is the degree its companion (a y-power multiple)
would have had if no saturation had ever shortened it. Everything here is
plain tuple arithmetic in Z^m; the engine owns the bookkeeping.
"""

from __future__ import annotations

from .core import Exponents, ModuleVector, pp_lcm, pp_quotient
from .errors import DomainError
from .grading import Grading, top, top_deg, weight_of


def tuple_add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def init_sugar(u: ModuleVector, g: Grading, homogenized: bool) -> tuple[int, ...]:
    """Input vectors are their own companions: sugar is the true degree."""
    if u.is_zero():
        raise DomainError("sugar of the zero vector")
    return top_deg(u, g, homogenized)


def reduction_sugar(
    sugar_u: tuple[int, ...], t_x: Exponents, sugar_v: tuple[int, ...], g: Grading
) -> tuple[int, ...]:
    """Sugar after the step u - c*t'*v, where t_x is the y-free part of the
    multiplier t'."""
    return top([sugar_u, tuple_add(weight_of(t_x, g, homogenized=False), sugar_v)])


def multiplier_weight(t_exps: Exponents, g: Grading, m: int) -> tuple[int, ...]:
    """Degree of a ring-term multiplier that may carry y-slots (no shift)."""
    if m == 0:
        return weight_of(t_exps, g, homogenized=False)
    return weight_of(t_exps, g, homogenized=True)


def pair_sugar(
    sugar_a: tuple[int, ...],
    lt_a: Exponents,
    sugar_b: tuple[int, ...],
    lt_b: Exponents,
    g: Grading,
    m: int,
) -> tuple[int, ...]:
    """Sugar of the S-vector of two elements with the given leading power
    products: the degree of the S-vector of the sweetened companions."""
    lcm = pp_lcm(lt_a, lt_b)
    qa = pp_quotient(lcm, lt_a)
    qb = pp_quotient(lcm, lt_b)
    return top(
        [
            tuple_add(sugar_a, multiplier_weight(qa, g, m)),
            tuple_add(sugar_b, multiplier_weight(qb, g, m)),
        ]
    )


def replacement_sweetener(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """When y^a * V^sat is replaced by y^b * V^sat the companion becomes
    y^Top(a,b) * V^sat."""
    return top([a, b])
