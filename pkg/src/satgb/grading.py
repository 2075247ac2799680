"""Matrix gradings, degree tuples and componentwise maxima.

A grading is an integer matrix with m rows and n columns of full row rank,
together with one degree shift per module component. Degrees of terms are
tuples in Z^m; in the homogenized ring the extended matrix (I_m | W) applies,
which here just means the y-exponents (stored in the first m slots of the
exponent array) are added straight onto the weighted x-degrees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import StructureError


def _row_rank(rows) -> int:
    mat = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    col = 0
    for col in range(cols):
        pivot = None
        for i in range(rank, len(mat)):
            if mat[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        for i in range(rank + 1, len(mat)):
            f = mat[i][col] / pv
            if f:
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class Grading:
    """Weight matrix plus module shifts.

    weights: m rows of length n.
    shifts: one tuple in Z^m per module component (all zero by default).
    """

    weights: tuple[tuple[int, ...], ...]
    shifts: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        m = len(self.weights)
        if m < 1:
            raise StructureError("grading needs at least one weight row")
        n = len(self.weights[0])
        if any(len(row) != n for row in self.weights):
            raise StructureError("ragged weight matrix")
        if _row_rank(self.weights) != m:
            raise StructureError("weight matrix must have full row rank")
        if not self.shifts:
            object.__setattr__(self, "shifts", ((0,) * m,))
        if any(len(s) != m for s in self.shifts):
            raise StructureError("shift length must equal the number of weight rows")

    @property
    def m(self) -> int:
        return len(self.weights)

    @property
    def n(self) -> int:
        return len(self.weights[0])

    @property
    def rank(self) -> int:
        """Number of module components the shifts cover."""
        return len(self.shifts)

    @property
    def positive(self) -> bool:
        """Column rule: every column has a non-zero entry and the first
        non-zero entry (scanning rows top to bottom) is positive."""
        for j in range(self.n):
            for i in range(self.m):
                w = self.weights[i][j]
                if w != 0:
                    if w < 0:
                        return False
                    break
            else:
                return False
        return True


def standard_grading(n: int, rank: int = 1) -> Grading:
    return Grading(((1,) * n,), ((0,),) * rank)


def top(tuples) -> tuple[int, ...]:
    """Componentwise maximum of a non-empty sequence of equal-length tuples."""
    tuples = list(tuples)
    if not tuples:
        raise StructureError("top of an empty sequence")
    width = len(tuples[0])
    if any(len(t) != width for t in tuples):
        raise StructureError("top over tuples of unequal length")
    return tuple(max(t[k] for t in tuples) for k in range(width))


def weight_of(exps: tuple[int, ...], g: Grading, homogenized: bool) -> tuple[int, ...]:
    """Degree of a ring term (no component shift).

    With homogenized=True the exponent tuple has m leading y-slots that are
    added directly to the weighted x-part.
    """
    m = g.m
    if homogenized:
        if len(exps) != m + g.n:
            raise StructureError("exponent length does not match m+n")
        xs = exps[m:]
        return tuple(
            exps[k] + sum(w * e for w, e in zip(g.weights[k], xs)) for k in range(m)
        )
    if len(exps) != g.n:
        raise StructureError("exponent length does not match n")
    return tuple(sum(w * e for w, e in zip(row, exps)) for row in g.weights)


def deg_w(term, g: Grading, homogenized: bool) -> tuple[int, ...]:
    """Shifted degree of a module term t*e_i."""
    if term.comp >= g.rank:
        raise StructureError("component index outside the grading's shifts")
    base = weight_of(term.exps, g, homogenized)
    delta = g.shifts[term.comp]
    return tuple(a + b for a, b in zip(base, delta))


def top_deg(vec, g: Grading, homogenized: bool) -> tuple[int, ...]:
    """Componentwise maximum of the shifted degrees of a non-zero vector."""
    from .errors import DomainError

    if vec.is_zero():
        raise DomainError("top degree of the zero vector")
    return top(deg_w(t, g, homogenized) for _, t in vec.summands)
