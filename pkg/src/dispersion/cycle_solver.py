"""Dispersion on a cycle by unrolling it onto a line twice.

The cycle is cut at the left end of interval 1, copied onto a line, and
copied again one circumference further right. The line scan runs on those
2n intervals starting from ``d_min = |C| / n`` (no placement on the cycle can
beat the uniform spacing). Some interval ``k`` in the first copy and its twin
``k + n`` both end up with their points at the left end; the n points between
them fold back onto the cycle as an optimal placement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._exact import common_scale, scaled_ints
from .line_solver import SolverState, run_scaled
from .model import (
    UNBOUNDED,
    CycleInstance,
    CycleUniform,
    CycleWindow,
    Interval,
    InternalConsistencyError,
    LineInstance,
    RationalPoints,
    Solution,
    SolverStats,
    UnboundedCertificate,
)

__all__ = ["DoubledInstance", "double_instance", "solve_cycle", "map_back"]


@dataclass(frozen=True)
class DoubledInstance:
    """Two copies of a cycle's intervals laid out on a line.

    ``line.intervals[i]`` and ``line.intervals[i + n]`` are copies of cycle
    interval ``i`` (0-based). ``offset`` is the cycle coordinate mapped to 0.
    """

    line: LineInstance
    offset: Fraction
    n: int
    circumference: Fraction

    def source(self, i: int) -> int:
        return i % self.n


def double_instance(cycle: CycleInstance) -> DoubledInstance:
    c = cycle.circumference
    origin = cycle.intervals[0].start
    first = [
        Interval(a.start - origin, a.start - origin + a.length) for a in cycle.intervals
    ]
    second = [Interval(iv.left + c, iv.right + c) for iv in first]
    return DoubledInstance(
        line=LineInstance(tuple(first + second)),
        offset=origin,
        n=len(first),
        circumference=c,
    )


def _fold_index(state: SolverState, n: int) -> int:
    """Largest k < n whose doubled point sits at its left end."""
    L, pnum, pden = state.lefts, state.pnum, state.pden
    for k in range(n - 1, -1, -1):
        if pnum[k] == L[k] * pden[k]:
            return k
    raise InternalConsistencyError("no point of the first copy is at its left end")


def map_back(state: SolverState, k: int, cycle: CycleInstance, scale: int) -> RationalPoints:
    """Fold the doubled points ``k .. k+n-1`` onto the cycle.

    Each point keeps its clockwise offset from its interval's left end; the
    result is in cycle coordinates in ``[0, |C|)``.
    """
    n = len(cycle)
    L, pnum, pden = state.lefts, state.pnum, state.pden
    starts = scaled_ints([a.start for a in cycle.intervals], scale)
    c = cycle.circumference
    c_scaled = c.numerator * (scale // c.denominator)
    num, den = [], []
    for i in range(n):
        src = i if i >= k else i + n
        d = pden[src]
        num.append((starts[i] * d + pnum[src] - L[src] * d) % (c_scaled * d))
        den.append(d)
    return RationalPoints(num, den, scale)


def solve_cycle(cycle: CycleInstance, *, check_invariants: bool = False) -> Solution:
    """Optimal dispersion on a cycle, certified by the uniform bound or a window.

    ``check_invariants`` instruments the underlying line scan.
    """
    n = len(cycle)
    c = cycle.circumference
    if n == 1:
        return Solution(
            kind="cycle",
            points=RationalPoints.of([cycle.intervals[0].start]),
            d_min=UNBOUNDED,
            certificate=UnboundedCertificate(),
            stats=SolverStats(intervals=0),
        )
    doubled = double_instance(cycle)
    line = doubled.line
    values = list(line.lefts) + list(line.rights) + [c, doubled.offset]
    values += [a.start for a in cycle.intervals]
    scale = common_scale(values)
    lefts = scaled_ints(line.lefts, scale)
    rights = scaled_ints(line.rights, scale)
    c_scaled = c.numerator * (scale // c.denominator)
    state = run_scaled(lefts, rights, bound=(c_scaled, n), check=check_invariants)

    k = _fold_index(state, n)
    if state.pnum[k + n] != lefts[k + n] * state.pden[k + n]:
        raise InternalConsistencyError(
            f"doubled point {k + n + 1} is not at its left end although point {k + 1} is"
        )
    points = map_back(state, k, cycle, scale)

    d = Fraction(state.dn, state.dd * scale)
    if d * n == c:
        cert = CycleUniform(d)
    else:
        a, b = state.i_star, state.j_star
        if not 0 < b - a < n:
            raise InternalConsistencyError(f"certificate window {a + 1}..{b + 1} spans n or more")
        cert = CycleWindow(i=a % n + 1, j=b % n + 1, steps=b - a, value=d)
    return Solution(kind="cycle", points=points, d_min=d, certificate=cert, stats=state.stats())
