"""Linear-time max-min dispersion of points on sorted disjoint intervals.

Intervals are scanned left to right. Each new interval gets a tentative point
as far left as the current separation ``d_min`` allows; when it does not fit,
``d_min`` shrinks and earlier points slide left implicitly. The critical list
is a deque of interval indices whose left endpoints bound that sliding; it is
trimmed from the front (points that stop at their left end are finalized) and
from the rear (indices dominated by the new one), so every index enters and
leaves at most once.

The scan runs on integers: coordinates are multiplied by their common
denominator, ``d_min`` is kept as ``dn / dd`` with ``dd`` an index gap (or 0
for unbounded), and every slope test is a cross-multiplication. Exact
Fractions are only built when a caller reads the output.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from ._exact import common_scale, scaled_ints
from .model import (
    UNBOUNDED,
    InitialBound,
    InternalConsistencyError,
    LineInstance,
    LinePair,
    RationalPoints,
    Solution,
    SolverStats,
    UnboundedCertificate,
    as_rational,
)

__all__ = [
    "CriticalList",
    "SolverState",
    "InvariantReport",
    "InvariantViolation",
    "solve_line",
    "trace_line",
    "step",
    "rear_processing",
    "front_processing",
    "finalize_tail",
    "check_invariants",
]


class CriticalList(deque):
    """Interval indices ``k_s < ... < k_t`` whose left-endpoint slopes strictly decrease."""


class SolverState:
    """Mutable scan state over integer-scaled coordinates (0-based indices).

    ``pnum[j] / pden[j]`` holds the finalized point of interval ``j``; the
    finalized points always form a prefix ending at the critical list front.
    """

    __slots__ = (
        "lefts", "rights", "n", "i", "dn", "dd", "bound",
        "i_star", "j_star", "critical", "pnum", "pden", "p_last",
        "pushes", "pops",
    )

    def __init__(self, lefts, rights, bound: Optional[tuple[int, int]] = None):
        if not lefts or len(lefts) != len(rights):
            raise ValueError("need matching, non-empty endpoint lists")
        self.lefts = lefts
        self.rights = rights
        self.n = len(lefts)
        self.bound = bound
        # dd == 0 encodes an unbounded d_min.
        self.dn, self.dd = bound if bound is not None else (1, 0)
        self.i = 1
        self.i_star = self.j_star = 0
        self.critical = CriticalList([0])
        self.pnum = [lefts[0]]
        self.pden = [1]
        self.p_last = (lefts[0], 1)
        self.pushes = 1
        self.pops = 0

    @property
    def done(self) -> bool:
        return self.i >= self.n

    @property
    def d_min(self) -> tuple[int, int]:
        return self.dn, self.dd

    def stats(self) -> SolverStats:
        return SolverStats(
            intervals=self.i, pushes=self.pushes, pops=self.pops, finalized=len(self.pnum)
        )


def _trim_rear(crit: CriticalList, L, i: int) -> int:
    li = L[i]
    popped = 0
    while len(crit) > 1:
        kt = crit[-1]
        kp = crit[-2]
        lp = L[kp]
        if (L[kt] - lp) * (i - kp) > (li - lp) * (kt - kp):
            break
        crit.pop()
        popped += 1
    crit.append(i)
    return popped


def _trim_front(crit: CriticalList, L, ri, i: int, pnum, pden) -> int:
    popped = 0
    while len(crit) > 1:
        k0 = crit[0]
        k1 = crit[1]
        l0 = L[k0]
        rise = L[k1] - l0
        run = k1 - k0
        if rise * (i - k0) <= (ri - l0) * run:
            break
        l0 *= run
        for j in range(k0 + 1, k1 + 1):
            pnum.append(l0 + rise * (j - k0))
            pden.append(run)
        crit.popleft()
        popped += 1
    return popped


def rear_processing(state: SolverState, i: int) -> None:
    """Drop rear indices whose slope from their predecessor is not steeper
    than the slope to ``i``, then append ``i``."""
    state.pops += _trim_rear(state.critical, state.lefts, i)
    state.pushes += 1


def front_processing(state: SolverState, i: int) -> None:
    """Finalize front runs that would reach their left ends before ``r_i`` binds."""
    state.pops += _trim_front(
        state.critical, state.lefts, state.rights[i], i, state.pnum, state.pden
    )


def step(state: SolverState) -> str:
    """Process interval ``state.i`` and return the branch taken.

    ``"A"``: the next point fits at ``l_i``; earlier implicit points are
    finalized and the critical list restarts at ``i``. ``"B"``: the point lands
    at ``p_{i-1} + d_min`` inside the interval. ``"C"``: it is pinned at
    ``r_i`` and ``d_min`` decreases.
    """
    return _scan(state, state.i + 1)


def _scan(state: SolverState, stop: int) -> str:
    # Hot loop behind step(); state fields live in locals and are written back.
    L = state.lefts
    R = state.rights
    crit = state.critical
    pnum = state.pnum
    pden = state.pden
    append_num = pnum.append
    append_den = pden.append
    dn, dd = state.dn, state.dd
    i_star, j_star = state.i_star, state.j_star
    pushes = pops = 0
    p_last = state.p_last
    branch = ""
    for i in range(state.i, stop):
        ks = crit[0]
        li = L[i]
        if dd:
            # (p_{i-1} + d_min) * dd, using p_{i-1} = l_ks + d_min * (i-1-ks)
            lks = L[ks] * dd
            reach = lks + dn * (i - ks)
            if reach <= li * dd:
                if i - ks > 1:
                    for j in range(ks + 1, i):
                        append_num(lks + dn * (j - ks))
                        append_den(dd)
                append_num(li)
                append_den(1)
                pops += len(crit)
                crit.clear()
                crit.append(i)
                pushes += 1
                p_last = (li, 1)
                branch = "A"
                continue
            if reach <= R[i] * dd:
                p_last = (reach, dd)
                pops += _trim_rear(crit, L, i)
                pushes += 1
                branch = "B"
                continue
        ri = R[i]
        p_last = (ri, 1)
        if len(crit) > 1:
            pops += _trim_front(crit, L, ri, i, pnum, pden)
        ks = crit[0]
        dn = ri - L[ks]
        dd = i - ks
        i_star, j_star = ks, i
        pops += _trim_rear(crit, L, i)
        pushes += 1
        branch = "C"
    state.dn, state.dd = dn, dd
    state.i_star, state.j_star = i_star, j_star
    state.p_last = p_last
    state.pushes += pushes
    state.pops += pops
    state.i = max(state.i, stop)
    return branch


def finalize_tail(state: SolverState) -> None:
    """Materialize the points still implied by the critical list front."""
    if not state.done:
        raise ValueError("finalize_tail called before all intervals were processed")
    ks = state.critical[0]
    dn, dd = state.dn, state.dd
    lks = state.lefts[ks] * dd
    for j in range(ks + 1, state.n):
        state.pnum.append(lks + dn * (j - ks))
        state.pden.append(dd)


# ---------------------------------------------------------------------------
# Instrumentation


@dataclass
class InvariantResult:
    name: str
    passed: bool
    counterexample: Optional[tuple] = None


@dataclass
class InvariantReport:
    after_interval: int  # 1-based index of the last processed interval
    results: list[InvariantResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[InvariantResult]:
        return [r for r in self.results if not r.passed]

    def __getitem__(self, name: str) -> InvariantResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def __str__(self):
        lines = [f"after interval {self.after_interval}:"]
        for r in self.results:
            mark = "ok  " if r.passed else "FAIL"
            extra = "" if r.passed else f"  counterexample={r.counterexample}"
            lines.append(f"  {mark} {r.name}{extra}")
        return "\n".join(lines)


class InvariantViolation(InternalConsistencyError):
    def __init__(self, report: InvariantReport):
        super().__init__(str(report))
        self.report = report


INVARIANT_NAMES = (
    "inv1_temporary_point",
    "inv2_certificate",
    "inv3_rear_is_last",
    "inv4_front_at_left",
    "inv5_finalized_prefix",
    "inv6_finalized_feasible",
    "inv7_finalized_gaps",
    "inv8_implicit_points",
    "inv9_priority",
    "obs1_slopes_decrease",
)


def check_invariants(state: SolverState, *, strict_priority: bool = True) -> InvariantReport:
    """Evaluate every scan invariant exactly; O(n^2) in the worst case.

    The priority property is tested as a strict inequality by default. The
    strict form cannot hold when three left endpoints are collinear in
    (index, coordinate) space: a slope tie leaves an evicted index exactly on
    the line, whichever way the tie is broken. ``strict_priority=False``
    accepts equality there. Counterexample tuples use 1-based indices.
    """
    L, R = state.lefts, state.rights
    last = state.i - 1
    crit = list(state.critical)
    ks = crit[0]
    dn, dd = state.dn, state.dd
    pnum, pden = state.pnum, state.pden
    out: list[InvariantResult] = []

    def record(name, cex):
        out.append(InvariantResult(name, cex is None, cex))

    # 1. the temporary point of interval i-1 lies in it and matches the run from k_s
    pn, pd = state.p_last
    cex = None
    if not (L[last] * pd <= pn <= R[last] * pd):
        cex = ("outside", last + 1, (pn, pd))
    elif dd and pn * dd != pd * (L[ks] * dd + dn * (last - ks)):
        cex = ("off-run", last + 1, (pn, pd))
    elif not dd and (last != ks or pn != L[ks] * pd):
        cex = ("unbounded-but-moved", last + 1, (pn, pd))
    record("inv1_temporary_point", cex)

    # 2. d_min is the pair ratio (r_j* - l_i*) / (j* - i*), or still the initial value
    a, b = state.i_star, state.j_star
    cex = None
    if not 0 <= a <= b <= last:
        cex = ("range", a + 1, b + 1)
    elif a < b:
        if dd == 0 or dn * (b - a) != dd * (R[b] - L[a]):
            cex = ("ratio", a + 1, b + 1, (dn, dd))
    elif state.bound is None:
        if dd != 0:
            cex = ("expected-unbounded", (dn, dd))
    elif dn * state.bound[1] != dd * state.bound[0]:
        cex = ("expected-initial-bound", (dn, dd))
    record("inv2_certificate", cex)

    # 3. the rear element is i-1 and the list is strictly increasing
    cex = None
    if crit[-1] != last:
        cex = (crit[-1] + 1, last + 1)
    else:
        for x, y in zip(crit, crit[1:]):
            if x >= y:
                cex = ("unsorted", x + 1, y + 1)
                break
    record("inv3_rear_is_last", cex)

    # 4. p_{k_s} = l_{k_s}
    cex = None
    if len(pnum) <= ks:
        cex = ("not-finalized", ks + 1)
    elif pnum[ks] != L[ks] * pden[ks]:
        cex = (ks + 1, (pnum[ks], pden[ks]))
    record("inv4_front_at_left", cex)

    # 5. exactly P(1, k_s) is finalized
    record("inv5_finalized_prefix", None if len(pnum) == ks + 1 else (len(pnum), ks + 1))

    # 6. finalized points lie in their intervals
    cex = None
    for j in range(len(pnum)):
        if not (L[j] * pden[j] <= pnum[j] <= R[j] * pden[j]):
            cex = (j + 1, (pnum[j], pden[j]))
            break
    record("inv6_finalized_feasible", cex)

    # 7. adjacent finalized gaps are at least d_min
    cex = None
    for j in range(len(pnum) - 1):
        n0, d0, n1, d1 = pnum[j], pden[j], pnum[j + 1], pden[j + 1]
        if dd == 0 or (n1 * d0 - n0 * d1) * dd < dn * d0 * d1:
            cex = (j + 1, j + 2)
            break
    record("inv7_finalized_gaps", cex)

    # 8. implicit points l_ks + d_min (j - ks) lie in their intervals
    cex = None
    for j in range(ks + 1, last + 1):
        v = L[ks] * dd + dn * (j - ks)
        if dd == 0 or not (L[j] * dd <= v <= R[j] * dd):
            cex = (j + 1, (v, dd))
            break
    record("inv8_implicit_points", cex)

    # 9. priority property over every (h, j)
    cex = None
    for h in range(len(crit) - 1):
        kh, kn = crit[h], crit[h + 1]
        rise, run = L[kn] - L[kh], kn - kh
        for j in range(kh + 1, last + 1):
            if j == kn:
                continue
            lhs, rhs = rise * (j - kh), (L[j] - L[kh]) * run
            if lhs < rhs or (strict_priority and lhs == rhs):
                cex = (kh + 1, kn + 1, j + 1, "tie" if lhs == rhs else "reversed")
                break
        if cex:
            break
    record("inv9_priority", cex)

    # slopes between consecutive list elements strictly decrease
    cex = None
    for h in range(len(crit) - 2):
        k0, k1, k2 = crit[h], crit[h + 1], crit[h + 2]
        if not (L[k1] - L[k0]) * (k2 - k1) > (L[k2] - L[k1]) * (k1 - k0):
            cex = (k0 + 1, k1 + 1, k2 + 1)
            break
    record("obs1_slopes_decrease", cex)

    return InvariantReport(after_interval=last + 1, results=out)


# ---------------------------------------------------------------------------
# Driver


def _prepare(instance: LineInstance, initial_bound):
    lefts, rights = instance.lefts, instance.rights
    values = list(lefts) + list(rights)
    bound = None
    if initial_bound is not None:
        initial_bound = as_rational(initial_bound)
        if initial_bound <= 0:
            raise ValueError("initial_bound must be positive")
        values.append(initial_bound)
    scale = common_scale(values)
    state_bound = None
    if initial_bound is not None:
        state_bound = (initial_bound.numerator * (scale // initial_bound.denominator), 1)
    state = SolverState(scaled_ints(lefts, scale), scaled_ints(rights, scale), state_bound)
    return state, scale, initial_bound


def _d_increased(prev: tuple[int, int], cur: tuple[int, int]) -> bool:
    """Whether d_min went up between two steps (either may be unbounded)."""
    (pn, pd), (cn, cd) = prev, cur
    if cd == 0:
        return pd != 0
    if pd == 0:
        return False
    return cn * pd > pn * cd


def trace_line(
    instance: LineInstance, initial_bound=None
) -> Iterator[tuple[str, SolverState]]:
    """Yield ``(branch, state)`` after each processed interval (the first
    yield, branch ``"init"``, is the state after interval 1).

    The same state object is yielded every time; it is finalized after the
    last yield.
    """
    state, _, _ = _prepare(instance, initial_bound)
    yield "init", state
    while not state.done:
        branch = step(state)
        yield branch, state
    finalize_tail(state)


def run_scaled(
    lefts, rights, bound: Optional[tuple[int, int]] = None, *, check: bool = False
) -> SolverState:
    """Run the full scan on integer endpoints and return the finished state."""
    state = SolverState(lefts, rights, bound)
    _run(state, check)
    return state


def _run(state: SolverState, check: bool) -> None:
    if check:
        _checked_loop(state)
    else:
        _scan(state, state.n)
    finalize_tail(state)


def _checked_loop(state: SolverState) -> None:
    # slope ties are legitimate here, see check_invariants
    report = check_invariants(state, strict_priority=False)
    if not report.ok:
        raise InvariantViolation(report)
    while not state.done:
        prev = state.d_min
        step(state)
        report = check_invariants(state, strict_priority=False)
        if _d_increased(prev, state.d_min):
            report.results.append(InvariantResult("d_min_non_increasing", False, (prev, state.d_min)))
        if not report.ok:
            raise InvariantViolation(report)


def solve_line(
    instance: LineInstance, initial_bound=None, *, check_invariants: bool = False
) -> Solution:
    """Place one point per interval maximizing the minimum gap.

    With ``initial_bound`` B the scan starts from ``d_min = B`` instead of
    infinity and returns ``min(B, optimum)``. With ``check_invariants`` every
    scan invariant is evaluated after each interval (quadratic time) and an
    :class:`InvariantViolation` is raised on the first failure.
    """
    state, scale, bound = _prepare(instance, initial_bound)
    _run(state, check_invariants)
    return _solution(state, scale, bound)


def _solution(state: SolverState, scale: int, bound) -> Solution:
    if len(state.pnum) != state.n:
        raise InternalConsistencyError(
            f"{len(state.pnum)} points finalized for {state.n} intervals"
        )
    if state.dd == 0:
        d = UNBOUNDED
    else:
        d = Fraction(state.dn, state.dd * scale)
    if state.i_star < state.j_star:
        cert = LinePair(state.i_star + 1, state.j_star + 1, d)
    elif bound is not None:
        cert = InitialBound(bound)
    else:
        cert = UnboundedCertificate()
    return Solution(
        kind="line",
        points=RationalPoints(state.pnum, state.pden, scale),
        d_min=d,
        certificate=cert,
        stats=state.stats(),
    )
