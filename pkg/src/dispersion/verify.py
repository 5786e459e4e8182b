"""Independent checking of a solution against its instance.

A solution is optimal when it is feasible for its claimed ``d_min`` and its
certificate is tight. A certificate names a stretch of consecutive intervals
whose span, divided by the number of gaps inside it, equals ``d_min``; no
placement can separate those points further, so nothing beats ``d_min``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .model import (
    UNBOUNDED,
    CycleInstance,
    CycleUniform,
    CycleWindow,
    InitialBound,
    Instance,
    LineInstance,
    LinePair,
    Solution,
    UnboundedCertificate,
)

__all__ = ["VerificationReport", "verify_solution"]


@dataclass
class VerificationReport:
    feasible: bool
    certificate_tight: bool
    problems: list[str] = field(default_factory=list)
    capped: bool = False  # optimality holds for min(initial bound, optimum)

    @property
    def optimal(self) -> bool:
        return self.feasible and self.certificate_tight

    def __str__(self):
        lines = [
            f"feasible:          {'yes' if self.feasible else 'no'}",
            f"certificate tight: {'yes' if self.certificate_tight else 'no'}",
            f"optimal:           {'yes' if self.optimal else 'no'}"
            + (" (capped by initial bound)" if self.capped and self.optimal else ""),
        ]
        lines += [f"  - {p}" for p in self.problems]
        return "\n".join(lines)


def verify_solution(instance: Instance, solution: Solution) -> VerificationReport:
    n = len(instance)
    if len(solution.points) != n:
        raise ValueError(f"solution has {len(solution.points)} points for {n} intervals")
    if isinstance(instance, LineInstance):
        return _verify_line(instance, solution)
    return _verify_cycle(instance, solution)


def _verify_line(inst: LineInstance, sol: Solution) -> VerificationReport:
    problems = []
    pts = list(sol.points)
    d = sol.d_min
    feasible = True
    for k, (p, iv) in enumerate(zip(pts, inst.intervals), start=1):
        if p not in iv:
            feasible = False
            problems.append(f"point {k} = {p} lies outside [{iv.left}, {iv.right}]")
    for k in range(len(pts) - 1):
        gap = pts[k + 1] - pts[k]
        if gap < d:
            feasible = False
            problems.append(f"gap between points {k + 1} and {k + 2} is {gap} < d_min {d}")

    cert = sol.certificate
    tight, capped = False, False
    if isinstance(cert, LinePair):
        i, j = cert.i_star, cert.j_star
        if 1 <= i < j <= len(pts):
            value = Fraction(inst.rights[j - 1] - inst.lefts[i - 1], j - i)
            tight = value == d and cert.value == d
            if not tight:
                problems.append(f"certificate pair ({i}, {j}) gives {value}, d_min is {d}")
        else:
            problems.append(f"certificate pair ({i}, {j}) out of range")
    elif isinstance(cert, InitialBound):
        tight = cert.value == d
        capped = True
        if not tight:
            problems.append(f"initial bound {cert.value} differs from d_min {d}")
    elif isinstance(cert, UnboundedCertificate):
        tight = len(pts) == 1 and d is UNBOUNDED
        if not tight:
            problems.append("unbounded certificate needs a single interval and unbounded d_min")
    else:
        problems.append(f"{type(cert).__name__} is not a line certificate")
    return VerificationReport(feasible, tight, problems, capped)


def _verify_cycle(inst: CycleInstance, sol: Solution) -> VerificationReport:
    problems = []
    pts = list(sol.points)
    d = sol.d_min
    c = inst.circumference
    n = len(pts)
    feasible = True
    for k, p in enumerate(pts):
        if not 0 <= p < c:
            feasible = False
            problems.append(f"point {k + 1} = {p} is outside [0, {c})")
        elif not inst.contains(k, p):
            arc = inst.intervals[k]
            feasible = False
            problems.append(
                f"point {k + 1} = {p} lies outside the arc from {arc.start} of length {arc.length}"
            )
    if n > 1:
        # the minimum pairwise cyclic distance is the smallest gap between
        # neighbours in sorted order, including the wrap-around gap
        order = sorted(p % c for p in pts)
        gaps = [b - a for a, b in zip(order, order[1:])] + [order[0] + c - order[-1]]
        least = min(gaps)
        if least < d:
            feasible = False
            problems.append(f"minimum cyclic distance {least} < d_min {d}")

    cert = sol.certificate
    tight = False
    if isinstance(cert, CycleUniform):
        uniform = Fraction(c, n)
        tight = cert.value == d == uniform
        if not tight:
            problems.append(f"uniform bound {uniform} does not match d_min {d}")
    elif isinstance(cert, CycleWindow):
        i, j, m = cert.i - 1, cert.j - 1, cert.steps
        if not (1 <= m <= n - 1 and 0 <= i < n and j == (i + m) % n):
            problems.append(f"window ({cert.i}, {cert.j}, {m}) is malformed")
        else:
            a, b = inst.intervals[i], inst.intervals[j]
            value = Fraction((b.start - a.start) % c + b.length, m)
            tight = value == d and cert.value == d
            if not tight:
                problems.append(f"window ({cert.i}, {cert.j}, {m}) gives {value}, d_min is {d}")
    elif isinstance(cert, UnboundedCertificate):
        tight = n == 1 and d is UNBOUNDED
        if not tight:
            problems.append("unbounded certificate needs a single interval and unbounded d_min")
    else:
        problems.append(f"{type(cert).__name__} is not a cycle certificate")
    return VerificationReport(feasible, tight, problems)
