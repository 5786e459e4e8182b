"""Brute-force ground truth and seeded instance generators.

None of this shares code with the solvers. The oracles work directly on
Fractions, run in quadratic time or worse, and are meant for instances of a
few hundred intervals at most.

Generators draw from numpy's ``PCG64`` bit generator seeded through
``numpy.random.default_rng(seed)``, so a ``(seed, config)`` pair always
yields the same instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np

from .model import (
    UNBOUNDED,
    CycleInstance,
    ExtendedValue,
    Instance,
    LineInstance,
)

__all__ = [
    "oracle_line_optimum",
    "feasible_line",
    "oracle_line_via_candidates",
    "oracle_cycle_optimum",
    "window_value",
    "GeneratorConfig",
    "gen_instance",
    "corpus",
]


def oracle_line_optimum(instance: LineInstance) -> ExtendedValue:
    """min over i < j of (r_j - l_i) / (j - i)."""
    lefts, rights = instance.lefts, instance.rights
    n = len(lefts)
    if n == 1:
        return UNBOUNDED
    return min(
        Fraction(rights[j] - lefts[i], j - i) for i in range(n) for j in range(i + 1, n)
    )


def feasible_line(instance: LineInstance, d) -> tuple[bool, Optional[list[Fraction]]]:
    """Leftmost greedy placement with gaps of at least ``d``.

    Returns ``(True, points)`` when every point fits, else ``(False, None)``.
    """
    d = Fraction(d)
    if d < 0:
        raise ValueError("d must be non-negative")
    points = []
    q = None
    for iv in instance.intervals:
        q = iv.left if q is None else max(iv.left, q + d)
        if q > iv.right:
            return False, None
        points.append(q)
    return True, points


def oracle_line_via_candidates(instance: LineInstance) -> ExtendedValue:
    """Largest pair ratio that the greedy decision procedure accepts."""
    lefts, rights = instance.lefts, instance.rights
    n = len(lefts)
    if n == 1:
        return UNBOUNDED
    candidates = sorted(
        {Fraction(rights[j] - lefts[i], j - i) for i in range(n) for j in range(i + 1, n)}
    )
    # feasibility is monotone in d: binary search for the last feasible candidate
    lo, hi = 0, len(candidates) - 1
    if not feasible_line(instance, candidates[0])[0]:
        raise AssertionError("smallest candidate infeasible; instance is not disjoint")
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if feasible_line(instance, candidates[mid])[0]:
            lo = mid
        else:
            hi = mid - 1
    return candidates[lo]


def window_value(cycle: CycleInstance, i: int, steps: int) -> Fraction:
    """Clockwise arc from the left end of interval ``i`` (0-based) to the right
    end of interval ``i + steps`` (mod n), divided by ``steps``."""
    n = len(cycle)
    if not 1 <= steps <= n - 1:
        raise ValueError("steps must be in [1, n-1]")
    j = (i + steps) % n
    a, b = cycle.intervals[i], cycle.intervals[j]
    arc = (b.start - a.start) % cycle.circumference + b.length
    return Fraction(arc, steps)


def oracle_cycle_optimum(cycle: CycleInstance) -> ExtendedValue:
    n = len(cycle)
    if n == 1:
        return UNBOUNDED
    best = Fraction(cycle.circumference, n)
    for i in range(n):
        for m in range(1, n):
            best = min(best, window_value(cycle, i, m))
    return best


# ---------------------------------------------------------------------------
# Generators


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters for :func:`gen_instance`.

    Endpoints are integers in ``[0, coord_max]`` divided by ``denominator``.
    For cycles the circumference is ``coord_max / denominator`` (the
    circumference rule) and the layout is rotated by a random offset.
    ``min_gap`` is the smallest spacing between consecutive intervals.
    """

    seed: int
    n: int
    kind: str = "line"
    coord_max: int = 200
    min_gap: Fraction = Fraction(0)
    allow_touching: bool = False
    allow_degenerate: bool = False
    denominator: int = 1


class UnsatisfiableConfig(ValueError):
    pass


def _sorted_endpoints(rng, count, span, strict_steps):
    """Non-decreasing integers in [0, span] with forced increments.

    ``strict_steps[k]`` is the minimum increment from endpoint k-1 to k.
    """
    need = np.cumsum(strict_steps, dtype=np.int64)
    room = span - int(need[-1])
    if room < 0:
        raise UnsatisfiableConfig(
            f"cannot fit {count // 2} intervals with the requested gaps in [0, {span}]"
        )
    base = np.sort(rng.integers(0, room, size=count, endpoint=True))
    return base + need


def _steps(n, cfg, gap_units):
    # endpoint k=2i is l_i, k=2i+1 is r_i; step k goes from endpoint k-1 to k
    steps = np.zeros(2 * n, dtype=np.int64)
    inner = 0 if cfg.allow_degenerate else 1
    between = max(gap_units, 0 if cfg.allow_touching else 1)
    steps[1::2] = inner
    steps[2::2] = between
    return steps


def gen_instance(config: GeneratorConfig) -> Instance:
    cfg = config
    if cfg.n < 1:
        raise UnsatisfiableConfig("n must be at least 1")
    if cfg.kind not in ("line", "cycle"):
        raise UnsatisfiableConfig(f"unknown kind {cfg.kind!r}")
    if cfg.coord_max < 1 or cfg.denominator < 1:
        raise UnsatisfiableConfig("coord_max and denominator must be positive")
    gap_units = Fraction(cfg.min_gap) * cfg.denominator
    gap_units = -(-gap_units.numerator // gap_units.denominator)
    rng = np.random.default_rng(cfg.seed)
    if cfg.kind == "line":
        return _gen_line(rng, cfg, gap_units)
    return _gen_cycle(rng, cfg, gap_units)


def _gen_line(rng, cfg, gap_units) -> LineInstance:
    pts = _sorted_endpoints(rng, 2 * cfg.n, cfg.coord_max, _steps(cfg.n, cfg, gap_units))
    den = cfg.denominator
    vals = [Fraction(int(v), den) for v in pts.tolist()] if den > 1 else pts.tolist()
    return LineInstance.from_pairs(zip(vals[0::2], vals[1::2]))


def _gen_cycle(rng, cfg, gap_units) -> CycleInstance:
    n, den, span = cfg.n, cfg.denominator, cfg.coord_max
    steps = _steps(n, cfg, gap_units)
    # the wrap from r_n back to l_1 + C is a between-interval gap too; a lone
    # interval must stay shorter than the circumference
    wrap = max(gap_units, 0 if (cfg.allow_touching and n > 1) else 1)
    for _ in range(1000):
        # consecutive starts must differ, so a degenerate interval touching
        # its successor is redrawn
        pts = _sorted_endpoints(rng, 2 * n, span - wrap, steps).tolist()
        starts = pts[0::2]
        if any(b == a for a, b in zip(starts, starts[1:])):
            continue
        if n > 1 and starts[-1] == starts[0] + span:
            continue
        shift = int(rng.integers(0, span))
        arcs = [((s + shift) % span, e - s) for s, e in zip(pts[0::2], pts[1::2])]
        first = min(range(n), key=lambda k: arcs[k][0])
        arcs = arcs[first:] + arcs[:first]
        return CycleInstance(
            Fraction(span, den), [(Fraction(s, den), Fraction(ln, den)) for s, ln in arcs]
        )
    raise UnsatisfiableConfig("could not draw distinct interval starts")


def corpus(
    kind: str,
    count: int,
    seed: int,
    n_range: tuple[int, int],
    **overrides,
) -> Iterator[tuple[GeneratorConfig, Instance]]:
    """Yield ``count`` seeded instances with n drawn uniformly from ``n_range``."""
    sizes = np.random.default_rng(seed).integers(n_range[0], n_range[1], size=count, endpoint=True)
    for k, n in enumerate(sizes.tolist()):
        cfg = GeneratorConfig(seed=seed * 1_000_003 + k, n=n, kind=kind, **overrides)
        yield cfg, gen_instance(cfg)
