"""Shared helpers: brute-force references independent of the library code,
hypothesis strategies, and the acceptance summary printed at session end."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from dispersion import CycleInstance, LineInstance

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def line(*pairs) -> LineInstance:
    return LineInstance.from_pairs(pairs)


def cycle(c, *arcs) -> CycleInstance:
    return CycleInstance(c, list(arcs))


# --- brute force on a rational grid -------------------------------------------
# Some optimal placement puts every point at l_a + k * (span / m) for some
# window of m <= n gaps, so all of its coordinates are multiples of
# 1 / (q * lcm(1..n)) where q is the common denominator of the data. Exhaustive
# search over that grid therefore finds the exact optimum. Tiny instances only.


def _step(values, n):
    q = math.lcm(*(Fraction(v).denominator for v in values))
    return Fraction(1, q * math.lcm(*range(1, n + 1)))


def _search_space(grids):
    size = math.prod(len(g) for g in grids)
    if size > 200_000:
        raise ValueError(f"brute force over {size} placements is too large")


def _grid(lo, hi, step):
    k = math.ceil(Fraction(lo) / step)
    out = []
    while k * step <= hi:
        out.append(k * step)
        k += 1
    return out


def brute_line(inst: LineInstance):
    n = len(inst)
    if n == 1:
        return None
    step = _step(inst.lefts + inst.rights, n)
    grids = [_grid(iv.left, iv.right, step) for iv in inst.intervals]
    _search_space(grids)
    best = None
    for pts in itertools.product(*grids):
        g = min(b - a for a, b in zip(pts, pts[1:]))
        if best is None or g > best:
            best = g
    return best


def brute_cycle(inst: CycleInstance):
    n = len(inst)
    if n == 1:
        return None
    c = inst.circumference
    step = _step([c] + [v for a in inst.intervals for v in (a.start, a.length)], n)
    grids = [
        [(a.start + x) % c for x in _grid(0, a.length, step)] for a in inst.intervals
    ]
    _search_space(grids)
    best = None
    for pts in itertools.product(*grids):
        order = sorted(pts)
        g = min([b - a for a, b in zip(order, order[1:])] + [order[0] + c - order[-1]])
        if best is None or g > best:
            best = g
    return best


# --- hypothesis strategies ----------------------------------------------------


@st.composite
def line_instances(draw, min_n=1, max_n=10, max_step=20, touching=True, degenerate=True):
    n = draw(st.integers(min_n, max_n))
    den = draw(st.integers(1, 6))
    start = draw(st.integers(-50, 50))
    lengths = draw(st.lists(st.integers(0 if degenerate else 1, max_step), min_size=n, max_size=n))
    gaps = draw(st.lists(st.integers(0 if touching else 1, max_step), min_size=n, max_size=n))
    pairs, x = [], start
    for length, gap in zip(lengths, gaps):
        pairs.append((Fraction(x, den), Fraction(x + length, den)))
        x += length + gap
    return LineInstance.from_pairs(pairs)


@st.composite
def cycle_instances(draw, min_n=1, max_n=8, max_step=12):
    n = draw(st.integers(min_n, max_n))
    den = draw(st.integers(1, 4))
    lengths = draw(st.lists(st.integers(0, max_step), min_size=n, max_size=n))
    gaps = draw(st.lists(st.integers(1, max_step), min_size=n, max_size=n))
    total = sum(lengths) + sum(gaps)
    shift = draw(st.integers(0, total - 1))
    arcs, x = [], 0
    for length, gap in zip(lengths, gaps):
        arcs.append(((x + shift) % total, length))
        x += length + gap
    arcs.sort()
    return CycleInstance(
        Fraction(total, den), [(Fraction(s, den), Fraction(ln, den)) for s, ln in arcs]
    )


@pytest.fixture
def line3():
    return line((0, 1), (2, 4), (5, 6))
