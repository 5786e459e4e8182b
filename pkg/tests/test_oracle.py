from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import brute_cycle, brute_line, cycle, cycle_instances, line, line_instances
from dispersion import UNBOUNDED, GeneratorConfig, gen_instance
from dispersion.formats import format_instance
from dispersion.oracle import (
    UnsatisfiableConfig,
    corpus,
    feasible_line,
    oracle_cycle_optimum,
    oracle_line_optimum,
    oracle_line_via_candidates,
    window_value,
)

LINE_CASES = [
    (line((0, 1), (2, 4), (5, 6)), Fraction(3)),
    (line((0, 1), (10, 11), (12, 13)), Fraction(3)),
    (line((0, 2), (3, 5)), Fraction(5)),
]

CYCLE_CASES = [
    (cycle(10, (0, 1), (5, 1)), Fraction(5)),
    (cycle(10, (0, 1), (2, 1), (6, 1)), Fraction(3)),
    (cycle(12, (0, 1), (4, 1), (8, 1)), Fraction(4)),
]


@pytest.mark.parametrize("inst, expected", LINE_CASES)
def test_line_oracles_on_frozen_values(inst, expected):
    assert brute_line(inst) == expected  # the frozen value itself is checked first
    assert oracle_line_optimum(inst) == expected
    assert oracle_line_via_candidates(inst) == expected


def test_single_interval_is_unbounded():
    inst = line((0, 1))
    assert oracle_line_optimum(inst) is UNBOUNDED
    assert oracle_line_via_candidates(inst) is UNBOUNDED


def test_feasibility_examples(line3):
    ok, pts = feasible_line(line3, 3)
    assert ok and pts == [0, 3, 6]
    ok, pts = feasible_line(line3, Fraction(7, 2))
    assert not ok and pts is None
    assert feasible_line(line3, 0) == (True, [0, 2, 5])


@pytest.mark.parametrize("inst, expected", CYCLE_CASES)
def test_cycle_oracle_on_frozen_values(inst, expected):
    assert brute_cycle(inst) == expected
    assert oracle_cycle_optimum(inst) == expected


def test_cycle_windows_of_three_arc_example():
    inst = cycle(12, (0, 1), (4, 1), (8, 1))
    values = sorted(window_value(inst, i, m) for i in range(3) for m in (1, 2))
    assert values == [Fraction(9, 2)] * 3 + [5] * 3


def test_cycle_single_arc_unbounded():
    assert oracle_cycle_optimum(cycle(10, (3, 2))) is UNBOUNDED


@settings(max_examples=150, deadline=None)
@given(line_instances(max_n=3, max_step=3))
def test_line_oracles_match_brute_force(inst):
    expected = brute_line(inst)
    got = oracle_line_optimum(inst)
    assert (got is UNBOUNDED) if expected is None else got == expected
    assert oracle_line_via_candidates(inst) == got


@settings(max_examples=60, deadline=None)
@given(cycle_instances(max_n=3, max_step=3))
def test_cycle_oracle_matches_brute_force(inst):
    expected = brute_cycle(inst)
    got = oracle_cycle_optimum(inst)
    assert (got is UNBOUNDED) if expected is None else got == expected


# --- generator ----------------------------------------------------------------


@pytest.mark.parametrize("kind", ["line", "cycle"])
def test_generator_is_deterministic(kind):
    cfg = GeneratorConfig(seed=1, n=3, kind=kind)
    assert format_instance(gen_instance(cfg)) == format_instance(gen_instance(cfg))


def test_generator_seeds_differ():
    a = gen_instance(GeneratorConfig(seed=1, n=20))
    b = gen_instance(GeneratorConfig(seed=2, n=20))
    assert format_instance(a) != format_instance(b)


def test_generator_respects_flags():
    for cfg, inst in corpus("line", 200, 5, (2, 30)):
        assert all(iv.left < iv.right for iv in inst.intervals)
        assert all(a.right < b.left for a, b in zip(inst.intervals, inst.intervals[1:]))
        assert inst.lefts[0] >= 0 and inst.rights[-1] <= cfg.coord_max


def test_generator_min_gap_and_denominator():
    inst = gen_instance(GeneratorConfig(seed=3, n=10, min_gap=Fraction(5, 2), denominator=4, coord_max=400))
    gaps = [b.left - a.right for a, b in zip(inst.intervals, inst.intervals[1:])]
    assert min(gaps) >= Fraction(5, 2)
    assert all((iv.left * 4).denominator == 1 for iv in inst.intervals)


def test_generator_cycle_circumference_rule():
    inst = gen_instance(GeneratorConfig(seed=9, n=6, kind="cycle", coord_max=90, denominator=3))
    assert inst.circumference == 30


@pytest.mark.parametrize("cfg", [
    GeneratorConfig(seed=0, n=0),
    GeneratorConfig(seed=0, n=50, coord_max=20),
    GeneratorConfig(seed=0, n=2, kind="torus"),
])
def test_generator_rejects_impossible_configs(cfg):
    with pytest.raises(UnsatisfiableConfig):
        gen_instance(cfg)
