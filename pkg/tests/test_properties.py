from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import cycle_instances, line_instances
from dispersion import (
    UNBOUNDED,
    CycleInstance,
    check_invariants,
    feasible_line,
    format_instance,
    oracle_cycle_optimum,
    oracle_line_optimum,
    parse_instance,
    solve_cycle,
    solve_line,
    solution_from_json,
    solution_to_json,
    trace_line,
    verify_solution,
)
from dispersion.formats import format_number, format_rational, parse_rational

rationals = st.fractions(max_denominator=10**6).filter(lambda f: abs(f) < 10**9)


@given(rationals)
def test_rational_text_is_canonical(x):
    p, q = format_rational(x).split("/")
    assert Fraction(int(p), int(q)) == x
    assert int(q) > 0 and Fraction(int(p), int(q)).denominator == int(q)
    assert parse_rational(format_number(x)) == x


@settings(max_examples=200)
@given(st.one_of(line_instances(), cycle_instances()))
def test_instance_text_round_trip(inst):
    assert parse_instance(format_instance(inst)) == inst


@settings(max_examples=300)
@given(line_instances())
def test_line_matches_oracle_and_verifies(inst):
    sol = solve_line(inst)
    assert sol.d_min == oracle_line_optimum(inst)
    assert verify_solution(inst, sol).optimal
    assert solution_from_json(solution_to_json(sol)).points == sol.points


@settings(max_examples=200)
@given(line_instances())
def test_d_min_never_increases(inst):
    prev = None
    for _, state in trace_line(inst):
        n, d = state.d_min
        cur = UNBOUNDED if d == 0 else Fraction(n, d)
        if prev is not None:
            assert cur <= prev
        prev = cur


@settings(max_examples=200)
@given(line_instances(min_n=2), st.fractions(min_value=Fraction(1, 10), max_value=40, max_denominator=12))
def test_initial_bound_gives_min_of_bound_and_optimum(inst, bound):
    sol = solve_line(inst, initial_bound=bound)
    assert sol.d_min == min(bound, oracle_line_optimum(inst))
    assert verify_solution(inst, sol).optimal


@settings(max_examples=200)
@given(line_instances(min_n=2))
def test_optimum_is_the_feasibility_threshold(inst):
    opt = oracle_line_optimum(inst)
    ok, pts = feasible_line(inst, opt)
    assert ok and min(b - a for a, b in zip(pts, pts[1:])) >= opt
    assert not feasible_line(inst, opt + Fraction(1, 10**6))[0]


@settings(max_examples=200)
@given(line_instances(max_n=12))
def test_priority_failures_are_only_slope_ties(inst):
    for _, state in trace_line(inst):
        report = check_invariants(state)
        for failure in report.failures():
            assert failure.name == "inv9_priority"
            assert failure.counterexample[-1] == "tie"


@settings(max_examples=100)
@given(line_instances(max_n=12))
def test_checked_mode_never_raises(inst):
    assert solve_line(inst, check_invariants=True).d_min == oracle_line_optimum(inst)


@settings(max_examples=300)
@given(cycle_instances())
def test_cycle_matches_oracle_and_verifies(inst):
    sol = solve_cycle(inst)
    assert sol.d_min == oracle_cycle_optimum(inst)
    assert verify_solution(inst, sol).optimal
    if len(inst) > 1:
        assert sol.d_min <= Fraction(inst.circumference, len(inst))


@settings(max_examples=150)
@given(cycle_instances(min_n=2), st.integers(0, 7))
def test_cycle_optimum_ignores_which_arc_comes_first(inst, turn):
    n = len(inst)
    k = turn % n
    c = inst.circumference
    # relabel so that arc k is first, shifting coordinates to keep starts sorted
    shift = inst.intervals[k].start
    arcs = [((a.start - shift) % c, a.length) for a in inst.intervals[k:] + inst.intervals[:k]]
    assume(all(x < y for (x, _), (y, _) in zip(arcs, arcs[1:])))
    rotated = CycleInstance(c, arcs)
    assert solve_cycle(rotated).d_min == solve_cycle(inst).d_min
