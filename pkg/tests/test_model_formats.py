from fractions import Fraction

import pytest

from conftest import cycle, line
from dispersion import UNBOUNDED, Arc, CycleInstance, Interval, LineInstance, solve_cycle, solve_line
from dispersion.formats import (
    format_instance,
    format_number,
    format_rational,
    parse_instance,
    parse_rational,
    solution_from_json,
    solution_to_dict,
    solution_to_json,
)
from dispersion.model import (
    InstanceSyntaxError,
    InstanceValidationError,
    RationalPoints,
    as_rational,
)


def test_parse_line():
    inst = parse_instance("line 2\n0 1\n5 6\n")
    assert inst == line((0, 1), (5, 6))


def test_parse_cycle():
    inst = parse_instance("cycle 2 10\n0 1\n5 1\n")
    assert inst == CycleInstance(10, [Arc(0, 1), Arc(5, 1)])
    assert inst.circumference == 10


def test_parse_rejects_overlap():
    with pytest.raises(InstanceValidationError, match="overlap between interval 1 and 2"):
        parse_instance("line 2\n0 3\n2 6\n")


def test_parse_comments_decimals_and_fractions():
    inst = parse_instance("# a comment\n\nline 2\n  0.5   3/4\n2 2\n")
    assert inst.intervals[0] == Interval(Fraction(1, 2), Fraction(3, 4))
    assert inst.intervals[1] == Interval(2, 2)


@pytest.mark.parametrize("text, line_no, column", [
    ("line 2\n0 1\n", 3, 1),
    ("line 1\n0 x\n", 2, 3),
    ("plane 1\n0 1\n", 1, 1),
    ("line 1\n0 1 2\n", 2, 5),
    ("", 1, 1),
])
def test_syntax_errors_carry_position(text, line_no, column):
    with pytest.raises(InstanceSyntaxError) as info:
        parse_instance(text)
    assert (info.value.line, info.value.column) == (line_no, column)


@pytest.mark.parametrize("text, message", [
    ("line 0\n", "n >= 1"),
    ("line 2\n5 6\n0 1\n", "unsorted"),
    ("line 1\n3 1\n", "left 3 > right 1"),
    ("cycle 2 10\n0 1\n9 2\n", "overlap between interval 2 and 1"),
    ("cycle 1 10\n10 1\n", "out of range"),
    ("cycle 1 10\n0 10\n", "length"),
    ("cycle 2 10\n4 1\n4 1\n", "unsorted"),
])
def test_validation_errors(text, message):
    with pytest.raises(InstanceValidationError, match=message):
        parse_instance(text)


def test_cycle_touching_wrap_is_allowed():
    inst = parse_instance("cycle 2 10\n0 4\n5 5\n")
    assert inst.contains(1, 0) and inst.contains(0, 0)


def test_cycle_geometry():
    c = cycle(10, (3, 1), (8, 4))
    assert c.clockwise(8, 2) == 4
    assert c.distance(1, 9) == 2
    assert c.contains(1, 1) and not c.contains(1, 3)


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        Interval(0.5, 1)
    assert as_rational("4/2") == 2 and type(as_rational("4/2")) is int


def test_unbounded_ordering():
    assert UNBOUNDED > Fraction(10**9) and not UNBOUNDED < 3
    assert min(UNBOUNDED, Fraction(2)) == 2
    assert UNBOUNDED + 1 is UNBOUNDED


@pytest.mark.parametrize("value, text", [
    (Fraction(3), "3"),
    (Fraction(-1, 4), "-0.25"),
    (Fraction(1, 3), "1/3"),
    (Fraction(7, 20), "0.35"),
])
def test_format_number(value, text):
    assert format_number(value) == text
    assert parse_rational(text) == value


def test_format_rational_keeps_denominator():
    assert format_rational(Fraction(3)) == "3/1"
    assert format_rational(Fraction(6, 4)) == "3/2"


@pytest.mark.parametrize("bad", ["1e3", "0x10", "", "1/", "--1", "nan"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_format_instance_round_trip():
    inst = parse_instance("cycle 3 25/2\n0 1/3\n2.5 1\n7 0\n")
    assert parse_instance(format_instance(inst)) == inst


def test_rational_points_are_lazy_fractions():
    pts = RationalPoints([3, 10], [2, 4], 5)
    assert list(pts) == [Fraction(3, 10), Fraction(1, 2)]
    assert pts == [Fraction(3, 10), Fraction(1, 2)]
    assert pts[1:] == [Fraction(1, 2)]


def test_solution_json_shape_and_round_trip(line3):
    sol = solve_line(line3)
    data = solution_to_dict(sol)
    assert data["d_min"] == "3/1" and data["d_min_approx"] == 3.0
    assert data["points"] == ["0/1", "3/1", "6/1"]
    assert data["certificate"] == {"type": "line_pair", "i_star": 1, "j_star": 3, "value": "3/1"}
    back = solution_from_json(solution_to_json(sol))
    assert back.points == sol.points and back.d_min == sol.d_min
    assert back.certificate == sol.certificate and back.stats == sol.stats


def test_unbounded_and_cycle_json_round_trip():
    for sol in (solve_line(line((0, 1))), solve_cycle(cycle(10, (0, 1), (2, 1), (6, 1)))):
        back = solution_from_json(solution_to_json(sol))
        assert back.certificate == sol.certificate
        assert back.d_min == sol.d_min
    assert solution_to_dict(solve_line(line((0, 1))))["d_min_approx"] is None


@pytest.mark.parametrize("text", ['{"kind": "line"}', '{"kind": "line", "d_min": "1/0", "points": [], "certificate": {"type": "unbounded"}}',
                                  '{"kind": "line", "d_min": "1", "points": [], "certificate": {"type": "nope"}}'])
def test_malformed_solution_json(text):
    with pytest.raises(ValueError):
        solution_from_json(text)
