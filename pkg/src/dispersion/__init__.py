"""Exact linear-time max-min dispersion of points on disjoint intervals."""

from .cycle_solver import double_instance, solve_cycle
from .formats import (
    format_instance,
    parse_instance,
    solution_from_json,
    solution_to_json,
)
from .line_solver import check_invariants, solve_line, trace_line
from .model import (
    UNBOUNDED,
    Arc,
    CycleInstance,
    CycleUniform,
    CycleWindow,
    InitialBound,
    Interval,
    LineInstance,
    LinePair,
    Solution,
    UnboundedCertificate,
)
from .oracle import (
    GeneratorConfig,
    feasible_line,
    gen_instance,
    oracle_cycle_optimum,
    oracle_line_optimum,
    oracle_line_via_candidates,
)
from .verify import verify_solution

__version__ = "0.1.0"
