"""Empirical linear-time check: wall time and deque/finalization counters per size."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field

from .cycle_solver import solve_cycle
from .line_solver import solve_line
from .model import SolverStats
from .oracle import GeneratorConfig, gen_instance

__all__ = ["BenchRow", "BenchReport", "run_bench", "COUNTER_FACTOR"]

# pushes + pops + finalizations may not exceed this many per interval
COUNTER_FACTOR = 6

BENCH_COORD_MAX = 2**40 - 1


@dataclass(frozen=True)
class BenchRow:
    n: int
    seconds: float  # best of the repeats, solver only
    stats: SolverStats

    @property
    def per_interval(self) -> float:
        return self.seconds / self.n

    @property
    def within_bound(self) -> bool:
        return self.stats.total <= COUNTER_FACTOR * self.n


@dataclass
class BenchReport:
    kind: str
    seed: int
    rows: list[BenchRow] = field(default_factory=list)

    def ratios(self) -> list[float]:
        """Time-per-interval of each row relative to the previous one."""
        return [b.per_interval / a.per_interval for a, b in zip(self.rows, self.rows[1:])]

    @property
    def flatness(self) -> float:
        """Largest over smallest time-per-interval across rows."""
        per = [r.per_interval for r in self.rows]
        return max(per) / min(per)

    def to_csv(self, timing: bool = True) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        head = ["n", "pushes", "pops", "finalized", "total_ops", "ops_per_n"]
        if timing:
            head += ["seconds", "ns_per_interval"]
        w.writerow(head)
        for r in self.rows:
            s = r.stats
            row = [r.n, s.pushes, s.pops, s.finalized, s.total, f"{s.total / r.n:.4f}"]
            if timing:
                row += [f"{r.seconds:.6f}", f"{r.per_interval * 1e9:.1f}"]
            w.writerow(row)
        return buf.getvalue()

    def to_table(self, timing: bool = True) -> str:
        lines = []
        head = f"{'n':>10} {'pushes':>10} {'pops':>10} {'final':>10} {'ops/n':>7}"
        if timing:
            head += f" {'seconds':>10} {'ns/int':>9}"
        lines.append(head)
        for r in self.rows:
            s = r.stats
            line = f"{r.n:>10} {s.pushes:>10} {s.pops:>10} {s.finalized:>10} {s.total / r.n:>7.3f}"
            if timing:
                line += f" {r.seconds:>10.4f} {r.per_interval * 1e9:>9.1f}"
            lines.append(line)
        if timing and len(self.rows) > 1:
            lines.append("scaling ratios: " + ", ".join(f"{x:.2f}" for x in self.ratios()))
        return "\n".join(lines)


def run_bench(sizes, seed: int, repeats: int = 1, kind: str = "line") -> BenchReport:
    """Generate one seeded instance per size and time the solver on it.

    Generation is excluded from the timing.
    """
    solve = solve_line if kind == "line" else solve_cycle
    report = BenchReport(kind=kind, seed=seed)
    for n in sorted(sizes):
        inst = gen_instance(GeneratorConfig(seed=seed, n=n, kind=kind, coord_max=BENCH_COORD_MAX))
        best = None
        stats = None
        for _ in range(max(1, repeats)):
            t0 = time.perf_counter()
            sol = solve(inst)
            elapsed = time.perf_counter() - t0
            if stats is not None and sol.stats != stats:
                raise RuntimeError(f"counters changed between repeats at n={n}")
            stats = sol.stats
            best = elapsed if best is None else min(best, elapsed)
        report.rows.append(BenchRow(n=n, seconds=best, stats=stats))
    return report
