"""Instance text format and solution JSON.

Instance files are line oriented::

    # comment
    line 3
    0 1
    2 4
    5 6

or ``cycle <n> <circumference>`` followed by ``<start> <length>`` rows.
Numbers are integers or decimals with an optional sign; ``p/q`` is also
accepted so that every rational instance can be written back exactly.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, TextIO, Union

from .model import (
    UNBOUNDED,
    CycleInstance,
    CycleUniform,
    CycleWindow,
    InitialBound,
    Instance,
    InstanceSyntaxError,
    InstanceValidationError,
    LineInstance,
    LinePair,
    RationalPoints,
    Solution,
    SolverStats,
    UnboundedCertificate,
)

__all__ = [
    "parse_instance",
    "format_instance",
    "parse_rational",
    "format_rational",
    "solution_to_dict",
    "solution_to_json",
    "solution_from_dict",
    "solution_from_json",
]

_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:/\d+)?\Z")


def parse_rational(token: str) -> Fraction:
    if not _NUMBER.match(token):
        raise ValueError(f"not a number: {token!r}")
    value = Fraction(token)  # exact for decimals: Fraction("0.1") == 1/10
    return value


def _decimal(value: Fraction) -> str | None:
    """Finite decimal expansion of ``value`` if one exists."""
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return None
    digits = max(twos, fives)
    if digits == 0:
        return str(value.numerator)
    scaled = abs(value.numerator) * 10**digits // value.denominator
    sign = "-" if value < 0 else ""
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def format_number(value: Fraction) -> str:
    return _decimal(value) or f"{value.numerator}/{value.denominator}"


def format_rational(value: Fraction) -> str:
    """Lowest-terms ``p/q``; integers keep the ``/1``."""
    return f"{value.numerator}/{value.denominator}"


def _tokens(text: str):
    """Yield ``(line_no, [(column, token), ...])`` for each content line."""
    for no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield no, [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", raw)]


def _number(tok, no) -> Fraction:
    col, s = tok
    try:
        return parse_rational(s)
    except ValueError:
        raise InstanceSyntaxError(f"expected a number, got {s!r}", no, col) from None


def _count(tok, no) -> int:
    col, s = tok
    if not re.fullmatch(r"\+?\d+", s):
        raise InstanceSyntaxError(f"expected an interval count, got {s!r}", no, col)
    return int(s)


def parse_instance(source: Union[str, TextIO]) -> Instance:
    text = source if isinstance(source, str) else source.read()
    rows = list(_tokens(text))
    if not rows:
        raise InstanceSyntaxError("empty input, expected a 'line' or 'cycle' header", 1)
    no, head = rows[0]
    kind = head[0][1]
    if kind == "line":
        if len(head) != 2:
            raise InstanceSyntaxError("header must be 'line <n>'", no)
    elif kind == "cycle":
        if len(head) != 3:
            raise InstanceSyntaxError("header must be 'cycle <n> <circumference>'", no)
    else:
        raise InstanceSyntaxError(f"unknown instance kind {kind!r}", no, head[0][0])
    n = _count(head[1], no)
    if n < 1:
        raise InstanceValidationError("instance needs at least one interval (n >= 1)")
    body = rows[1:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else (body[-1][0] + 1 if body else no + 1)
        raise InstanceSyntaxError(f"header declares {n} intervals, found {len(body)}", where)
    pairs = []
    for bno, toks in body:
        if len(toks) != 2:
            col = toks[2][0] if len(toks) > 2 else 1
            raise InstanceSyntaxError("expected exactly two numbers", bno, col)
        pairs.append((_number(toks[0], bno), _number(toks[1], bno)))
    if kind == "line":
        for k, (l, r) in enumerate(pairs, start=1):
            if l > r:
                raise InstanceValidationError(f"interval {k} has left {l} > right {r}")
        return LineInstance.from_pairs(pairs)
    circumference = _number(head[2], no)
    for k, (_, length) in enumerate(pairs, start=1):
        if length < 0:
            raise InstanceValidationError(f"interval {k} has negative length")
    return CycleInstance(circumference, pairs)


def format_instance(instance: Instance) -> str:
    if isinstance(instance, LineInstance):
        lines = [f"line {len(instance)}"]
        lines += [f"{format_number(iv.left)} {format_number(iv.right)}" for iv in instance.intervals]
    else:
        lines = [f"cycle {len(instance)} {format_number(instance.circumference)}"]
        lines += [f"{format_number(a.start)} {format_number(a.length)}" for a in instance.intervals]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Solution JSON


def _certificate_dict(cert) -> dict[str, Any]:
    if isinstance(cert, LinePair):
        return {"type": "line_pair", "i_star": cert.i_star, "j_star": cert.j_star,
                "value": format_rational(cert.value)}
    if isinstance(cert, CycleWindow):
        return {"type": "cycle_window", "i": cert.i, "j": cert.j, "steps": cert.steps,
                "value": format_rational(cert.value)}
    if isinstance(cert, CycleUniform):
        return {"type": "cycle_uniform", "value": format_rational(cert.value)}
    if isinstance(cert, InitialBound):
        return {"type": "initial_bound", "value": format_rational(cert.value)}
    return {"type": "unbounded"}


def _certificate_from(d: dict[str, Any]):
    kind = d.get("type")
    if kind == "line_pair":
        return LinePair(int(d["i_star"]), int(d["j_star"]), Fraction(d["value"]))
    if kind == "cycle_window":
        return CycleWindow(int(d["i"]), int(d["j"]), int(d["steps"]), Fraction(d["value"]))
    if kind == "cycle_uniform":
        return CycleUniform(Fraction(d["value"]))
    if kind == "initial_bound":
        return InitialBound(Fraction(d["value"]))
    if kind == "unbounded":
        return UnboundedCertificate()
    raise ValueError(f"unknown certificate type {kind!r}")


def solution_to_dict(solution: Solution) -> dict[str, Any]:
    d = solution.d_min
    s = solution.stats
    return {
        "kind": solution.kind,
        "d_min": "unbounded" if d is UNBOUNDED else format_rational(d),
        "d_min_approx": None if d is UNBOUNDED else float(d),
        "points": [format_rational(p) for p in solution.points],
        "certificate": _certificate_dict(solution.certificate),
        "stats": {
            "intervals": s.intervals,
            "pushes": s.pushes,
            "pops": s.pops,
            "finalized": s.finalized,
        },
    }


def solution_to_json(solution: Solution, indent: int | None = None) -> str:
    return json.dumps(solution_to_dict(solution), indent=indent)


def solution_from_dict(data: dict[str, Any]) -> Solution:
    try:
        raw = data["d_min"]
        d = UNBOUNDED if raw == "unbounded" else Fraction(raw)
        stats = SolverStats(**{k: int(v) for k, v in data.get("stats", {}).items()})
        return Solution(
            kind=data["kind"],
            points=RationalPoints.of(Fraction(p) for p in data["points"]),
            d_min=d,
            certificate=_certificate_from(data["certificate"]),
            stats=stats,
        )
    except (KeyError, TypeError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed solution: {exc}") from exc


def solution_from_json(text: str) -> Solution:
    return solution_from_dict(json.loads(text))
