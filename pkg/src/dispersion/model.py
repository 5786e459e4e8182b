"""Exact domain types: instances, certificates, and solutions.

Coordinates are exact rationals: :class:`fractions.Fraction`, or plain
``int`` when integral. Nothing in a solver path is ever rounded; floats
only appear in the optional decimal approximation of the JSON output.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Union

Rational = Fraction


class _Unbounded:
    """The value +infinity for an objective that no pair constrains."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNBOUNDED"

    def __reduce__(self):
        return (_Unbounded, ())

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("dispersion.UNBOUNDED")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__


UNBOUNDED = _Unbounded()

ExtendedValue = Union[Fraction, _Unbounded]


class InstanceError(ValueError):
    """Base class for malformed or invalid instances."""


class InstanceSyntaxError(InstanceError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class InstanceValidationError(InstanceError):
    """An instance violates an ordering or disjointness requirement."""


class InternalConsistencyError(RuntimeError):
    """A solver self-check failed. Always a bug, never bad input."""


def as_rational(value) -> Fraction:
    """Coerce to an exact rational. Python ints pass through unchanged: they
    are exact, compare and mix with Fractions, and are much cheaper."""
    if type(value) is int or isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass int, Fraction or a decimal string")
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


@dataclass(frozen=True, slots=True)
class Interval:
    left: Fraction
    right: Fraction

    def __post_init__(self):
        object.__setattr__(self, "left", as_rational(self.left))
        object.__setattr__(self, "right", as_rational(self.right))
        if self.left > self.right:
            raise InstanceValidationError(
                f"interval has left {self.left} > right {self.right}"
            )

    def __contains__(self, x) -> bool:
        return self.left <= x <= self.right


@dataclass(frozen=True)
class LineInstance:
    """Sorted intervals on a line; consecutive intervals may touch but not overlap."""

    intervals: tuple[Interval, ...]

    def __post_init__(self):
        ivs = tuple(
            iv if isinstance(iv, Interval) else Interval(*iv) for iv in self.intervals
        )
        object.__setattr__(self, "intervals", ivs)
        if not ivs:
            raise InstanceValidationError("instance needs at least one interval (n >= 1)")
        for i in range(len(ivs) - 1):
            a, b = ivs[i], ivs[i + 1]
            if b.left < a.left:
                raise InstanceValidationError(
                    f"unsorted: interval {i + 2} starts before interval {i + 1}"
                )
            if a.right > b.left:
                raise InstanceValidationError(
                    f"overlap between interval {i + 1} and {i + 2}"
                )

    @classmethod
    def from_pairs(cls, pairs) -> LineInstance:
        return cls(tuple(Interval(l, r) for l, r in pairs))

    def __len__(self):
        return len(self.intervals)

    @cached_property
    def lefts(self) -> tuple[Fraction, ...]:
        return tuple(iv.left for iv in self.intervals)

    @cached_property
    def rights(self) -> tuple[Fraction, ...]:
        return tuple(iv.right for iv in self.intervals)


@dataclass(frozen=True, slots=True)
class Arc:
    """A cycle interval starting at ``start`` and running clockwise for ``length``."""

    start: Fraction
    length: Fraction

    def __post_init__(self):
        object.__setattr__(self, "start", as_rational(self.start))
        object.__setattr__(self, "length", as_rational(self.length))


@dataclass(frozen=True)
class CycleInstance:
    circumference: Fraction
    intervals: tuple[Arc, ...]

    def __post_init__(self):
        c = as_rational(self.circumference)
        object.__setattr__(self, "circumference", c)
        arcs = tuple(a if isinstance(a, Arc) else Arc(*a) for a in self.intervals)
        object.__setattr__(self, "intervals", arcs)
        if c <= 0:
            raise InstanceValidationError("circumference must be positive")
        if not arcs:
            raise InstanceValidationError("instance needs at least one interval (n >= 1)")
        for i, a in enumerate(arcs):
            if not 0 <= a.start < c:
                raise InstanceValidationError(
                    f"start of interval {i + 1} is out of range [0, {c})"
                )
            if not 0 <= a.length < c:
                raise InstanceValidationError(
                    f"length of interval {i + 1} must lie in [0, circumference)"
                )
        n = len(arcs)
        for i in range(n - 1):
            a, b = arcs[i], arcs[i + 1]
            if b.start <= a.start:
                raise InstanceValidationError(
                    f"unsorted: interval {i + 2} does not start after interval {i + 1}"
                )
            if a.start + a.length > b.start:
                raise InstanceValidationError(
                    f"overlap between interval {i + 1} and {i + 2}"
                )
        if n > 1 and arcs[-1].start + arcs[-1].length > arcs[0].start + c:
            raise InstanceValidationError(f"overlap between interval {n} and 1")

    def __len__(self):
        return len(self.intervals)

    def clockwise(self, a, b) -> Fraction:
        """Length of the clockwise arc from point ``a`` to point ``b``."""
        return (b - a) % self.circumference

    def distance(self, a, b) -> Fraction:
        cw = self.clockwise(a, b)
        return min(cw, self.circumference - cw) if cw else cw

    def contains(self, i: int, x) -> bool:
        """Whether point ``x`` lies on interval ``i`` (0-based)."""
        arc = self.intervals[i]
        return self.clockwise(arc.start, x) <= arc.length


Instance = Union[LineInstance, CycleInstance]


# Certificates carry 1-based interval indices, matching the text and JSON formats.


@dataclass(frozen=True)
class LinePair:
    i_star: int
    j_star: int
    value: Fraction


@dataclass(frozen=True)
class CycleWindow:
    """Clockwise window from the left end of ``i`` to the right end of ``j``
    spanning ``steps`` gaps; ``value`` is the window arc over ``steps``."""

    i: int
    j: int
    steps: int
    value: Fraction


@dataclass(frozen=True)
class CycleUniform:
    value: Fraction


@dataclass(frozen=True)
class UnboundedCertificate:
    pass


@dataclass(frozen=True)
class InitialBound:
    value: Fraction


Certificate = Union[LinePair, CycleWindow, CycleUniform, UnboundedCertificate, InitialBound]


@dataclass(frozen=True)
class SolverStats:
    intervals: int = 0
    pushes: int = 0
    pops: int = 0
    finalized: int = 0

    @property
    def total(self) -> int:
        return self.pushes + self.pops + self.finalized


class RationalPoints(Sequence):
    """Read-only sequence of exact points stored as raw ``num / (den * scale)``.

    Solvers work on integer numerators; building a Fraction per point is
    deferred until a point is actually read.
    """

    __slots__ = ("_num", "_den", "_scale")

    def __init__(self, num, den, scale=1):
        if len(num) != len(den):
            raise ValueError("numerator and denominator lists differ in length")
        self._num = num
        self._den = den
        self._scale = scale

    @classmethod
    def of(cls, values) -> RationalPoints:
        fr = [as_rational(v) for v in values]
        return cls([f.numerator for f in fr], [f.denominator for f in fr])

    def __len__(self):
        return len(self._num)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return [self[i] for i in range(*idx.indices(len(self)))]
        return Fraction(self._num[idx], self._den[idx] * self._scale)

    def __eq__(self, other):
        if isinstance(other, Sequence) and not isinstance(other, (str, bytes)):
            return len(self) == len(other) and all(a == b for a, b in zip(self, other))
        return NotImplemented

    def __repr__(self):
        head = ", ".join(str(p) for p in self[:6])
        more = ", ..." if len(self) > 6 else ""
        return f"RationalPoints([{head}{more}])"


@dataclass(frozen=True, eq=False)
class Solution:
    kind: str  # "line" or "cycle"
    points: Sequence[Fraction]
    d_min: ExtendedValue
    certificate: Certificate
    stats: SolverStats = field(default_factory=SolverStats)

    def __len__(self):
        return len(self.points)
