from fractions import Fraction
from math import lcm


def common_scale(values) -> int:
    """Least common denominator of a collection of Fractions."""
    scale = 1
    for den in {v.denominator for v in values}:
        scale = lcm(scale, den)
    return scale


def scaled_ints(values, scale: int) -> list[int]:
    """Exact integers ``v * scale``; ``scale`` must be a multiple of every denominator."""
    if scale == 1:
        return [v.numerator for v in values]
    return [v.numerator * (scale // v.denominator) for v in values]


def ratio(num: int, den: int, scale: int = 1) -> Fraction:
    return Fraction(num, den * scale)
