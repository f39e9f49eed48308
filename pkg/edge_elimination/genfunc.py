"""
Generating functions of the path and cycle families as truncated series:

    sum xi(P_n) t^n = (1 - y t) / (1 - (x + y) t - z t^2)
    sum xi(C_n) t^n = (1 + z t^2) / (1 - (x + y) t - z t^2) + (xy - y + z) t / (1 - y t)
"""

from typing import List

from edge_elimination.polyring import ONE, X, Y, Z, Poly, ZERO
from edge_elimination.polyring.series import (
    Series,
    series_add,
    series_inverse,
    series_mul,
)


def path_denominator(order: int) -> Series:
    return Series([ONE, -(X + Y), -Z], order)


def path_numerator(order: int) -> Series:
    return Series([ONE, -Y], order)


def path_series(order: int) -> Series:
    return series_mul(path_numerator(order), series_inverse(path_denominator(order)))


def cycle_series(order: int) -> Series:
    power_sums = series_mul(
        Series([ONE, ZERO, Z], order), series_inverse(path_denominator(order))
    )
    correction = series_mul(
        Series([ZERO, X * Y - Y + Z], order), series_inverse(Series([ONE, -Y], order))
    )
    return series_add(power_sums, correction)


def coefficients(series: Series) -> List[Poly]:
    return list(series.coeffs)
