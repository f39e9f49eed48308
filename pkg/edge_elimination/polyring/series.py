"""
Truncated formal power series in t with polynomial coefficients.
"""

from typing import Iterable, Iterator, List, Sequence, Tuple

from edge_elimination.exceptions import SeriesInversionError
from edge_elimination.polyring.poly import ONE, ZERO, Poly, PolyLike


class Series:
    """Coefficients of t^0 .. t^order; everything above t^order is unknown."""

    __slots__ = ('order', 'coeffs')

    def __init__(self, coeffs: Sequence[PolyLike], order: int) -> None:
        if order < 0:
            raise ValueError(f'truncation order must be nonnegative, got {order}')
        padded: List[Poly] = [Poly.promote(c) for c in list(coeffs)[: order + 1]]
        padded.extend([ZERO] * (order + 1 - len(padded)))
        self.order: int = order
        self.coeffs: Tuple[Poly, ...] = tuple(padded)

    def coefficient(self, n: int) -> Poly:
        if not 0 <= n <= self.order:
            raise IndexError(f't^{n} is outside the truncation order {self.order}')
        return self.coeffs[n]

    __getitem__ = coefficient

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self) -> Iterator[Poly]:
        return iter(self.coeffs)

    def truncate(self, order: int) -> 'Series':
        return Series(self.coeffs, min(order, self.order))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other: 'Series') -> 'Series':
        return series_add(self, other)

    def __mul__(self, other: 'Series') -> 'Series':
        return series_mul(self, other)

    def __repr__(self) -> str:
        terms = ', '.join(str(c) for c in self.coeffs)
        return f'Series([{terms}], order={self.order})'


def series_from_coeffs(coeffs: Iterable[PolyLike], order: int) -> Series:
    return Series(list(coeffs), order)


def series_unit(order: int) -> Series:
    return Series([ONE], order)


def series_add(s: Series, u: Series) -> Series:
    order = min(s.order, u.order)
    return Series([s.coeffs[n] + u.coeffs[n] for n in range(order + 1)], order)


def series_mul(s: Series, u: Series) -> Series:
    order = min(s.order, u.order)
    coeffs: List[Poly] = []
    for n in range(order + 1):
        total = ZERO
        for k in range(n + 1):
            if not s.coeffs[k].is_zero() and not u.coeffs[n - k].is_zero():
                total = total + s.coeffs[k] * u.coeffs[n - k]
        coeffs.append(total)
    return Series(coeffs, order)


def series_inverse(s: Series) -> Series:
    """Reciprocal series; b_n = -(a_1 b_(n-1) + ... + a_n b_0)."""
    if s.coeffs[0] != ONE:
        raise SeriesInversionError(
            f'constant term must be 1 to invert, got {s.coeffs[0]}'
        )
    inverse: List[Poly] = [ONE]
    for n in range(1, s.order + 1):
        total = ZERO
        for k in range(1, n + 1):
            if not s.coeffs[k].is_zero():
                total = total + s.coeffs[k] * inverse[n - k]
        inverse.append(-total)
    return Series(inverse, s.order)
