"""
Sparse polynomials in x, y, z with arbitrary-precision integer coefficients.
"""

from fractions import Fraction
from functools import cmp_to_key
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Tuple,
    Union,
)

from edge_elimination import Variable
from edge_elimination.exceptions import ExponentOverflowError
from edge_elimination.types import FloatPoint, RationalPoint

EXPONENT_BITS: int = 32
MAX_EXPONENT: int = 2 ** EXPONENT_BITS - 1

VARIABLE_NAMES: Tuple[str, str, str] = ('x', 'y', 'z')


def _check_exponent(exponent: int) -> int:
    if exponent < 0:
        raise ValueError(f'negative exponent {exponent}')
    if exponent > MAX_EXPONENT:
        raise ExponentOverflowError(
            f'exponent {exponent} exceeds the {EXPONENT_BITS}-bit limit'
        )
    return exponent


class Monomial(NamedTuple):
    a: int = 0
    b: int = 0
    c: int = 0

    @classmethod
    def checked(cls, a: int, b: int, c: int) -> 'Monomial':
        return cls(_check_exponent(a), _check_exponent(b), _check_exponent(c))

    def times(self, other: 'Monomial') -> 'Monomial':
        return Monomial.checked(self.a + other.a, self.b + other.b, self.c + other.c)

    @property
    def degree(self) -> int:
        return self.a + self.b + self.c

    def __str__(self) -> str:
        factors: List[str] = []
        for name, exponent in zip(VARIABLE_NAMES, self):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append(f'{name}^{exponent}')
        return '*'.join(factors) or '1'


def _runs(monomial: Monomial) -> List[Tuple[int, int]]:
    return [(letter, count) for letter, count in enumerate(monomial) if count]


def compare_monomials(left: Monomial, right: Monomial) -> int:
    """Dictionary order of the words x..xy..yz..z; a prefix sorts first."""
    left_runs, right_runs = _runs(left), _runs(right)
    i = j = 0
    left_rest = left_runs[0][1] if left_runs else 0
    right_rest = right_runs[0][1] if right_runs else 0
    while i < len(left_runs) and j < len(right_runs):
        left_letter, right_letter = left_runs[i][0], right_runs[j][0]
        if left_letter != right_letter:
            return -1 if left_letter < right_letter else 1
        step = min(left_rest, right_rest)
        left_rest -= step
        right_rest -= step
        if not left_rest:
            i += 1
            left_rest = left_runs[i][1] if i < len(left_runs) else 0
        if not right_rest:
            j += 1
            right_rest = right_runs[j][1] if j < len(right_runs) else 0
    left_done, right_done = i >= len(left_runs), j >= len(right_runs)
    if left_done and right_done:
        return 0
    return -1 if left_done else 1


monomial_sort_key: Callable[[Monomial], object] = cmp_to_key(compare_monomials)

PolyLike = Union['Poly', int]


class Poly:
    """Immutable sparse trivariate polynomial; zero coefficients are never stored."""

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Optional[Mapping[Tuple[int, int, int], int]] = None):
        cleaned: Dict[Monomial, int] = {}
        for key, coefficient in (terms or {}).items():
            if isinstance(coefficient, bool) or not isinstance(coefficient, int):
                raise TypeError(f'coefficients must be integers, got {coefficient!r}')
            if coefficient:
                monomial = Monomial.checked(*key)
                cleaned[monomial] = cleaned.get(monomial, 0) + coefficient
        self._terms: Dict[Monomial, int] = {k: v for k, v in cleaned.items() if v}
        self._hash: Optional[int] = None

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, int]) -> 'Poly':
        # trusted fast path: keys already checked, zeros already removed
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def constant(cls, value: int) -> 'Poly':
        return cls({Monomial(): value})

    @classmethod
    def variable(cls, variable: Union[Variable, str]) -> 'Poly':
        name = Variable(variable).value
        exponents = [int(name == v) for v in VARIABLE_NAMES]
        return cls({Monomial(*exponents): 1})

    @classmethod
    def promote(cls, value: PolyLike) -> 'Poly':
        if isinstance(value, Poly):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return cls.constant(value)
        raise TypeError(f'cannot promote {value!r} to a polynomial')

    def items(self) -> Iterator[Tuple[Monomial, int]]:
        """Terms in canonical order."""
        for monomial in sorted(self._terms, key=monomial_sort_key):
            yield monomial, self._terms[monomial]

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        return self.items()

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, monomial: Tuple[int, int, int]) -> int:
        return self._terms.get(Monomial(*monomial), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(m.degree for m in self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other: object) -> bool:
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self) -> int:
        if self._hash is None:
            if set(self._terms) <= {Monomial()}:
                # constants hash like the ints they compare equal to
                self._hash = hash(self._terms.get(Monomial(), 0))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: PolyLike) -> 'Poly':
        other = Poly.promote(other)
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            total = terms.get(monomial, 0) + coefficient
            if total:
                terms[monomial] = total
            else:
                terms.pop(monomial, None)
        return Poly._wrap(terms)

    __radd__ = __add__

    def __neg__(self) -> 'Poly':
        return Poly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: PolyLike) -> 'Poly':
        return self + (-Poly.promote(other))

    def __rsub__(self, other: PolyLike) -> 'Poly':
        return Poly.promote(other) + (-self)

    def scale(self, factor: int) -> 'Poly':
        if not factor:
            return ZERO
        return Poly._wrap({m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other: PolyLike) -> 'Poly':
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        other = Poly.promote(other)
        terms: Dict[Monomial, int] = {}
        for left, left_coefficient in self._terms.items():
            for right, right_coefficient in other._terms.items():
                monomial = left.times(right)
                terms[monomial] = (
                    terms.get(monomial, 0) + left_coefficient * right_coefficient
                )
        return Poly._wrap({m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> 'Poly':
        if n < 0:
            raise ValueError('negative powers are not polynomials')
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __str__(self) -> str:
        from edge_elimination.format import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f'Poly({str(self)!r})'


ZERO: Poly = Poly()
ONE: Poly = Poly.constant(1)
X: Poly = Poly.variable(Variable.X)
Y: Poly = Poly.variable(Variable.Y)
Z: Poly = Poly.variable(Variable.Z)


def add(p: PolyLike, q: PolyLike) -> Poly:
    return Poly.promote(p) + q


def sub(p: PolyLike, q: PolyLike) -> Poly:
    return Poly.promote(p) - q


def mul(p: PolyLike, q: PolyLike) -> Poly:
    return Poly.promote(p) * q


def neg(p: PolyLike) -> Poly:
    return -Poly.promote(p)


def scale(p: PolyLike, factor: int) -> Poly:
    return Poly.promote(p).scale(factor)


def _powers(base: Union[int, float, Fraction], top: int) -> List:
    powers = [base ** 0]
    for _ in range(top):
        powers.append(powers[-1] * base)
    return powers


def _evaluate(p: Poly, values: Tuple) -> List:
    terms = p._terms
    if not terms:
        return []
    tops = [max(m[i] for m in terms) for i in range(3)]
    tables = [_powers(value, top) for value, top in zip(values, tops)]
    return [
        coefficient * tables[0][m.a] * tables[1][m.b] * tables[2][m.c]
        for m, coefficient in terms.items()
    ]


def eval_exact(p: PolyLike, point: RationalPoint) -> Fraction:
    terms = _evaluate(Poly.promote(p), (point.x, point.y, point.z))
    return Fraction(sum(terms, Fraction(0)))


def eval_float(p: PolyLike, point: FloatPoint) -> float:
    terms = _evaluate(Poly.promote(p), (point.x, point.y, point.z))
    return float(sum(float(t) for t in terms))


Substitution = Mapping[Union[Variable, str], PolyLike]


def substitute(p: PolyLike, sigma: Substitution) -> Poly:
    """Apply the ring homomorphism sending each variable to sigma[variable]."""
    images: Dict[str, Poly] = {}
    for key, image in sigma.items():
        images[Variable(key).value] = Poly.promote(image)
    missing = [name for name in VARIABLE_NAMES if name not in images]
    if missing:
        raise ValueError(f'substitution is missing {", ".join(missing)}')

    cache: Dict[Tuple[str, int], Poly] = {}

    def power(name: str, exponent: int) -> Poly:
        key = (name, exponent)
        if key not in cache:
            cache[key] = images[name] ** exponent
        return cache[key]

    result = ZERO
    for monomial, coefficient in Poly.promote(p).items():
        term = Poly.constant(coefficient)
        for name, exponent in zip(VARIABLE_NAMES, monomial):
            if exponent:
                term = term * power(name, exponent)
        result = result + term
    return result


def identity_substitution() -> Dict[Variable, Poly]:
    return {Variable.X: X, Variable.Y: Y, Variable.Z: Z}


def poly_sum(polys: Iterable[Poly]) -> Poly:
    result = ZERO
    for poly in polys:
        result = result + poly
    return result
