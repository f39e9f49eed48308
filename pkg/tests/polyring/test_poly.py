import random
from fractions import Fraction

import pytest
import sympy

from edge_elimination import Variable
from edge_elimination.exceptions import ExponentOverflowError
from edge_elimination.polyring import (
    MAX_EXPONENT,
    ONE,
    X,
    Y,
    Z,
    ZERO,
    Monomial,
    Poly,
    add,
    eval_exact,
    eval_float,
    mul,
    neg,
    scale,
    sub,
    substitute,
)
from edge_elimination.polyring.poly import (
    compare_monomials,
    identity_substitution,
    poly_sum,
)
from edge_elimination.types import FloatPoint, RationalPoint

SX, SY, SZ = sympy.symbols('x y z')


def to_sympy(poly: Poly) -> sympy.Expr:
    return sympy.expand(
        sum(
            (
                coefficient * SX ** m.a * SY ** m.b * SZ ** m.c
                for m, coefficient in poly.items()
            ),
            sympy.Integer(0),
        )
    )


def random_poly(rng: random.Random) -> Poly:
    return Poly(
        {
            (rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-5, 5)
            for _ in range(rng.randint(0, 5))
        }
    )


@pytest.fixture
def polys():
    rng = random.Random(42)
    return [random_poly(rng) for _ in range(30)]


@pytest.mark.parametrize(
    'poly,expected',
    [
        (X + X, '2*x'),
        ((X + Y) * (X - Y), 'x^2 - y^2'),
        (X + X * Y + Z, 'x + x*y + z'),
        (X ** 2 + 2 * X * Y + 2 * Z + X * Y ** 2 + Y * Z, 'x^2 + 2*x*y + x*y^2 + y*z + 2*z'),
        (X ** 3 + 3 * X * Y, 'x^3 + 3*x*y'),
        (X ** 2 + X * Y * Z, 'x^2 + x*y*z'),
        (ZERO, '0'),
        (ONE, '1'),
        (ONE - X, '1 - x'),
        (-X - 2 * Y, '-x - 2*y'),
        (Poly.constant(-3) + Z, '-3 + z'),
    ],
)
def test_str(poly, expected):
    assert str(poly) == expected


@pytest.mark.parametrize(
    'left,right,expected',
    [
        (Monomial(0, 0, 0), Monomial(1, 0, 0), -1),
        (Monomial(1, 0, 0), Monomial(1, 1, 0), -1),
        (Monomial(1, 2, 0), Monomial(1, 0, 1), -1),
        (Monomial(2, 0, 0), Monomial(1, 1, 0), -1),
        (Monomial(0, 1, 1), Monomial(0, 0, 1), -1),
        (Monomial(0, 2, 3), Monomial(0, 2, 3), 0),
    ],
)
def test_compare_monomials(left, right, expected):
    assert compare_monomials(left, right) == expected
    assert compare_monomials(right, left) == -expected


def test_ring_operations():
    assert add(X, X) == 2 * X
    assert mul(X + Y, X - Y) == X ** 2 - Y ** 2
    assert add(X, ZERO) == X
    assert sub(X, X).is_zero()
    assert neg(X) == -X
    assert scale(X + Y, 3) == 3 * X + 3 * Y
    assert scale(X, 0) == ZERO
    assert 1 + X == X + 1
    assert 2 - X == -(X - 2)
    assert X * 1 == X


def test_zero_coefficients_pruned():
    poly = (X + Y) - Y
    assert len(poly) == 1
    assert poly.coefficient((0, 1, 0)) == 0
    assert Poly({(1, 0, 0): 0}).is_zero()


def test_equality_with_int():
    assert ONE == 1
    assert ZERO == 0
    assert X != 1
    assert X.__eq__('x') is NotImplemented
    assert hash(X + Y) == hash(Y + X)


@pytest.mark.parametrize('value', [0, 1, -7, 10 ** 30])
def test_constant_hash_matches_int(value):
    constant = Poly.constant(value)
    assert constant == value
    assert hash(constant) == hash(value)
    assert {value: 'int'}[constant] == 'int'
    assert len({constant, value}) == 1


def test_variable():
    assert Poly.variable('y') == Y
    assert Poly.variable(Variable.Z) == Z
    with pytest.raises(ValueError):
        Poly.variable('t')


def test_invalid_coefficient():
    with pytest.raises(TypeError):
        Poly({(1, 0, 0): 1.5})
    with pytest.raises(TypeError):
        Poly({(1, 0, 0): True})
    with pytest.raises(TypeError):
        Poly.promote('x')


def test_degree():
    assert ZERO.degree() == -1
    assert ONE.degree() == 0
    assert (X * Y ** 2 + Z).degree() == 3


def test_power():
    assert (X + Y) ** 0 == ONE
    assert (X + Y) ** 3 == X ** 3 + 3 * X ** 2 * Y + 3 * X * Y ** 2 + Y ** 3
    with pytest.raises(ValueError):
        X ** -1


def test_exponent_overflow():
    big = Poly({(MAX_EXPONENT, 0, 0): 1})
    with pytest.raises(ExponentOverflowError):
        big * X
    with pytest.raises(OverflowError):
        Poly({(MAX_EXPONENT + 1, 0, 0): 1})
    with pytest.raises(ValueError):
        Poly({(-1, 0, 0): 1})


def test_arbitrary_precision():
    assert ((X + 1) ** 80).coefficient((40, 0, 0)) == 107507208733336176461620


def test_ring_axioms(polys):
    for p, q, r in zip(polys, polys[1:], polys[2:]):
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p - p == ZERO


def test_multiplication_matches_sympy(polys):
    for p, q in zip(polys, polys[1:]):
        assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))
        assert to_sympy(p + q) == sympy.expand(to_sympy(p) + to_sympy(q))


@pytest.mark.parametrize(
    'poly,point,expected',
    [
        (X + X * Y + Z, (2, 1, 1), 5),
        (X ** 2 + X * Y + Z, (2, 1, 1), 7),
        (X ** 2 + 3 * Y + Poly.constant(4), (0, 0, 0), 4),
        (X * Y - Z, (Fraction(1, 2), -1, 3), Fraction(-7, 2)),
        (ZERO, (1, 2, 3), 0),
    ],
)
def test_eval(poly, point, expected):
    x, y, z = point
    assert eval_exact(poly, RationalPoint(x=x, y=y, z=z)) == expected
    value = eval_float(poly, FloatPoint(x=float(x), y=float(y), z=float(z)))
    assert isinstance(value, float)
    assert value == pytest.approx(float(expected))


def test_eval_is_homomorphism(polys):
    point = RationalPoint(x=Fraction(1, 3), y=-2, z=Fraction(5, 7))
    for p, q in zip(polys, polys[1:]):
        assert eval_exact(p * q, point) == eval_exact(p, point) * eval_exact(q, point)
        assert eval_exact(p + q, point) == eval_exact(p, point) + eval_exact(q, point)


def test_eval_matches_sympy(polys):
    point = RationalPoint(x=Fraction(-3, 2), y=Fraction(2, 5), z=4)
    values = {SX: sympy.Rational(-3, 2), SY: sympy.Rational(2, 5), SZ: 4}
    for p in polys:
        expected = to_sympy(p).subs(values)
        assert eval_exact(p, point) == Fraction(int(expected.p), int(expected.q))


@pytest.mark.parametrize(
    'poly,sigma,expected',
    [
        (X + X * Y + Z, identity_substitution(), X + X * Y + Z),
        (X ** 2 + X * Y + Z, {'x': X, 'y': Y, 'z': X * Y * Z - X * Y}, X ** 2 + X * Y * Z),
        (X ** 2 + X * Y + Z, {'x': X, 'y': -1, 'z': X - Y}, X ** 2 - Y),
        (X ** 2 + Z, {'x': X, 'y': 0, 'z': Y}, X ** 2 + Y),
        (Poly.constant(5), {'x': Y, 'y': Z, 'z': X}, Poly.constant(5)),
    ],
)
def test_substitute(poly, sigma, expected):
    assert substitute(poly, sigma) == expected


def test_substitute_partial():
    with pytest.raises(ValueError, match='missing z'):
        substitute(X, {'x': X, 'y': Y})


def test_substitute_then_eval(polys):
    sigma = {'x': X * Y, 'y': Z - 1, 'z': X + Y + Z}
    point = RationalPoint(x=2, y=Fraction(-1, 2), z=3)
    image = RationalPoint(
        x=eval_exact(sigma['x'], point),
        y=eval_exact(sigma['y'], point),
        z=eval_exact(sigma['z'], point),
    )
    for p in polys:
        assert eval_exact(substitute(p, sigma), point) == eval_exact(p, image)


def test_poly_sum():
    assert poly_sum([]) == ZERO
    assert poly_sum([X, Y, X]) == 2 * X + Y


def test_items_order():
    poly = Z + Y + X + ONE + X * Y
    assert [m for m, _ in poly.items()] == [
        Monomial(0, 0, 0),
        Monomial(1, 0, 0),
        Monomial(1, 1, 0),
        Monomial(0, 1, 0),
        Monomial(0, 0, 1),
    ]
