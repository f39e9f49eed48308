"""
Paths and cycles: exact polynomials from the linear recurrences and numeric
closed forms from the characteristic roots of r^2 - (x + y) r - z = 0.
"""

import math
from typing import List

from edge_elimination.exceptions import DomainError
from edge_elimination.polyring import ONE, X, Y, Z, Poly
from edge_elimination.polyring.poly import poly_sum
from edge_elimination.types import ClosedFormCase, FloatPoint, RootCase

REPEATED_ROOT_TOLERANCE: float = 1e-12

C1: Poly = X + X * Y + Z
C2: Poly = X ** 2 + 2 * X * Y + 2 * Z + X * Y ** 2 + Y * Z


def _check_length(n: int) -> None:
    if n < 0:
        raise DomainError(f'n must be nonnegative, got {n}')


def path_polys(n: int) -> List[Poly]:
    """xi(P_0), ..., xi(P_n) from xi(P_k) = (x + y) xi(P_(k-1)) + z xi(P_(k-2))."""
    _check_length(n)
    polys = [ONE, X]
    step = X + Y
    for _ in range(2, n + 1):
        polys.append(step * polys[-1] + Z * polys[-2])
    return polys[: n + 1]


def xi_path_poly(n: int) -> Poly:
    return path_polys(n)[n]


def xi_cycle_poly(n: int) -> Poly:
    """Iterates xi(C_k) = xi(P_k) + y xi(C_(k-1)) + z xi(P_(k-2)) from C_1, C_2.

    C_0 is the empty graph, so n = 0 gives 1.
    """
    _check_length(n)
    if n == 0:
        return ONE
    if n == 1:
        return C1
    paths = path_polys(n)
    cycle = C2
    for k in range(3, n + 1):
        cycle = paths[k] + Y * cycle + Z * paths[k - 2]
    return cycle


def xi_cycle_poly_unrolled(n: int) -> Poly:
    """The cycle recurrence iterated down to C_1 and regrouped:

    xi(P_n) + y xi(P_(n-1)) + (y^2 + z) sum_(j=0..n-4) y^j xi(P_(n-j-2))
        + y^(n-3) (xz + yz + xy^2 + xy^3 + y^2 z)
    """
    _check_length(n)
    if n < 3:
        return xi_cycle_poly(n)
    paths = path_polys(n)
    tail = poly_sum(Y ** j * paths[n - j - 2] for j in range(n - 3))
    return (
        paths[n]
        + Y * paths[n - 1]
        + (Y ** 2 + Z) * tail
        + Y ** (n - 3) * (X * Z + Y * Z + X * Y ** 2 + X * Y ** 3 + Y ** 2 * Z)
    )


def discriminant(point: FloatPoint) -> float:
    x, y, z = point.x, point.y, point.z
    return x * x + 2 * x * y + y * y + 4 * z


def _is_repeated_root(point: FloatPoint, d: float) -> bool:
    s = point.x + point.y
    scale = max(1.0, s * s, 4 * abs(point.z))
    return abs(d) <= REPEATED_ROOT_TOLERANCE * scale


def _phase(point: FloatPoint, d: float) -> float:
    s = point.x + point.y
    root = math.sqrt(-d) if d < 0 else 0.0
    if s > 0:
        return math.atan(root / s)
    if s == 0:
        return math.pi / 2
    return math.pi + math.atan(root / s)


def phase_phi(point: FloatPoint) -> float:
    d = discriminant(point)
    if d >= 0:
        raise DomainError(f'the phase needs a negative discriminant, got D={d}')
    return _phase(point, d)


def classify(point: FloatPoint) -> ClosedFormCase:
    d = discriminant(point)
    if _is_repeated_root(point, d):
        return ClosedFormCase(kind=RootCase.repeated_root, discriminant=d)
    if d > 0:
        return ClosedFormCase(kind=RootCase.positive_discriminant, discriminant=d)
    return ClosedFormCase(
        kind=RootCase.negative_discriminant, discriminant=d, phi=_phase(point, d)
    )


def _modulus_power(z: float, n: int) -> float:
    # (-z)^(n/2) with z < 0
    return math.exp(n / 2 * math.log(-z))


def xi_path_closed_real(n: int, point: FloatPoint) -> float:
    """Two distinct real roots (D > 0)."""
    x, y = point.x, point.y
    root = math.sqrt(discriminant(point))
    r1, r2 = (x + y - root) / 2, (x + y + root) / 2
    c1, c2 = (root - x + y) / (2 * root), (root + x - y) / (2 * root)
    return c1 * r1 ** n + c2 * r2 ** n


def xi_path_closed_trig(n: int, point: FloatPoint) -> float:
    """Complex conjugate roots (D < 0), written without complex numbers."""
    d = discriminant(point)
    phi = phase_phi(point)
    angle = n * phi
    return _modulus_power(point.z, n) * (
        math.cos(angle) + (point.x - point.y) / math.sqrt(-d) * math.sin(angle)
    )


def xi_path_closed_repeated(n: int, point: FloatPoint) -> float:
    """Double root (x + y) / 2 (D = 0)."""
    if n == 0:
        return 1.0
    x, y = point.x, point.y
    return ((n + 1) * x - (n - 1) * y) / 2 * ((x + y) / 2) ** (n - 1)


def xi_path_closed(n: int, point: FloatPoint) -> float:
    _check_length(n)
    case = classify(point)
    if case.kind == RootCase.repeated_root:
        return xi_path_closed_repeated(n, point)
    if case.kind == RootCase.positive_discriminant:
        return xi_path_closed_real(n, point)
    return xi_path_closed_trig(n, point)


def _cycle_tail(n: int, point: FloatPoint) -> float:
    x, y, z = point.x, point.y, point.z
    return y ** (n - 1) * (x * y - y + z)


def xi_cycle_closed_real(n: int, point: FloatPoint) -> float:
    """Branch for D >= 0: r1^n + r2^n + y^(n-1) (xy - y + z)."""
    d = discriminant(point)
    if d < 0 and not _is_repeated_root(point, d):
        raise DomainError(f'the real-root form needs D >= 0, got D={d}')
    root = math.sqrt(max(d, 0.0))
    s = point.x + point.y
    return ((s - root) / 2) ** n + ((s + root) / 2) ** n + _cycle_tail(n, point)


def xi_cycle_closed_trig(n: int, point: FloatPoint) -> float:
    """Branch for D <= 0: 2 (-z)^(n/2) cos(n phi) + y^(n-1) (xy - y + z)."""
    d = discriminant(point)
    if d > 0 and not _is_repeated_root(point, d):
        raise DomainError(f'the trigonometric form needs D <= 0, got D={d}')
    if point.z == 0:
        # D <= 0 with z = 0 forces x + y = 0, where both roots vanish
        return _cycle_tail(n, point)
    return 2 * _modulus_power(point.z, n) * math.cos(
        n * _phase(point, d)
    ) + _cycle_tail(n, point)


def xi_cycle_closed_boundary(n: int, point: FloatPoint) -> float:
    """Value on z = -((x + y) / 2)^2, where the two branches coincide."""
    x, y = point.x, point.y
    return 2 * ((x + y) / 2) ** n - (x * x - 2 * x * y + y * y + 4 * y) / 4 * y ** (
        n - 1
    )


def xi_cycle_closed(n: int, point: FloatPoint) -> float:
    if n < 1:
        raise DomainError(f'cycles need n >= 1, got {n}')
    case = classify(point)
    if case.kind == RootCase.repeated_root:
        return xi_cycle_closed_boundary(n, point)
    if case.kind == RootCase.positive_discriminant:
        return xi_cycle_closed_real(n, point)
    return xi_cycle_closed_trig(n, point)
