from .poly import (
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
from .series import (
    Series,
    series_add,
    series_from_coeffs,
    series_inverse,
    series_mul,
    series_unit,
)
