from typing import List

from edge_elimination.polyring.poly import Poly


def format_poly(poly: Poly) -> str:
    """Canonical text form, e.g. ``x^2 + 2*x*y + x*y^2 + y*z + 2*z``."""
    pieces: List[str] = []
    for monomial, coefficient in poly.items():
        magnitude = abs(coefficient)
        if monomial.degree == 0:
            body = str(magnitude)
        elif magnitude == 1:
            body = str(monomial)
        else:
            body = f'{magnitude}*{monomial}'
        if not pieces:
            pieces.append(f'-{body}' if coefficient < 0 else body)
        else:
            pieces.append(f'- {body}' if coefficient < 0 else f'+ {body}')
    return ' '.join(pieces) or '0'


def dump_json(poly: Poly) -> str:
    from edge_elimination.parser.jsonpoly import PolyDocument

    return PolyDocument.from_poly(poly).json()
