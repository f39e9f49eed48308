import re
from typing import Dict, List

from pydantic import BaseModel, StrictStr, ValidationError, conint, validator

from ..exceptions import PolyParseError
from ..polyring.poly import MAX_EXPONENT, Monomial, Poly
from .base import Parser

DECIMAL_PATTERN = re.compile(r'^-?[0-9]+$')


class PolyTerm(BaseModel):
    a: conint(strict=True, ge=0, le=MAX_EXPONENT)  # type: ignore
    b: conint(strict=True, ge=0, le=MAX_EXPONENT)  # type: ignore
    c: conint(strict=True, ge=0, le=MAX_EXPONENT)  # type: ignore
    coeff: StrictStr

    @validator('coeff')
    def validate_coeff(cls, value: str) -> str:
        if not DECIMAL_PATTERN.match(value):
            raise ValueError(f'coefficient must be a decimal integer, got {value!r}')
        return value


class PolyDocument(BaseModel):
    __root__: List[PolyTerm]

    @classmethod
    def from_poly(cls, poly: Poly) -> 'PolyDocument':
        return cls(
            __root__=[
                PolyTerm(a=m.a, b=m.b, c=m.c, coeff=str(coefficient))
                for m, coefficient in poly.items()
            ]
        )

    def to_poly(self) -> Poly:
        terms: Dict[Monomial, int] = {}
        for term in self.__root__:
            monomial = Monomial(term.a, term.b, term.c)
            if monomial in terms:
                raise PolyParseError(f'monomial {monomial} appears twice')
            terms[monomial] = int(term.coeff)
        return Poly(terms)


class PolyJsonParser(Parser[Poly]):
    def parse(self) -> Poly:
        try:
            document = PolyDocument.parse_raw(self.text)
        except ValidationError as exc:
            raise PolyParseError(f'invalid JSON polynomial: {exc}')
        return document.to_poly()
