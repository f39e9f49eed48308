from enum import Enum
from fractions import Fraction
from typing import Any, List, Optional

from pydantic import BaseModel, validator


def _split_coordinates(text: str) -> List[str]:
    parts = [part.strip() for part in text.split(',')]
    if len(parts) != 3 or not all(parts):
        raise ValueError(f'expected three comma separated values x,y,z, got {text!r}')
    return parts


class RationalPoint(BaseModel):
    x: Fraction
    y: Fraction
    z: Fraction

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator('x', 'y', 'z', pre=True)
    def validate_fraction(cls, value: Any) -> Fraction:
        if isinstance(value, bool):
            raise ValueError('booleans are not coordinates')
        try:
            return Fraction(value)
        except ZeroDivisionError:
            raise ValueError('denominator must be nonzero')

    @classmethod
    def parse(cls, text: str) -> 'RationalPoint':
        x, y, z = _split_coordinates(text)
        return cls(x=x, y=y, z=z)

    def to_float(self) -> 'FloatPoint':
        return FloatPoint(x=float(self.x), y=float(self.y), z=float(self.z))


class FloatPoint(BaseModel):
    x: float
    y: float
    z: float

    class Config:
        allow_mutation = False

    def to_rational(self) -> RationalPoint:
        # every finite double is an exact rational
        return RationalPoint(x=self.x, y=self.y, z=self.z)


class EngineStats(BaseModel):
    nodes: int = 0
    cache_hits: int = 0
    peak_cache_size: int = 0


class RootCase(Enum):
    positive_discriminant = 'positive'
    negative_discriminant = 'negative'
    repeated_root = 'repeated'


class ClosedFormCase(BaseModel):
    kind: RootCase
    discriminant: float
    phi: Optional[float] = None

    class Config:
        allow_mutation = False


class Specialization(Enum):
    matching = 'matching'
    chromatic2 = 'chromatic2'
    covered = 'covered'
