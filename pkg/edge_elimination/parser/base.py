from abc import ABC, abstractmethod
from pathlib import Path
from typing import Generic, Optional, TypeVar

T = TypeVar('T')


class Parser(ABC, Generic[T]):
    def __init__(self, filename: Optional[str] = None, text: Optional[str] = None):
        if text is None and filename is None:
            raise ValueError('either filename or text is required')
        self.filename: Optional[str] = filename
        self.text: str = text if text is not None else Path(filename).read_text()  # type: ignore

    @abstractmethod
    def parse(self) -> T:
        raise NotImplementedError
