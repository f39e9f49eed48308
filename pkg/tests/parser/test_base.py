from pathlib import Path

import pytest

from edge_elimination.parser.base import Parser

DATA_PATH: Path = Path(__file__).parents[1] / 'data' / 'graphs'


class LineCounter(Parser[int]):
    def parse(self) -> int:
        return len(self.text.splitlines())


def test_parser_text():
    parser = LineCounter(text='a\nb\n')
    assert parser.filename is None
    assert parser.parse() == 2


def test_parser_filename():
    filename = str(DATA_PATH / 'p3.txt')
    parser = LineCounter(filename=filename)
    assert parser.filename == filename
    assert parser.parse() == 3


def test_parser_requires_input():
    with pytest.raises(ValueError):
        LineCounter()
