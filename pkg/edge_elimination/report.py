from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Optional

from jinja2 import Template

from edge_elimination.types import EngineStats, Specialization

TEMPLATE_DIR: Path = Path(__file__).parents[0] / 'template'


class TemplateBase(ABC):
    def __init__(self, template_file_path: Path) -> None:
        self.template_file_path: Path = template_file_path
        self._template: Template = Template(
            (TEMPLATE_DIR / self.template_file_path).read_text()
        )

    @property
    def template(self) -> Template:
        return self._template

    @abstractmethod
    def render(self) -> str:
        raise NotImplementedError

    def _render(self, *args: Any, **kwargs: Any) -> str:
        return self.template.render(*args, **kwargs)

    def __str__(self) -> str:
        return self.render()


class Report(TemplateBase, ABC):
    TEMPLATE_FILE_PATH: str = ''

    def __init__(self, custom_template_dir: Optional[Path] = None) -> None:
        if not self.TEMPLATE_FILE_PATH:
            raise Exception('TEMPLATE_FILE_PATH is undefined')
        template_file_path = Path(self.TEMPLATE_FILE_PATH)
        if custom_template_dir is not None:
            custom_template_file_path = custom_template_dir / template_file_path.name
            if custom_template_file_path.exists():
                template_file_path = custom_template_file_path
        super().__init__(template_file_path=template_file_path)


class StatsReport(Report):
    TEMPLATE_FILE_PATH = 'stats.jinja2'

    def __init__(
        self,
        stats: EngineStats,
        memo: bool,
        policy: str,
        custom_template_dir: Optional[Path] = None,
    ) -> None:
        self.stats: EngineStats = stats
        self.memo: bool = memo
        self.policy: str = policy
        super().__init__(custom_template_dir=custom_template_dir)

    def render(self) -> str:
        return self._render(stats=self.stats, memo=self.memo, policy=self.policy)


LEGENDS: Dict[Specialization, List[Dict[str, str]]] = {
    Specialization.matching: [
        {'name': 'x', 'meaning': 'uncovered vertices'},
        {'name': 'y', 'meaning': 'matching edges (z of xi)'},
    ],
    Specialization.chromatic2: [
        {'name': 'x', 'meaning': 'colours in total'},
        {'name': 'y', 'meaning': 'proper colours'},
    ],
    Specialization.covered: [
        {'name': 'x', 'meaning': 'connected components'},
        {'name': 'y', 'meaning': 'edges'},
        {'name': 'z', 'meaning': 'components containing an edge'},
    ],
}

TITLES: Dict[Specialization, str] = {
    Specialization.matching: 'bivariate matching polynomial M(G; x, y) = xi(G; x, 0, y)',
    Specialization.chromatic2: (
        'bivariate chromatic polynomial P(G; x, y) = xi(G; x, -1, x - y)'
    ),
    Specialization.covered: (
        'covered components polynomial C(G; x, y, z) = xi(G; x, y, xyz - xy)'
    ),
}


class LegendReport(Report):
    TEMPLATE_FILE_PATH = 'legend.jinja2'

    def __init__(
        self, which: Specialization, custom_template_dir: Optional[Path] = None
    ) -> None:
        self.which: Specialization = Specialization(which)
        super().__init__(custom_template_dir=custom_template_dir)

    def render(self) -> str:
        return self._render(
            title=TITLES[self.which], variables=LEGENDS[self.which]
        )
