from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional

import toml
from pydantic import BaseModel, conint

CONFIG_TABLE: str = 'edge-elimination'
DEFAULT_MAX_VERTICES: int = 16


class EdgePolicy(Enum):
    min_degree = 'min-degree'
    first = 'first'
    last = 'last'
    random = 'random'


def _hyphenate(name: str) -> str:
    return name.replace('_', '-')


class EngineConfig(BaseModel):
    max_vertices: conint(ge=0) = DEFAULT_MAX_VERTICES  # type: ignore
    memo: bool = True
    shared_cache: bool = False
    edge_policy: EdgePolicy = EdgePolicy.min_degree
    seed: int = 0

    class Config:
        alias_generator = _hyphenate
        allow_population_by_field_name = True
        extra = 'forbid'


def find_project_root(start: Optional[Path] = None) -> Path:
    start = (start or Path()).resolve()
    for directory in (start, *start.parents):
        if (directory / 'pyproject.toml').is_file() or (directory / '.git').exists():
            return directory
    return start


def load_config(path: Optional[Path] = None, **overrides: Any) -> EngineConfig:
    """Read ``[tool.edge-elimination]`` from pyproject.toml, then apply overrides.

    Overrides whose value is None are ignored so that unset CLI flags keep the
    file's value.
    """
    if path is None:
        path = find_project_root() / 'pyproject.toml'
    values: Dict[str, Any] = {}
    if path.is_file():
        pyproject_toml = toml.load(str(path))
        values.update(pyproject_toml.get('tool', {}).get(CONFIG_TABLE, {}))
    for name, value in overrides.items():
        if value is not None:
            values[_hyphenate(name)] = value
    return EngineConfig.parse_obj(values)
