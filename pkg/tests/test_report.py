from pathlib import Path

import pytest

from edge_elimination.report import LegendReport, Report, StatsReport
from edge_elimination.types import EngineStats, Specialization

DATA_PATH: Path = Path(__file__).parent / 'data' / 'templates'

STATS = EngineStats(nodes=12, cache_hits=3, peak_cache_size=7)


def test_stats_report():
    report = StatsReport(STATS, memo=True, policy='min-degree')
    assert report.render() == (
        'recursion nodes: 12\n'
        'cache hits: 3\n'
        'peak cache size: 7\n'
        'memoization: on\n'
        'edge policy: min-degree'
    )


def test_stats_report_without_memo():
    assert 'memoization: off' in str(StatsReport(EngineStats(), False, 'last'))


def test_custom_template_dir():
    report = StatsReport(STATS, True, 'first', custom_template_dir=DATA_PATH)
    assert report.template_file_path == DATA_PATH / 'stats.jinja2'
    assert report.render() == 'nodes=12 hits=3 peak=7'


def test_custom_template_dir_falls_back():
    report = LegendReport(Specialization.matching, custom_template_dir=DATA_PATH)
    assert report.template_file_path == Path('legend.jinja2')


@pytest.mark.parametrize(
    'which,expected',
    [
        (
            Specialization.matching,
            '# bivariate matching polynomial M(G; x, y) = xi(G; x, 0, y)\n'
            '#   x: uncovered vertices\n'
            '#   y: matching edges (z of xi)',
        ),
        (
            'covered',
            '# covered components polynomial C(G; x, y, z) = xi(G; x, y, xyz - xy)\n'
            '#   x: connected components\n'
            '#   y: edges\n'
            '#   z: components containing an edge',
        ),
    ],
)
def test_legend_report(which, expected):
    assert LegendReport(which).render() == expected


def test_report_requires_template():
    class Untitled(Report):
        def render(self) -> str:
            return ''

    with pytest.raises(Exception, match='TEMPLATE_FILE_PATH is undefined'):
        Untitled()
