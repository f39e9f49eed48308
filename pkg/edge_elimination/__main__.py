#! /usr/bin/env python

"""
Main function.
"""

import json
import sys
from argparse import ArgumentParser, Namespace
from enum import IntEnum
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence, Union

import argcomplete

from edge_elimination import enable_debug_message
from edge_elimination.config import EdgePolicy, EngineConfig, load_config
from edge_elimination.exceptions import (
    ExponentOverflowError,
    LoopNotAllowedError,
    OracleLimitExceeded,
    VertexLimitExceeded,
)
from edge_elimination.types import Specialization

ORACLE_COLOURS: int = 4
FALLBACK_VERSION: str = '0.0.0'
CYCLE_ZERO_NOTE: str = 'note: C_0 is the empty graph, so xi(C_0) = 1'


class Exit(IntEnum):
    """Exit reasons."""

    OK = 0
    ERROR = 1
    INPUT_ERROR = 2
    RESOURCE_ERROR = 3


common_parser = ArgumentParser(add_help=False)
common_parser.add_argument(
    '--json', help='print polynomials as JSON term lists', action='store_true'
)
common_parser.add_argument(
    '--max-vertices',
    help='refuse graphs with more vertices than this (default: 16)',
    type=int,
)
common_parser.add_argument(
    '--no-memo', help='disable the memo cache', action='store_true'
)
common_parser.add_argument(
    '--shared-cache',
    help='share one memo cache between computations',
    action='store_true',
)
common_parser.add_argument(
    '--edge-policy',
    help='edge chosen at each recursion step (default: min-degree)',
    choices=[policy.value for policy in EdgePolicy],
)
common_parser.add_argument('--seed', help='seed of the random policy', type=int)
common_parser.add_argument(
    '--stats', help='print recursion statistics to stderr', action='store_true'
)
common_parser.add_argument('--debug', help='show debug message', action='store_true')

arg_parser = ArgumentParser(
    prog='edge-elim', description='Edge elimination polynomial of multigraphs'
)
arg_parser.add_argument('--version', help='show version', action='store_true')
subparsers = arg_parser.add_subparsers(dest='command')

compute_parser = subparsers.add_parser(
    'compute', parents=[common_parser], help='xi of a graph file'
)
compute_parser.add_argument('graph', help='graph text file: "n m", then m lines "u v"')
compute_parser.add_argument(
    '--eval', help='evaluate exactly at x,y,z (e.g. 1/2,-1,3)', metavar='X,Y,Z'
)

family_parser = subparsers.add_parser(
    'family', parents=[common_parser], help='xi of a path or cycle'
)
family_parser.add_argument('kind', choices=['path', 'cycle'])
family_parser.add_argument('n', type=int)
family_parser.add_argument('--eval', help='evaluate at x,y,z', metavar='X,Y,Z')
family_parser.add_argument(
    '--closed-form',
    help='evaluate with the closed form in floating point (needs --eval)',
    action='store_true',
)
family_parser.add_argument(
    '--specialize', choices=[which.value for which in Specialization]
)

series_parser = subparsers.add_parser(
    'series', parents=[common_parser], help='generating function coefficients'
)
series_parser.add_argument('kind', choices=['path', 'cycle'])
series_parser.add_argument('order', type=int, metavar='N')

specialize_parser = subparsers.add_parser(
    'specialize', parents=[common_parser], help='matching, chromatic or covered'
)
specialize_parser.add_argument('graph', help='graph text file')
specialize_parser.add_argument(
    'which', choices=[which.value for which in Specialization]
)
specialize_parser.add_argument(
    '--oracle-check',
    help='compare against exhaustive enumeration',
    action='store_true',
)


def _print_poly(poly: Any, as_json: bool) -> None:
    from edge_elimination.format import dump_json

    print(dump_json(poly) if as_json else poly)


def _print_value(value: Union[float, Fraction], as_json: bool) -> None:
    if as_json:
        print(json.dumps(value if isinstance(value, float) else str(value)))
    else:
        print(value)


def _engine_config(namespace: Namespace) -> EngineConfig:
    return load_config(
        max_vertices=namespace.max_vertices,
        memo=False if namespace.no_memo else None,
        shared_cache=True if namespace.shared_cache else None,
        edge_policy=namespace.edge_policy,
        seed=namespace.seed,
    )


def _print_stats(stats: Any, config: EngineConfig) -> None:
    from edge_elimination.report import StatsReport

    report = StatsReport(stats, memo=config.memo, policy=config.edge_policy.value)
    print(report, file=sys.stderr)


def _read_graph(filename: str) -> Any:
    from edge_elimination.parser.graph import GraphTextParser

    return GraphTextParser(filename=filename, text=Path(filename).read_text()).parse()


def compute(namespace: Namespace, config: EngineConfig) -> Exit:
    from edge_elimination.engine import XiEngine
    from edge_elimination.polyring import eval_exact
    from edge_elimination.types import RationalPoint

    point = RationalPoint.parse(namespace.eval) if namespace.eval else None
    graph = _read_graph(namespace.graph)
    poly, stats = XiEngine(config).compute_with_stats(graph)
    if point is not None:
        _print_value(eval_exact(poly, point), namespace.json)
    else:
        _print_poly(poly, namespace.json)
    if namespace.stats:
        _print_stats(stats, config)
    return Exit.OK


def family(namespace: Namespace, config: EngineConfig) -> Exit:
    from edge_elimination import families, specializations
    from edge_elimination.exceptions import DomainError
    from edge_elimination.polyring import eval_exact
    from edge_elimination.types import RationalPoint

    kind, n = namespace.kind, namespace.n
    if n < 0:
        raise DomainError(f'n must be nonnegative, got {n}')
    if n > config.max_vertices:
        raise VertexLimitExceeded(n, config.max_vertices)
    if namespace.closed_form and namespace.eval is None:
        raise DomainError('--closed-form needs a point, pass --eval x,y,z')

    if kind == 'cycle' and n == 0:
        print(CYCLE_ZERO_NOTE, file=sys.stderr)

    which = Specialization(namespace.specialize) if namespace.specialize else None
    if which in specializations.LOOP_FREE and kind == 'cycle' and n == 1:
        raise LoopNotAllowedError(
            f'loops not allowed: C_1 is a loop and {which.value} needs a '
            f'loop-free graph'
        )

    if namespace.closed_form:
        float_point = RationalPoint.parse(namespace.eval).to_float()
        if which is not None:
            _print_legend(which)
        if kind == 'cycle' and n == 0:
            value = 1.0
        elif which is None and kind == 'path':
            value = families.xi_path_closed(n, float_point)
        elif which is None:
            value = families.xi_cycle_closed(n, float_point)
        elif kind == 'path':
            value = specializations.specialized_path_closed(n, float_point, which)
        else:
            value = specializations.specialized_cycle_closed(n, float_point, which)
        _print_value(value, namespace.json)
        return Exit.OK

    if kind == 'path':
        poly = families.xi_path_poly(n)
    else:
        poly = families.xi_cycle_poly(n)

    if which is not None:
        poly = specializations.specialize(poly, which)
        _print_legend(which)

    if namespace.eval:
        point = RationalPoint.parse(namespace.eval)
        _print_value(eval_exact(poly, point), namespace.json)
    else:
        _print_poly(poly, namespace.json)
    return Exit.OK


def series(namespace: Namespace, config: EngineConfig) -> Exit:
    from edge_elimination.exceptions import DomainError
    from edge_elimination.format import dump_json
    from edge_elimination.genfunc import coefficients, cycle_series, path_series

    order = namespace.order
    if order < 0:
        raise DomainError(f'N must be nonnegative, got {order}')
    built = path_series(order) if namespace.kind == 'path' else cycle_series(order)
    polys = coefficients(built)
    if namespace.json:
        print('[' + ', '.join(dump_json(poly) for poly in polys) + ']')
    else:
        for poly in polys:
            print(poly)
    return Exit.OK


def _print_legend(which: Specialization) -> None:
    from edge_elimination.report import LegendReport

    print(LegendReport(which), file=sys.stderr)


def _oracle_agrees(graph: Any, poly: Any, which: Specialization) -> bool:
    from edge_elimination import specializations
    from edge_elimination.polyring import eval_exact
    from edge_elimination.types import RationalPoint

    if which == Specialization.matching:
        return poly == specializations.oracle_matching(graph)
    if which == Specialization.covered:
        return poly == specializations.oracle_covered(graph)
    for x_val in range(ORACLE_COLOURS + 1):
        for y_val in range(x_val + 1):
            value = eval_exact(poly, RationalPoint(x=x_val, y=y_val, z=0))
            if value != specializations.oracle_chromatic2(graph, x_val, y_val):
                return False
        diagonal = eval_exact(poly, RationalPoint(x=x_val, y=x_val, z=0))
        if diagonal != specializations.oracle_chromatic(graph, x_val):
            return False
    return True


def specialize(namespace: Namespace, config: EngineConfig) -> Exit:
    from edge_elimination.engine import XiEngine
    from edge_elimination.specializations import LOOP_FREE, check_oracle_size
    from edge_elimination.specializations import specialize as apply_substitution

    which = Specialization(namespace.which)
    graph = _read_graph(namespace.graph)
    if which in LOOP_FREE and graph.has_loops:
        raise LoopNotAllowedError(
            f'loops not allowed: {which.value} needs a loop-free graph'
        )
    if namespace.oracle_check:
        check_oracle_size(graph)
    xi_poly, stats = XiEngine(config).compute_with_stats(graph)
    poly = apply_substitution(xi_poly, which)
    _print_legend(which)
    _print_poly(poly, namespace.json)
    if namespace.stats:
        _print_stats(stats, config)

    if namespace.oracle_check:
        if _oracle_agrees(graph, poly, which):
            print('oracle-check: PASS')
        else:
            print('oracle-check: FAIL')
            return Exit.ERROR
    return Exit.OK


COMMANDS = {
    'compute': compute,
    'family': family,
    'series': series,
    'specialize': specialize,
}


def main(args: Optional[Sequence[str]] = None) -> Exit:
    """Main function."""

    # add cli completion support
    argcomplete.autocomplete(arg_parser)

    if args is None:
        args = sys.argv[1:]

    namespace: Namespace = arg_parser.parse_args(args)

    if namespace.version:
        try:
            from edge_elimination.version import version
        except ImportError:  # pragma: no cover
            version = FALLBACK_VERSION
        print(version)
        return Exit.OK

    if namespace.command is None:
        arg_parser.error('a command is required')

    if namespace.debug:  # pragma: no cover
        enable_debug_message()

    try:
        config = _engine_config(namespace)
        return COMMANDS[namespace.command](namespace, config)
    except (VertexLimitExceeded, OracleLimitExceeded, ExponentOverflowError) as exc:
        message, code = str(exc), Exit.RESOURCE_ERROR
    except (ValueError, OSError) as exc:
        message, code = str(exc), Exit.INPUT_ERROR
    except Exception as exc:
        message, code = f'internal error: {exc!r}', Exit.ERROR
    print(f'error: {message}', file=sys.stderr)
    return code


if __name__ == '__main__':
    sys.exit(main())
