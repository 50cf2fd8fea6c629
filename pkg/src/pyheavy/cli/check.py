"""
Evaluate heavy subgraph conditions on a graph.
"""

from pyheavy.cli import emit, graph_input, library_errors
from pyheavy.graphops import is_two_connected, members
from pyheavy.heavy import (
    ConditionError, ConditionKind, graph_satisfies, heavy_pairs,
    heavy_vertices, parse_condition)
from pyheavy.patterns import PatternError, make_pattern

import click


DEFAULT_CONDITIONS = (
    'claw-free',
    'claw-o-heavy',
    'claw-f-heavy',
    'N-c-heavy',
    'N-p-heavy',
    'P6-c-heavy',
    'Z3-c-heavy',
)


def parse_conditions(ctx, param, value):
    parsed = []
    for text in value:
        try:
            pattern, kind = parse_condition(text)
            spec = make_pattern(pattern)
        except (ConditionError, PatternError) as e:
            raise click.BadParameter(str(e), ctx=ctx, param=param)
        if kind is ConditionKind.P_HEAVY and spec.name != 'N':
            raise click.BadParameter(
                "p-heavy is only defined for the net", ctx=ctx, param=param)
        parsed.append((text, spec, kind))
    return parsed


def parse_pattern(ctx, param, value):
    if value is None:
        return None
    try:
        return make_pattern(value)
    except PatternError as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param)


def witness_dict(result):
    data = {'satisfied': result.satisfied}
    if result.witness is not None:
        data['witness'] = result.witness.members()
    return data


@click.command('check')
@graph_input
@click.option('-p', '--pattern', callback=parse_pattern, metavar='<name>',
              help="Catalog pattern to check, together with --condition.")
@click.option('-c', '--condition', 'kind',
              type=click.Choice([k.value for k in ConditionKind]),
              help="Condition the copies of --pattern must satisfy.")
@click.option('-r', '--require', 'conditions', multiple=True,
              callback=parse_conditions, metavar='<S>-<kind>',
              help="Report on a condition such as 'claw-o-heavy' or "
                   "'N-p-heavy'; may be repeated.")
@click.option('--out', type=click.Path(dir_okay=False),
              help="Write the JSON result to a file.")
@library_errors
def main(graph, pattern, kind, conditions, out):
    """
    Check heavy subgraph conditions of a graph.

    With --pattern and --condition a single condition is checked and the
    result is {satisfied, witness?}. Otherwise a report on the --require
    conditions (or a default selection) is printed.

    Exits with code 1 if a condition fails.
    """
    if (pattern is None) != (kind is None):
        raise click.UsageError("--pattern and --condition go together")
    if pattern is not None:
        if conditions:
            raise click.UsageError("--require cannot be combined with "
                                   "--pattern")
        data = witness_dict(graph_satisfies(graph, pattern, kind))
        emit(data, out)
        if not data['satisfied']:
            click.get_current_context().exit(1)
        return
    if not conditions:
        conditions = parse_conditions(None, None, DEFAULT_CONDITIONS)
    results = {
        text: witness_dict(graph_satisfies(graph, spec, kind))
        for text, spec, kind in conditions
    }
    emit({
        'order': graph.n,
        'size': graph.edge_count,
        '2-connected': is_two_connected(graph),
        'heavy_vertices': members(heavy_vertices(graph)),
        'heavy_pairs': [list(p) for p in heavy_pairs(graph)],
        'conditions': results,
    }, out)
    if not all(r['satisfied'] for r in results.values()):
        click.get_current_context().exit(1)
