"""
Compute the r- or c-closure of a graph.
"""

from pyheavy.cli import emit, graph_input, library_errors
from pyheavy.closure import (
    PreconditionError, check_closed_shape, closure, make_policy,
    region_lemma_violations, regions)
from pyheavy.graphops import write_graph6

import click


def check_policy(ctx, param, value):
    try:
        make_policy(value)
    except ValueError as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param)
    return value


@click.command('closure')
@graph_input
@click.option('-k', '--kind', type=click.Choice(['r', 'c']), default='c',
              show_default=True, help="Closure type.")
@click.option('-p', '--policy', default='smallest', show_default=True,
              callback=check_policy,
              help="Eligible vertex selection: smallest, largest or "
                   "random:<seed>.")
@click.option('--trace', is_flag=True,
              help="Add the graph6 of the graph after every step.")
@click.option('--check/--no-check', default=True, show_default=True,
              help="Require a claw-free (r) or claw-o-heavy (c) input.")
@click.option('--regions', 'with_regions', is_flag=True,
              help="Also report the regions and their structure.")
@click.option('--plot', type=click.Path(dir_okay=False),
              help="Save a drawing of the graph and its closure.")
@click.option('--out', type=click.Path(dir_okay=False),
              help="Write the JSON result to a file.")
@library_errors
def main(graph, kind, policy, trace, check, with_regions, plot, out):
    """
    Compute a closure with its trace of local completions.

    Prints {closure_graph6, steps, shape_report}; every step names the
    completed vertex and the edges it added.
    """
    try:
        result = closure(graph, kind, policy, check=check)
    except PreconditionError as e:
        raise click.UsageError(str(e))
    steps = result.trace.to_dict()['steps']
    if trace:
        for step, current in zip(steps, result.trace.graphs(graph)):
            step['graph6'] = write_graph6(current)
    data = {
        'kind': kind,
        'closure_graph6': write_graph6(result.graph),
        'steps': steps,
        'shape_report': check_closed_shape(result.graph, kind).to_dict(),
    }
    if with_regions:
        region_map = regions(graph, check=check)
        data['regions'] = region_map.to_dict()
        data['region_problems'] = region_lemma_violations(graph, region_map)
    if plot:
        from pyheavy.plotting import draw_closure
        fig = draw_closure(graph, kind, check=check)
        fig.savefig(plot)
    emit(data, out)
