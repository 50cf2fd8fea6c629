"""
Search for graphs that violate a named property.
"""

from pyheavy.cli import emit, library_errors
from pyheavy.cli.gen import parse_params
from pyheavy.cli.verify import parse_orders
from pyheavy.families import (
    FAMILIES, FamilyError, Predicate, build_family, sample_filtered)
from pyheavy.graphops import Graph6Error, parse_graph6
from pyheavy.harness import hunt
from pyheavy.suites import HUNT_PREDICATES

import click


def parse_seeds(ctx, param, value):
    """Seed graphs: graph6 strings or ``<family>:<k=v,...>``."""
    graphs = []
    for item in value:
        if ':' in item or item in FAMILIES:
            name, _, raw = item.partition(':')
            try:
                params = parse_params(ctx, param, raw)
                graphs.append(build_family(name, **params).graph)
            except FamilyError as e:
                raise click.BadParameter(str(e), ctx=ctx, param=param)
        else:
            try:
                graphs.append(parse_graph6(item))
            except Graph6Error as e:
                raise click.BadParameter(str(e), ctx=ctx, param=param)
    return graphs


def parse_filter(ctx, param, value):
    if value is not None:
        try:
            Predicate(value)
        except FamilyError as e:
            raise click.BadParameter(str(e), ctx=ctx, param=param)
    return value


@click.command('hunt')
@click.option('-p', '--predicate', required=True,
              type=click.Choice(sorted(HUNT_PREDICATES)),
              help="Property to look for violations of.")
@click.option('-b', '--budget', type=click.IntRange(1), default=1000,
              show_default=True, help="Number of graphs to examine.")
@click.option('-g', '--graph', 'seeds', multiple=True,
              callback=parse_seeds, metavar='<graph6>|<family>:<k=v,...>',
              help="Seed graph examined before sampling; may be repeated.")
@click.option('--orders', callback=parse_orders, default='8:12',
              show_default=True, help="Orders of the random graphs.")
@click.option('--edge-probability', type=(float, float), default=(0.3, 0.9),
              show_default=True, help="Range of the edge probability.")
@click.option('--filter', 'predicate_filter', callback=parse_filter,
              help="Sampler filter such as '2-connected & claw-o-heavy'.")
@click.option('--seed', type=int, default=0, show_default=True,
              help="Seed of the random sampler.")
@click.option('--no-sampling', is_flag=True,
              help="Only examine the seed graphs.")
@click.option('--out', type=click.Path(dir_okay=False),
              help="Write the JSON result to a file.")
@library_errors
def main(predicate, budget, seeds, orders, edge_probability,
         predicate_filter, seed, no_sampling, out):
    """
    Collect counterexamples to a named property.

    Exits with code 1 if a witness was found.
    """
    sampler = None
    if not no_sampling:
        sampler = sample_filtered(orders, edge_probability, seed=seed,
                                  predicate=predicate_filter, budget=budget)
    found = hunt(predicate, seeds, sampler, budget)
    emit({
        'predicate': predicate,
        'budget': budget,
        'seed': seed,
        'witnesses': [
            {'graph6': v.graph6, 'detail': v.detail} for v in found],
    }, out)
    if found:
        click.get_current_context().exit(1)
