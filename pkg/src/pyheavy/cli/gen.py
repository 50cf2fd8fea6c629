"""
Generate named graphs, family members and catalog patterns as graph6.
"""

from pyheavy.cli import emit, library_errors
from pyheavy.families import (
    FAMILIES, FamilyClaimError, FamilyError, build_family, family_claims)
from pyheavy.graphops import write_graph6
from pyheavy.patterns import CATALOG, PatternError, make_pattern

import click


def parse_params(ctx, param, value):
    """``'k=5,r=8'`` -> ``{'k': 5, 'r': 8}``; non-integers stay strings."""
    params = {}
    for item in filter(None, (value or '').split(',')):
        key, sep, raw = item.partition('=')
        if not sep or not key.strip():
            raise click.BadParameter(
                "Expected key=value, got {!r}".format(item),
                ctx=ctx, param=param)
        raw = raw.strip()
        try:
            params[key.strip()] = int(raw)
        except ValueError:
            params[key.strip()] = raw
    return params


@click.command('gen')
@click.option('-f', '--family', type=click.Choice(sorted(FAMILIES)),
              help="Family or named graph to build.")
@click.option('-p', '--params', callback=parse_params, default='',
              metavar='k=v,...', help="Family parameters.")
@click.option('--pattern', metavar='<name>',
              help="Catalog pattern to print instead of a family member.")
@click.option('--list', 'show_list', is_flag=True,
              help="List families with their parameter constraints.")
@click.option('--claims', is_flag=True,
              help="Print the evaluated claims of the construction as JSON.")
@click.option('--verify', is_flag=True,
              help="Fail if a claim of the construction does not hold.")
@click.option('--plot', type=click.Path(dir_okay=False),
              help="Save a drawing of the graph.")
@library_errors
def main(family, params, pattern, show_list, claims, verify, plot):
    """Print a graph in graph6 format."""
    if show_list:
        for name, info in FAMILIES.items():
            click.echo('{:20} {:16} {}'.format(
                name, ','.join(info.params) or '-', info.constraint))
        click.echo('patterns: {}'.format(', '.join(CATALOG)))
        return
    if (family is None) == (pattern is None):
        raise click.UsageError("Give exactly one of --family or --pattern")
    labels = None
    if pattern is not None:
        try:
            graph = make_pattern(pattern).graph
        except PatternError as e:
            raise click.BadParameter(str(e), param_hint='--pattern')
    else:
        try:
            built = build_family(family, verify=verify, **params)
        except FamilyClaimError as e:
            raise click.ClickException(str(e))
        except FamilyError as e:
            raise click.BadParameter(str(e), param_hint='--params')
        graph, labels = built.graph, built.labels
    click.echo(write_graph6(graph))
    if claims and pattern is None:
        emit({
            'family': built.to_dict(),
            'labels': labels,
            'claims': [c.to_dict() for c in family_claims(built)],
        })
    if plot:
        from pyheavy.plotting import draw_graph
        import matplotlib.pyplot as plt
        fig, ax = plt.subplots(figsize=(6, 6))
        draw_graph(graph, ax=ax, layout='spring' if labels else
                   'circular', degree_colors=True)
        fig.savefig(plot)
