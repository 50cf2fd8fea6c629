"""
Exact cycle oracles.
"""

from pyheavy.cli import emit, graph_input, library_errors
from pyheavy.cycles import (
    OracleLimitError, circumference, dirac_ore_fan_sanity, is_hamiltonian)

import click


ORACLES = {
    'hamiltonian': is_hamiltonian,
    'circumference': circumference,
}


@click.command('oracle')
@graph_input
@click.option('--hamiltonian', 'question', flag_value='hamiltonian',
              default=True, help="Decide hamiltonicity (default).")
@click.option('--circumference', 'question', flag_value='circumference',
              help="Compute the length of a longest cycle.")
@click.option('--classical', is_flag=True,
              help="Also evaluate Dirac's, Ore's and Fan's conditions.")
@click.option('--max-order', type=int,
              help="Override the configured order cap.")
@click.option('--out', type=click.Path(dir_okay=False),
              help="Write the JSON result to a file.")
@library_errors
def main(graph, question, classical, max_order, out):
    """
    Decide hamiltonicity or compute the circumference.

    Prints {value, certificate?}; the certificate is a cycle in vertex
    order.
    """
    try:
        value, cycle = ORACLES[question](graph, max_order)
    except OracleLimitError as e:
        raise click.UsageError(str(e))
    data = {'oracle': question, 'value': value}
    if cycle is not None:
        data['certificate'] = list(cycle.vertices)
    if classical:
        data['classical'] = dirac_ore_fan_sanity(graph).to_dict()
    emit(data, out)
