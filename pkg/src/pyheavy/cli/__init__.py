"""
Usage:
    pyheavy --version
    pyheavy [-v...] <command> [<args>...]

Options:
   --version                Print pyheavy version information
   -v, --verbose            More log output (repeat for debug messages)

The most commonly used subcommands are:
   help                     Get help
   check                    Heavy subgraph conditions of a graph
   closure                  r- or c-closure, trace and regions of a graph
   oracle                   Hamiltonicity and circumference
   gen                      Generate named graphs and families
   verify                   Run verification suites
   hunt                     Search counterexamples to a named property

Graphs are read and written in graph6 format; results are printed as JSON.

See 'pyheavy help <command>' for more information on a specific command.
"""

import pyheavy
from pyheavy.graphops import Graph6Error, parse_graph6

import click

import functools
import json
import logging
import sys
from importlib import import_module


class SubCommands(click.MultiCommand):

    def __init__(self, *args, package, commands, **kwargs):
        super().__init__(*args, **kwargs)
        self._package = package
        self._commands = commands

    def list_commands(self, ctx):
        return self._commands

    def get_command(self, ctx, name):
        if name in self._commands:
            module = import_module(self._package + '.' + name)
            return module.main


@click.command(
    'pyheavy',
    cls=SubCommands,
    package='pyheavy.cli',
    commands=[
        'check',
        'closure',
        'oracle',
        'gen',
        'verify',
        'hunt',
        'help',
    ],
)
@click.version_option(
    version=pyheavy.__version__,
    prog_name='pyheavy',
)
@click.option('-v', '--verbose', count=True,
              help="Increase log output, repeat for debug messages.")
def main(verbose):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(
        level=level, format='%(levelname)s %(name)s: %(message)s')


def load_graph(ctx, param, value):
    """Click callback: parse a graph6 argument, ``-`` reads stdin."""
    if value is None:
        return None
    if value == '-':
        value = sys.stdin.readline()
    try:
        return parse_graph6(value)
    except Graph6Error as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param)


def graph_input(func):
    """Take the graph either as ``--graph <graph6>`` or as a positional
    ``<graph6>`` argument and pass it on as ``graph``."""
    def wrapper(*args, graph_option=None, graph_argument=None, **kwargs):
        if (graph_option is None) == (graph_argument is None):
            raise click.UsageError(
                "Pass exactly one graph, as <graph6> or with --graph")
        graph = graph_argument if graph_option is None else graph_option
        return func(*args, graph=graph, **kwargs)
    wrapper = functools.update_wrapper(wrapper, func)
    wrapper = click.option(
        '-g', '--graph', 'graph_option', metavar='<graph6>',
        callback=load_graph, help="Input graph; - reads stdin.")(wrapper)
    return click.argument(
        'graph_argument', metavar='[<graph6>]', required=False,
        callback=load_graph)(wrapper)


def emit(data, out=None):
    """Print ``data`` as JSON, or write it to ``out``."""
    text = data if isinstance(data, str) else json.dumps(data, indent=2)
    if out:
        with open(out, 'w') as f:
            f.write(text + '\n')
    else:
        click.echo(text)


def library_errors(func):
    """Turn library errors raised by ``func`` into usage errors (exit
    code 2)."""
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except click.ClickException:
            raise
        except ValueError as e:
            raise click.UsageError(str(e))
    return functools.update_wrapper(wrapper, func)
