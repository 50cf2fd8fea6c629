"""
Show help on a pyheavy command, or list the suites, families, patterns and
hunt predicates that other commands accept.
"""

import pyheavy.cli as cli
from pyheavy.families import FAMILIES
from pyheavy.patterns import CATALOG
from pyheavy.suites import HUNT_PREDICATES, SUITES

import click


def _topics():
    return {
        'suites': [
            '{:26} {}'.format(name, suite.description)
            for name, suite in SUITES.items()
        ],
        'families': [
            '{:6} {}'.format(name, info.constraint)
            for name, info in FAMILIES.items()
        ],
        'patterns': list(CATALOG),
        'predicates': sorted(HUNT_PREDICATES),
    }


@click.command('help', context_settings={'ignore_unknown_options': True})
@click.argument('command', nargs=-1)
def main(command):
    """Show pyheavy command line help.

    Besides command names, the topics 'suites', 'families', 'patterns' and
    'predicates' list the names other commands accept.
    """
    topics = _topics()
    if len(command) == 1 and command[0] in topics:
        for line in topics[command[0]]:
            click.echo(line)
        return
    cli.main(command + ('--help',))
