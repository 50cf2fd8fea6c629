"""
Run verification suites.
"""

from pyheavy.cli import emit, library_errors
from pyheavy.harness import (
    VerificationReport, build_corpus, recheck, run_suite)
from pyheavy.suites import SUITES

import click

import json
from dataclasses import asdict


def parse_orders(ctx, param, value):
    """``'10:14'`` -> ``(10, 14)``; a single number fixes the order."""
    if value is None:
        return None
    low, _, high = value.partition(':')
    try:
        orders = int(low), int(high or low)
    except ValueError:
        raise click.BadParameter(
            "Expected <n> or <min>:<max>, got {!r}".format(value),
            ctx=ctx, param=param)
    if not 1 <= orders[0] <= orders[1]:
        raise click.BadParameter("Empty order range", ctx=ctx, param=param)
    return orders


@click.command('verify')
@click.option('-s', '--suite', 'suites', multiple=True,
              type=click.Choice(sorted(SUITES) + ['all']),
              help="Suite to run; may be repeated.")
@click.option('--n-max', type=click.IntRange(1, 7),
              help="Include all labelled graphs up to this order.")
@click.option('--samples', type=click.IntRange(0), default=0,
              show_default=True, help="Number of accepted random graphs.")
@click.option('--seed', type=int, default=0, show_default=True,
              help="Seed of the random sampler.")
@click.option('--orders', callback=parse_orders, metavar='<min>:<max>',
              help="Orders of the random graphs (suite default otherwise).")
@click.option('--budget', type=click.IntRange(1),
              help="Sampling attempts (200 per sample by default).")
@click.option('--workers', type=click.IntRange(1),
              help="Worker threads, see PYHEAVY_WORKERS.")
@click.option('--min-instances', type=click.IntRange(0),
              help="Inconclusive floor, see PYHEAVY_MIN_INSTANCES.")
@click.option('--progress', is_flag=True, help="Show progress bars.")
@click.option('--summary', is_flag=True,
              help="Print a text summary instead of JSON.")
@click.option('--recheck', 'recheck_file', type=click.File('r'),
              help="Re-run the violations of a saved report instead.")
@click.option('--out', type=click.Path(dir_okay=False),
              help="Write the JSON report(s) to a file.")
@library_errors
def main(suites, n_max, samples, seed, orders, budget, workers,
         min_instances, progress, summary, recheck_file, out):
    """
    Run verification suites and report violations.

    Exit code 0 means that no assertion failed (the status may still be
    'inconclusive' for sampled suites), 1 that violations were found.
    """
    if recheck_file is not None:
        data = json.load(recheck_file)
        reports = [VerificationReport.from_dict(d)
                   for d in (data if isinstance(data, list) else [data])]
        stale = [asdict(v) for r in reports for v in recheck(r)]
        emit({'stale': stale}, out)
        if stale:
            click.get_current_context().exit(1)
        return
    if not suites:
        raise click.UsageError("Choose at least one --suite")
    names = sorted(SUITES) if 'all' in suites else list(suites)
    reports = []
    for name in names:
        corpus = build_corpus(name, n_max=n_max, samples=samples, seed=seed,
                              orders=orders, budget=budget)
        reports.append(run_suite(name, corpus, workers=workers,
                                 progress=progress, minimum=min_instances))
    data = [r.to_dict() for r in reports]
    if out:
        emit(data if len(data) > 1 else data[0], out)
    if summary:
        for report in reports:
            click.echo(report.summary())
    elif not out:
        emit(data if len(data) > 1 else data[0])
    if any(r.status == 'failed' for r in reports):
        click.get_current_context().exit(1)
