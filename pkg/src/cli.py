"""
Command-line interface for the bicomplex Fibonacci toolkit.

Usage:
    python -m src.cli table --from 0 --to 10 --format csv
    python -m src.cli verify --all
    python -m src.cli verify --claim C-T5L --n 1..10
    python -m src.cli verify --equation "F[n+2] == F[n+1] + F[n]" --n 0..40
    python -m src.cli eval "BF[n+1]*BF[n-1] - BF[n]^2" --n 5
    python -m src.cli bench --n 1000000
    python -m src.cli claims

Exit codes: 0 all selected claims pass, 1 some claim fails, 2 usage error.
"""
import logging
import sys
from typing import Dict, Optional, Tuple

import click

from config import config
from src.core.exceptions import BicomplexFibError, BindingOutOfDomainError, ExpressionSyntaxError
from src.models.claim import FAIL, ClaimReport, ParamGrid, VerificationReport
from src.models.expr import is_scalar_expr
from src.repository.json_repo import JsonRepository
from src.services import identity_engine, idlang, reporting
from src.services.verification import VerificationService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1


class RangeParamType(click.ParamType):
    """Inclusive integer range written 'a..b' or a single integer 'a'."""

    name = 'range'

    def convert(self, value, param, ctx) -> Tuple[int, int]:
        if isinstance(value, tuple):
            return value
        try:
            return ParamGrid.parse_range(value)
        except BindingOutOfDomainError as error:
            self.fail(str(error), param, ctx)


RANGE = RangeParamType()

range_options = [
    click.option('--n', 'n_range', type=RANGE, default=None, help='Range for n, e.g. 0..60'),
    click.option('--m', 'm_range', type=RANGE, default=None, help='Range for m'),
    click.option('--r', 'r_range', type=RANGE, default=None, help='Range for r'),
]


def with_ranges(func):
    for option in reversed(range_options):
        func = option(func)
    return func


def _user_ranges(n_range, m_range, r_range) -> Dict[str, Tuple[int, int]]:
    given = {'n': n_range, 'm': m_range, 'r': r_range}
    return {name: value for name, value in given.items() if value is not None}


def _usage_error(error: Exception) -> click.UsageError:
    return click.UsageError(str(error))


@click.group()
@click.option('--env', type=click.Choice(sorted(config)), default='default', help='Configuration to load')
@click.option('-v', '--verbose', count=True, help='-v for INFO, -vv for DEBUG diagnostics on stderr')
@click.version_option(version=config['default'].APP_VERSION, prog_name='bicomplex-fib')
@click.pass_context
def cli(ctx, env: str, verbose: int):
    """
    Bicomplex Fibonacci and Lucas numbers with exact identity verification.

    Results go to standard output, diagnostics to standard error.
    """
    settings = config[env]
    level = {0: settings.LOG_LEVEL, 1: 'INFO'}.get(verbose, 'DEBUG')
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )
    # Fibonacci numbers for large n exceed the default int-to-str digit limit
    if hasattr(sys, 'set_int_max_str_digits'):
        sys.set_int_max_str_digits(0)
    ctx.obj = settings


@cli.command()
@click.option('--from', 'start', type=int, default=0, show_default=True, help='First index')
@click.option('--to', 'stop', type=int, default=10, show_default=True, help='Last index (inclusive)')
@click.option('--format', 'fmt', type=click.Choice(reporting.FORMATS), default='text', show_default=True)
@click.pass_obj
def table(settings, start: int, stop: int, fmt: str):
    """Print F, L, BF, BL and the real-modulus radicand for a range of n."""
    try:
        rows = reporting.table_rows(start, stop)
    except ValueError as error:
        raise click.BadParameter(str(error), param_hint="'--from' / '--to'")
    click.echo(reporting.render_table(rows, fmt, settings.MODULUS_DIGITS), nl=False)


@cli.command()
@click.option('--claim', 'claim_ids', multiple=True, help='Claim id to verify (repeatable)')
@click.option('--all', 'verify_all', is_flag=True, help='Verify every cataloged claim')
@click.option('--equation', default=None, help="Ad hoc identity 'lhs == rhs' in the identity DSL")
@with_ranges
@click.option('--format', 'fmt', type=click.Choice(reporting.FORMATS), default='text', show_default=True)
@click.option('--output', type=click.Path(dir_okay=False), default=None, help='Also write the JSON report here')
@click.option('--workers', type=click.IntRange(min=1), default=None, help='Threads to fan out over claims')
@click.pass_obj
def verify(
    settings,
    claim_ids: Tuple[str, ...],
    verify_all: bool,
    equation: Optional[str],
    n_range,
    m_range,
    r_range,
    fmt: str,
    output: Optional[str],
    workers: Optional[int],
):
    """
    Verify cataloged claims (or an ad hoc equation) exactly over parameter grids.

    User ranges are clipped to each claim's domain; missing ranges use the
    configured defaults.
    """
    selectors = sum(1 for chosen in (bool(claim_ids), verify_all, equation is not None) if chosen)
    if selectors != 1:
        raise click.UsageError("give exactly one of --claim, --all or --equation")

    ranges = _user_ranges(n_range, m_range, r_range)
    repository = None
    if output:
        repository = JsonRepository(output, ClaimReport.from_dict, lambda entry: entry.to_dict())
    service = VerificationService(repository, settings.default_ranges(), workers=settings.VERIFY_WORKERS)
    try:
        if equation is not None:
            report = VerificationReport((service.check(equation, ranges),))
            service.record(report)
        else:
            report = service.run(ranges, claim_ids=None if verify_all else claim_ids, workers=workers)
    except BicomplexFibError as error:
        raise _usage_error(error)

    click.echo(reporting.render_report(report, fmt), nl=fmt == 'json')

    failed = [claim_id for claim_id, verdict in report.verdicts().items() if verdict == FAIL]
    if failed:
        logger.info("failing claims: %s", ', '.join(failed))
        sys.exit(EXIT_FAIL)
    sys.exit(EXIT_OK)


@cli.command(name='eval')
@click.argument('expression')
@click.option('--n', type=int, default=None, help='Value bound to n')
@click.option('--m', type=int, default=None, help='Value bound to m')
@click.option('--r', type=int, default=None, help='Value bound to r')
def eval_command(expression: str, n: Optional[int], m: Optional[int], r: Optional[int]):
    """Evaluate an identity-DSL expression exactly, e.g. "BF[0]*BF[1]"."""
    bindings = {name: value for name, value in (('n', n), ('m', m), ('r', r)) if value is not None}
    try:
        expr = idlang.parse(expression)
        value = idlang.eval_expr(expr, bindings)
    except ExpressionSyntaxError as error:
        click.echo(expression, err=True)
        click.echo(' ' * len(expression.encode('utf-8')[:error.offset].decode('utf-8', 'ignore')) + '^', err=True)
        raise _usage_error(error)
    except BicomplexFibError as error:
        raise _usage_error(error)
    click.echo(reporting.format_value(value, scalar=is_scalar_expr(expr)))


@cli.command()
@click.option('--n', type=click.IntRange(min=0), default=1000, show_default=True, help='Index to compute')
@click.pass_obj
def bench(settings, n: int):
    """Time fib(n) by fast doubling and, for n up to the threshold, by iteration."""
    result = reporting.benchmark(n, settings.BENCH_ITERATION_THRESHOLD)
    click.echo(result.render(), nl=False)


@cli.command()
def claims():
    """List the cataloged claims with their domains."""
    for item in identity_engine.describe_claims():
        click.echo(f"{item['claim_id']:<8} {', '.join(item['params']):<32} {item['domain']}")
        click.echo(f"         {item['citation']}")


def main():
    cli(prog_name='bicomplex-fib')


if __name__ == '__main__':
    main()
