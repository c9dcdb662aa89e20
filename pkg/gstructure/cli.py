"""
Command-line interface.

Usage:
    gstructure james b 3
    gstructure gap j 15
    gstructure weyl-dim C 3 0,1,0 --method both
    gstructure real-dim SU 5 0,1,0,0
    gstructure enumerate B 3 --max-dim 7 --filter SO
    gstructure classify --target SO --n 15 --source Sp --k 3
    gstructure min-k --target SU --n 11 --source SU
    gstructure ko-check --n 15 --k 7
    gstructure verify prop51
    gstructure atlas --target SO --n-range 9..41 --source SO --format csv

Exit status: 0 on success, 1 when a verification fails, 2 on usage
errors, 3 when a query violates a hypothesis of the classification.
"""
from gstructure import __version__, apps, tasks
from gstructure.classify import ReductionQuery, atlas_range, classify, min_source_rank
from gstructure.conf import settings
from gstructure.enumeration import EnumerationRequest, enumerate_weights
from gstructure.exceptions import (
    DomainError, EnumerationOverflowError, OutOfDomainError, VerificationError,
)
from gstructure.james import FactoredInteger, SphereFamily, j_gap, james_number
from gstructure.kocheck import fixed_generator_exists, ko_group
from gstructure.reality import GroupDescriptor, GroupFamily, real_dim
from gstructure.schemas import ATLAS_COLUMNS, FactoredIntegerField
from gstructure.verify import BATTERIES
from gstructure.weyl import AlgebraType, DominantWeight, LieType, dim_generic, dim_specialized
from celery import group
import click
import csv
import enum
import io
import json
import logging
import sys

logger = logging.getLogger('gstructure.application')

__all__ = [
    'cli',
    'main',
    'run',
]

FAMILIES = click.Choice([f.value for f in GroupFamily])
LIE_TYPES = click.Choice([t.value for t in LieType])

JAMES_FAMILIES = {'a': SphereFamily.REAL, 'b': SphereFamily.COMPLEX, 'c': SphereFamily.QUATERNIONIC}
GAP_FAMILIES = {'j': SphereFamily.REAL, 'j2': SphereFamily.COMPLEX, 'j4': SphereFamily.QUATERNIONIC}


@enum.unique
class OutputFormat(enum.Enum):
    HUMAN = 'human'
    JSON = 'json'
    CSV = 'csv'


class CoefficientsType(click.ParamType):
    """Comma separated nonnegative integers: ``0,1,0``."""

    name = 'm1,...,ml'

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            coeffs = tuple(int(part) for part in value.split(','))
        except ValueError:
            self.fail('%r is not a comma separated list of integers' % value, param, ctx)
        if any(m < 0 for m in coeffs):
            self.fail('coefficients must be nonnegative: %r' % value, param, ctx)
        return coeffs


class RangeType(click.ParamType):
    """Inclusive ``a..b``."""

    name = 'a..b'

    def convert(self, value, param, ctx):
        if isinstance(value, range):
            return value
        try:
            low, high = (int(part) for part in value.split('..'))
        except ValueError:
            self.fail('%r is not a range a..b' % value, param, ctx)
        if low > high:
            self.fail('empty range %r' % value, param, ctx)
        return range(low, high + 1)


COEFFICIENTS = CoefficientsType()
N_RANGE = RangeType()


def format_option(default: OutputFormat, *choices: OutputFormat):
    choices = choices or (default,)
    return click.option('--format', 'output_format', default=default.value, show_default=True,
                        type=click.Choice([c.value for c in choices]),
                        callback=lambda ctx, param, value: OutputFormat(value))


def render_factored(value: FactoredInteger) -> str:
    """``24 (2^3 · 3)``; values too long to print become ``≈10^D (...)``."""
    digits = value.decimal_digits()
    if digits > settings.DECIMAL_DIGITS_LIMIT:
        return '≈10^%d (%s)' % (digits - 1, value)
    return '%d (%s)' % (value.value, value)


def echo_json(data) -> None:
    click.echo(json.dumps(data, indent=2, sort_keys=True))


def echo_csv(header, rows) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    click.echo(buffer.getvalue(), nl=False)


def _weight(tag: str, rank: int, coeffs) -> DominantWeight:
    return DominantWeight(AlgebraType(LieType(tag), rank), coeffs)


@click.group()
@click.version_option(version=__version__, prog_name='gstructure')
def cli():
    """G-structures on spheres: James numbers, Weyl dimensions and reductions."""


@cli.command()
@click.argument('function', type=click.Choice(sorted(JAMES_FAMILIES)))
@click.argument('r', type=click.IntRange(min=1))
@format_option(OutputFormat.HUMAN, OutputFormat.HUMAN, OutputFormat.JSON)
def james(function, r, output_format):
    """Hurwitz-Radon a(r) or the James numbers b(r), c(r)."""
    value = james_number(JAMES_FAMILIES[function], r)
    if output_format is OutputFormat.JSON:
        data = FactoredIntegerField().serialize('value', {'value': value})
        echo_json({'function': function, 'r': r, 'value': data})
    else:
        click.echo(render_factored(value))


@cli.command()
@click.argument('function', type=click.Choice(sorted(GAP_FAMILIES)))
@click.argument('n', type=click.IntRange(min=1))
def gap(function, n):
    """The gap functions j(n), j_2(n), j_4(n)."""
    click.echo(j_gap(n, GAP_FAMILIES[function]))


@cli.command('weyl-dim')
@click.argument('tag', type=LIE_TYPES)
@click.argument('rank', type=int)
@click.argument('coeffs', type=COEFFICIENTS)
@click.option('--method', type=click.Choice(['generic', 'specialized', 'both']), default='generic',
              show_default=True)
def weyl_dim(tag, rank, coeffs, method):
    """Dimension of V(omega) by the Weyl formula."""
    w = _weight(tag, rank, coeffs)
    if method == 'generic':
        click.echo(dim_generic(w))
    elif method == 'specialized':
        click.echo(dim_specialized(w))
    else:
        generic, specialized = dim_generic(w), dim_specialized(w)
        click.echo('%d %d' % (generic, specialized))
        if generic != specialized:
            raise VerificationError('generic %d != specialized %d' % (generic, specialized), w)


@cli.command('real-dim')
@click.argument('family', type=FAMILIES)
@click.argument('k', type=click.IntRange(min=1))
@click.argument('coeffs', type=COEFFICIENTS)
@format_option(OutputFormat.HUMAN, OutputFormat.HUMAN, OutputFormat.JSON)
def real_dim_command(family, k, coeffs, output_format):
    """Real dimension and reality type of the real irreducible containing V(omega)."""
    g = GroupDescriptor(GroupFamily(family), k)
    info = real_dim(g, DominantWeight(g.algebra, coeffs))
    if output_format is OutputFormat.JSON:
        echo_json(info.dumps())
        return
    line = '%d %s' % (info.real_dim, info.reality.value)
    if info.real_dim_is_lower_bound:
        line += ' lower-bound'
    click.echo(line)


@cli.command('enumerate')
@click.argument('tag', type=LIE_TYPES)
@click.argument('rank', type=int)
@click.option('--max-dim', type=int, required=True, help='Largest complex dimension.')
@click.option('--filter', 'descend_filter', type=FAMILIES, default=None,
              help='Keep only weights of representations of this group.')
@format_option(OutputFormat.HUMAN, OutputFormat.HUMAN, OutputFormat.JSON, OutputFormat.CSV)
def enumerate_command(tag, rank, max_dim, descend_filter, output_format):
    """Dominant weights of complex dimension at most --max-dim."""
    algebra = AlgebraType(LieType(tag), rank)
    family = GroupFamily(descend_filter) if descend_filter else None
    rows = enumerate_weights(EnumerationRequest(algebra, max_dim, family))
    if output_format is OutputFormat.JSON:
        echo_json([{'weight': list(w.coeffs), 'dim': dim} for w, dim in rows])
    elif output_format is OutputFormat.CSV:
        header = ['dim'] + ['m%d' % i for i in range(1, rank + 1)]
        echo_csv(header, [[dim] + list(w.coeffs) for w, dim in rows])
    else:
        for w, dim in rows:
            click.echo('%d\t%s' % (dim, w))


def query_options(func):
    for option in reversed([
        click.option('--target', type=FAMILIES, required=True),
        click.option('--n', type=int, required=True),
        click.option('--source', type=FAMILIES, required=True),
    ]):
        func = option(func)
    return func


@cli.command('classify')
@query_options
@click.option('--k', type=int, required=True)
@format_option(OutputFormat.JSON, OutputFormat.JSON, OutputFormat.HUMAN)
def classify_command(target, n, source, k, output_format):
    """Decide whether G_n over its sphere reduces to the source group."""
    verdict = classify(ReductionQuery.of(target, n, source, k))
    if output_format is OutputFormat.JSON:
        echo_json(verdict.dumps())
        return
    click.echo('%s: %s (case %s, %s)' % (verdict.query, 'YES' if verdict.reducible else 'NO',
                                          verdict.case or '-', verdict.reason.value))
    if verdict.trace:
        t = verdict.trace
        click.echo('m=%d d=%d modulus=%s remainder=%d' % (t.m, t.d, render_factored(t.modulus), t.remainder))
    for hom in verdict.homs:
        click.echo('%s: %s' % (hom.kind.value, ' + '.join(
            '%d x %s(%d)' % (s.multiplicity, s.label, s.dim) if s.multiplicity > 1 else '%s(%d)' % (s.label, s.dim)
            for s in hom.summands)))


@cli.command('min-k')
@query_options
def min_k(target, n, source):
    """Least source rank admitting a reduction."""
    k = min_source_rank(GroupDescriptor(GroupFamily(target), n), GroupFamily(source))
    click.echo('none' if k is None else k)


@cli.command('ko-check')
@click.option('--n', type=int, required=True)
@click.option('--k', type=int, required=True)
@format_option(OutputFormat.HUMAN, OutputFormat.HUMAN, OutputFormat.JSON)
def ko_check(n, k, output_format):
    """Stunted KO group and the psi^3-fixed generator criterion."""
    info = ko_group(n, k)
    fixed = fixed_generator_exists(n, k)
    if output_format is OutputFormat.JSON:
        data = info.dumps()
        data['fixed_generator'] = fixed
        echo_json(data)
        return
    order = '-' if info.order is None else info.order
    psi3 = '-' if info.psi3_exponent is None else '3^%d' % info.psi3_exponent
    click.echo('status=%s order=%s psi3=%s fixed-generator=%s'
               % (info.status.value, order, psi3, 'yes' if fixed else 'no'))


@cli.command()
@click.argument('battery', type=click.Choice(list(BATTERIES)))
@format_option(OutputFormat.HUMAN, OutputFormat.HUMAN, OutputFormat.JSON)
def verify(battery, output_format):
    """Run an acceptance battery; exit status 1 on any failure."""
    report = tasks.run_battery.apply(args=(battery,)).get()
    if output_format is OutputFormat.JSON:
        echo_json(report)
    else:
        click.echo('%s: %d checks passed' % (report['name'], report['checks']))


@cli.command()
@click.option('--target', type=FAMILIES, required=True)
@click.option('--n-range', type=N_RANGE, required=True)
@click.option('--source', type=FAMILIES, required=True)
@format_option(OutputFormat.CSV, OutputFormat.CSV, OutputFormat.JSON)
def atlas(target, n_range, source, output_format):
    """One verdict row per n."""
    ns = atlas_range(n_range)
    rows = group(tasks.atlas_row.s(target, n, source) for n in ns).apply().get()
    if output_format is OutputFormat.JSON:
        echo_json(rows)
    else:
        echo_csv(ATLAS_COLUMNS, [['' if row[c] is None else row[c] for c in ATLAS_COLUMNS] for row in rows])


def run(argv=None) -> int:
    """Run the cli on ``argv`` and return the exit status."""
    apps.setup()
    logger.debug('Command line: %s', argv)
    try:
        status = cli.main(args=argv, prog_name='gstructure', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return 2
    except click.Abort:
        click.echo('Aborted!', err=True)
        return 1
    except OutOfDomainError as e:
        click.echo('out of domain (%s): %s' % (e.hypothesis, e), err=True)
        return 3
    except VerificationError as e:
        click.echo('verification failed: %s' % e, err=True)
        return 1
    except (DomainError, EnumerationOverflowError) as e:
        click.echo('error: %s' % e, err=True)
        return 2
    # click returns the exit code of --help and --version
    return status if isinstance(status, int) else 0


def main():
    sys.exit(run(sys.argv[1:]))
