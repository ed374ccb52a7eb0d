"""
Command-line interface for EquiQuad.

Usage:
    equiquad corrections --alpha 1/2 --m 2        # c_0..c_m for one end
    equiquad weights --alpha 1 --m 4 --n 4        # 5-point open Newton-Cotes
    equiquad catalog ab:3:bwd                     # named classical rule
    equiquad integrate --function poly:0,0,0,1 --alpha 1/2 --m 2 --n 9
    equiquad order --function monomial:6 --alpha 1/2 --m 2
"""

import functools
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import click

from .formatters import (
    ResultFormatter,
    render_corrections,
    render_estimate,
    render_paired,
    render_report,
    render_weights,
)
from ..arith.rational import parse_rational
from ..config.settings import Settings, load_settings
from ..corrections.cache import configure_cache, correction_set
from ..models.convergence import PairedEstimate
from ..models.enums import OutputKind
from ..models.output_format import OutputFormat
from ..models.rule_spec import RuleSpec
from ..models.samples import SampleSet
from ..quadrature.convergence import estimate_order
from ..quadrature.integrands import BUILTIN_NAMES, parse_integrand
from ..quadrature.integrate import integrate_function, integrate_samples, paired_estimate
from ..quadrature.samples_io import read_samples
from ..rules.builder import build_weights, exactness_degree
from ..rules.catalog import catalog_names, resolve_rule
from ..utils.exceptions import IntegrandError, QuadratureError, RuleParameterError
from ..utils.logging_config import (
    get_command_logger,
    get_error_logger,
    get_logger,
    get_logging_config,
)
from ..validation.spec_validators import RuleParameterValidator

__all__ = [
    "cli",
]

logger = get_logger(__name__)


@dataclass
class CliContext:
    """State shared by the sub-commands of one invocation."""
    settings: Settings
    output: OutputFormat

    def formatter(self, decimal: bool = False) -> ResultFormatter:
        return ResultFormatter(self.output, decimal=decimal)


def run_command(name: str):
    """Log the command, turn library errors into exit status 1."""

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            started = time.perf_counter()
            exit_code = 0
            try:
                func(*args, **kwargs)
            except QuadratureError as exc:
                exit_code = 1
                get_error_logger().log_exception(exc, context=f"{name} failed", extra_data={"code": exc.code})
                click.echo(f"Error: {exc}", err=True)
            except Exception:
                exit_code = 1
                raise
            finally:
                elapsed_ms = (time.perf_counter() - started) * 1000
                params = {key: value for key, value in kwargs.items() if value is not None}
                get_command_logger().log_command(name, exit_code, elapsed_ms, **params)
            if exit_code:
                sys.exit(exit_code)

        return wrapper

    return decorator


def _spec(
    command: str,
    alpha: str,
    beta: Optional[str],
    m: int,
    n: int,
    m_right: Optional[int] = None,
    limits: Optional[Tuple[Fraction, Fraction]] = None
) -> RuleSpec:
    """Validate rule options, echoing every problem before failing."""
    result = RuleParameterValidator(command).validate_rule_params(
        alpha, beta, m, n, m_right=m_right, limits=limits
    )
    for warning in result.warnings:
        logger.info(warning.message, field=warning.field, code=warning.code)
    if not result.is_valid:
        for error in result.errors[1:]:
            click.echo(f"Error: {error.message}", err=True)
        raise RuleParameterError(message=result.errors[0].message)
    return result.spec


def _limits(limits: Optional[Tuple[str, str]]) -> Tuple[Fraction, Fraction]:
    if limits is None:
        return Fraction(0), Fraction(1)
    return parse_rational(limits[0]), parse_rational(limits[1])


# Shared rule options
_alpha_option = click.option('--alpha', default="0", show_default=True, help='Lower terminal offset (e.g. 1/2, -0.5)')
_beta_option = click.option('--beta', default=None, help='Upper terminal offset [default: alpha]')
_m_option = click.option('--m', 'm', type=int, default=2, show_default=True, help='Correction depth')
_m_right_option = click.option('--m-right', type=int, default=None, help='Correction depth at the upper end [default: m]')
_limits_option = click.option('--limits', nargs=2, type=str, default=None, help='Terminals A B [default: 0 1]')
_decimal_option = click.option('--decimal', is_flag=True, help='Show rationals as decimals')


@click.group()
@click.version_option(version="1.0.0", prog_name="equiquad")
@click.option('--format', 'output_format', type=click.Choice([kind.value for kind in OutputKind]),
              default=None, help='Output format [default: exact, or EQUIQUAD_FORMAT]')
@click.option('--digits', type=click.IntRange(1, 100), default=None,
              help='Significant digits for decimal output [default: 17]')
@click.option('--log-level', type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
              case_sensitive=False), default=None, help='Log level for stderr diagnostics')
@click.pass_context
def cli(ctx: click.Context, output_format: Optional[str], digits: Optional[int], log_level: Optional[str]):
    """
    EquiQuad - end-corrected equispaced quadrature in exact arithmetic.

    Results go to stdout, diagnostics to stderr.

    Examples:

        equiquad corrections --alpha 0 --m 2

        equiquad weights --alpha 0 --beta 0 --m 2 --n 1

        equiquad catalog simpson38
    """
    settings = load_settings()
    get_logging_config().set_level(log_level or settings.log_level)
    configure_cache(settings.cache_size)

    ctx.obj = CliContext(
        settings=settings,
        output=OutputFormat(
            kind=OutputKind(output_format) if output_format else settings.output_format,
            decimal_digits=digits or settings.decimal_digits,
        ),
    )


@cli.command()
@_alpha_option
@_m_option
@click.option('--with-b', is_flag=True, help='Also print the difference coefficients b_k')
@_decimal_option
@click.pass_obj
@run_command("corrections")
def corrections(obj: CliContext, alpha: str, m: int, with_b: bool, decimal: bool):
    """
    Print the corrections c_0..c_m for one end, outermost first.

    Examples:

        equiquad corrections --alpha 0 --m 2      # -5/8 1/6 -1/24

        equiquad corrections --alpha 1/2 --m 0    # 0
    """
    alpha_value = parse_rational(alpha)
    if m < 0:
        raise RuleParameterError(rule="corrections", detail=f"m must be non-negative, got {m}")

    result = correction_set(alpha_value, m)
    click.echo(render_corrections(
        obj.formatter(decimal), alpha_value, m, result.c, result.b if with_b else None
    ))


@cli.command()
@_alpha_option
@_beta_option
@_m_option
@_m_right_option
@click.option('--n', 'n', type=int, required=True, help='Index of the last base node')
@_decimal_option
@click.pass_obj
@run_command("weights")
def weights(obj: CliContext, alpha: str, beta: Optional[str], m: int,
            m_right: Optional[int], n: int, decimal: bool):
    """
    Print the weights of the rule (alpha, beta, m, n).

    Examples:

        equiquad weights --alpha 1 --beta 1 --m 4 --n 4

        equiquad weights --alpha 0 --m 2 --n 1 --format json
    """
    spec = _spec("weights", alpha, beta, m, n, m_right=m_right)
    result = build_weights(spec)
    click.echo(render_weights(obj.formatter(decimal), result, exactness_degree(result)))


@cli.command()
@click.argument('name', required=False)
@click.option('--list', 'list_names', is_flag=True, help='List the catalogue names')
@_decimal_option
@click.pass_obj
@run_command("catalog")
def catalog(obj: CliContext, name: Optional[str], list_names: bool, decimal: bool):
    """
    Print a classical rule by name.

    Examples:

        equiquad catalog simpson38

        equiquad catalog ab:3:bwd

        equiquad catalog --list
    """
    if list_names or not name:
        for pattern in catalog_names():
            click.echo(pattern)
        return

    result = resolve_rule(name)
    click.echo(render_weights(obj.formatter(decimal), result, exactness_degree(result), name=name))


@cli.command()
@click.option('--function', 'function', default=None,
              help=f"Builtin integrand: {', '.join(BUILTIN_NAMES)}")
@click.option('--samples', 'samples_path', type=click.Path(exists=True, dir_okay=False), default=None,
              help='File with one ordinate per line')
@click.option('--column', type=int, default=None, help='CSV column of the sample file (0-based)')
@_alpha_option
@_beta_option
@_m_option
@_m_right_option
@click.option('--n', 'n', type=int, default=None, help='Index of the last node (function input)')
@_limits_option
@click.option('--h', 'h', default=None, help='Sample spacing (sample input; overrides --limits)')
@click.option('--paired', is_flag=True, help='Also integrate with m+1 and print the difference')
@click.option('--exact-arithmetic', is_flag=True, help='Evaluate polynomials in rational arithmetic')
@click.pass_obj
@run_command("integrate")
def integrate(obj: CliContext, function: Optional[str], samples_path: Optional[str], column: Optional[int],
              alpha: str, beta: Optional[str], m: int, m_right: Optional[int], n: Optional[int],
              limits: Optional[Tuple[str, str]], h: Optional[str], paired: bool, exact_arithmetic: bool):
    """
    Integrate a builtin function or a sample file.

    Examples:

        equiquad integrate --function poly:0,0,0,1 --alpha 1/2 --m 2 --n 9

        equiquad integrate --samples data.txt --alpha 1/2 --limits 0 1
    """
    formatter = obj.formatter()
    a, b = _limits(limits)

    if (function is None) == (samples_path is None):
        raise IntegrandError(message="Give exactly one of --function or --samples.")

    if samples_path is not None:
        values = read_samples(samples_path, column)
        spec = _spec("integrate", alpha, beta, m, len(values) - 1, m_right=m_right, limits=(a, b))
        spacing = parse_rational(h) if h is not None else (b - a) / spec.length
        sample_set = SampleSet(values=values, h=spacing, alpha=spec.alpha, beta=spec.beta)
        if paired:
            coarse = integrate_samples(sample_set, spec.m_left, spec.m_right)
            fine = integrate_samples(sample_set, spec.m_left + 1, spec.m_right + 1)
            click.echo(render_paired(
                formatter, PairedEstimate(estimate=coarse, refined=fine, difference=abs(coarse - fine))
            ))
        else:
            click.echo(render_estimate(formatter, integrate_samples(sample_set, spec.m_left, spec.m_right)))
        return

    integrand = parse_integrand(function)
    if n is None:
        raise RuleParameterError(rule="integrate", detail="--n is required with --function")
    spec = _spec("integrate", alpha, beta, m, n, m_right=m_right, limits=(a, b))
    exact = exact_arithmetic and integrand.is_polynomial

    if paired:
        result = paired_estimate(integrand, a, b, spec.alpha, spec.beta, spec.m_left, spec.n, exact=exact)
        click.echo(render_paired(formatter, result))
    else:
        click.echo(render_estimate(formatter, integrate_function(integrand, a, b, spec, exact=exact)))


@cli.command()
@click.option('--function', 'function', required=True,
              help=f"Builtin integrand: {', '.join(BUILTIN_NAMES)}")
@click.option('--exact', 'exact_text', default=None, help="True integral [default: the builtin's own]")
@_alpha_option
@_beta_option
@_m_option
@_m_right_option
@click.option('--n0', type=int, default=9, show_default=True, help='Index of the last node at the first level')
@click.option('--doublings', type=int, default=1, show_default=True, help='Number of node doublings')
@_limits_option
@click.option('--zero-tolerance', type=float, default=0.0, show_default=True,
              help='Errors at or below this count as zero')
@click.option('--workers', type=int, default=None, help='Threads for the levels [default: EQUIQUAD_MAX_WORKERS]')
@click.pass_obj
@run_command("order")
def order(obj: CliContext, function: str, exact_text: Optional[str], alpha: str, beta: Optional[str],
          m: int, m_right: Optional[int], n0: int, doublings: int, limits: Optional[Tuple[str, str]],
          zero_tolerance: float, workers: Optional[int]):
    """
    Estimate the convergence order by doubling the node count.

    Examples:

        equiquad order --function monomial:6 --alpha 1/2 --m 4

        equiquad order --function exp --alpha 1/2 --m 3 --doublings 4
    """
    integrand = parse_integrand(function)
    a, b = _limits(limits)
    spec = _spec("order", alpha, beta, m, n0, m_right=m_right, limits=(a, b))

    exact_arithmetic = integrand.is_polynomial
    if exact_text is not None:
        exact_value = parse_rational(exact_text)
    else:
        exact_value = integrand.integral(a, b)
    if not exact_arithmetic:
        exact_value = float(exact_value)

    report = estimate_order(
        integrand, exact_value, a, b, spec.alpha, spec.beta, spec.m_left, n0, doublings,
        m_right=spec.m_right,
        exact_arithmetic=exact_arithmetic,
        zero_tolerance=zero_tolerance,
        max_workers=workers or obj.settings.max_workers,
    )
    click.echo(render_report(obj.formatter(), report))
