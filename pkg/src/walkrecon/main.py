#!/usr/bin/env python3
"""
walkrecon - Main CLI Application

Every subcommand prints one envelope on stdout. Exit codes: 0 success,
2 usage error, 3 when the requested computation ends Diverged (or any
other non-converged quadrature) or with an Inconclusive verdict.
"""

import click
import logging
import time
from contextlib import contextmanager
from functools import wraps
from typing import Any, Dict, Iterator, Optional

from . import __version__
from .absorption.coefficients import corollary_p1N, general_p1N_formula, theorem_absorption
from .absorption.conjecture import conjecture_limit_check, conjecture_sequence
from .config import Config, load_config, parse_n_range
from .core.errors import (
    CapacityError,
    ConfigError,
    DegeneratePoint,
    FormatUnsupported,
    InvalidConfiguration,
    NormViolation,
    UnitarityViolation,
    WalkReconError,
)
from .core.types import TolerancePolicy, parse_complex, parse_state
from .genfunc.residual import evaluate_gf, recursion_residual
from .reporting.envelope import OutputEnvelope
from .reporting.main import ReportGenerator
from .simulator.main import WalkSimulator
from .verify import checks
from .verify.main import Verifier
from .verify.verdict import Verdict

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format=LOG_FORMAT
)
logger = logging.getLogger(__name__)

EXIT_FINDING = 3

# bad arguments rather than failed computations
INPUT_ERRORS = (
    InvalidConfiguration,
    NormViolation,
    UnitarityViolation,
    DegeneratePoint,
    CapacityError,
    ConfigError,
    FormatUnsupported,
    ValueError,
)


def _parse_seed(ctx, param, value):
    if value is None:
        return None
    try:
        return int(value, 0)
    except ValueError:
        raise click.BadParameter(f"{value!r} is not an integer (decimal or 0x-prefixed)")


def output_options(f):
    """Flags accepted both before and after the subcommand name"""
    @click.option('--format', 'output_format', type=click.Choice(['json', 'csv', 'table']), help='Output format')
    @click.option('--quad-tol', type=float, help='Quadrature convergence tolerance')
    @click.option('--grid-doublings', type=int, help='Maximum number of quadrature grid doublings')
    @click.option('--seed', callback=_parse_seed, help='Seed for sampled checks (e.g. 0x5EED)')
    @click.option('--timing', is_flag=True, default=None, help='Record wall_time_ms in the envelope')
    @wraps(f)
    def wrapper(*args, output_format, quad_tol, grid_doublings, seed, timing, **kwargs):
        ctx = click.get_current_context()
        _apply_overrides(ctx, output_format, quad_tol, grid_doublings, seed, timing)
        return f(*args, **kwargs)
    return wrapper


def _apply_overrides(ctx: click.Context, output_format: Optional[str], quad_tol: Optional[float],
                     grid_doublings: Optional[int], seed: Optional[int], timing: Optional[bool]) -> None:
    config: Config = ctx.obj
    if output_format is not None:
        config.reporting.output_format = output_format
    if quad_tol is not None:
        config.quadrature.quad_tol = quad_tol
    if grid_doublings is not None:
        config.quadrature.max_grid_doublings = grid_doublings
    if seed is not None:
        config.verify.seed = seed
    if timing:
        config.reporting.include_timing = True


@contextmanager
def _guard(ctx: click.Context) -> Iterator[None]:
    """Map input errors to usage errors (exit 2) and other hard errors to exit 1"""
    try:
        yield
    except INPUT_ERRORS as e:
        raise click.UsageError(str(e), ctx)
    except WalkReconError as e:
        logger.error(f"{ctx.info_name} failed: {e}")
        click.echo(f"Error: {e}", err=True)
        ctx.exit(1)


def _tolerances(ctx: click.Context) -> TolerancePolicy:
    with _guard(ctx):
        return ctx.obj.tolerance_policy()


def _quad_options(config: Config) -> Dict[str, Any]:
    return {
        'base_grid': config.quadrature.base_grid,
        'growth_factor': config.quadrature.growth_factor,
        'degenerate_fraction': config.quadrature.degenerate_fraction,
    }


def _emit(ctx: click.Context, params: Dict[str, Any], results: Any, finding: bool = False) -> None:
    config: Config = ctx.obj
    wall_time_ms = None
    if config.reporting.include_timing:
        wall_time_ms = int(round((time.perf_counter() - ctx.meta['walkrecon.started']) * 1000))
    with _guard(ctx):
        envelope = OutputEnvelope(
            command=ctx.info_name,
            params=params,
            results=results,
            tolerances=config.tolerance_policy().to_dict(),
            version=__version__,
            wall_time_ms=wall_time_ms,
        )
        text = ReportGenerator(config).emit(envelope)
    click.echo(text, nl=False)
    if finding:
        logger.info(f"{ctx.info_name}: finding reported, exit code {EXIT_FINDING}")
        ctx.exit(EXIT_FINDING)


@click.group()
@click.version_option(version=__version__)
@click.option('--config', '-c', type=click.Path(exists=True), help='Configuration file path')
@click.option('--log-level', type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR']), help='Logging level')
@click.option('--log-file', type=click.Path(), help='Log file path')
@click.option('--format', 'output_format', type=click.Choice(['json', 'csv', 'table']), help='Output format')
@click.option('--quad-tol', type=float, help='Quadrature convergence tolerance')
@click.option('--grid-doublings', type=int, help='Maximum number of quadrature grid doublings')
@click.option('--seed', callback=_parse_seed, help='Seed for sampled checks (e.g. 0x5EED)')
@click.option('--timing', is_flag=True, default=None, help='Record wall_time_ms in the envelope')
@click.pass_context
def cli(ctx, config, log_level, log_file, output_format, quad_tol, grid_doublings, seed, timing):
    """walkrecon - Hadamard walk absorption lab"""
    ctx.meta['walkrecon.started'] = time.perf_counter()

    # Set up logging
    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logging.getLogger().addHandler(file_handler)

    # Load configuration
    try:
        ctx.obj = load_config(config)
    except ConfigError as e:
        raise click.UsageError(str(e), ctx)

    level = log_level or ('DEBUG' if ctx.obj.debug else ctx.obj.log_level)
    logging.getLogger().setLevel(getattr(logging, str(level).upper(), logging.INFO))

    _apply_overrides(ctx, output_format, quad_tol, grid_doublings, seed, timing)


@cli.command()
@click.option('--n', type=int, required=True, help='Right barrier N')
@click.option('--k', type=int, default=1, show_default=True, help='Start site')
@click.option('--state', default='R', show_default=True, help='L, R or a_re,a_im,b_re,b_im')
@click.option('--max-steps', type=int, help='Step cap for the run')
@click.option('--survival-tol', type=float, help='Stop once the surviving norm drops below this')
@output_options
@click.pass_context
def simulate(ctx, n, k, state, max_steps, survival_tol):
    """Absorption probabilities between barriers at 0 and N."""
    config: Config = ctx.obj
    if max_steps is not None:
        config.simulation.max_steps = max_steps
    if survival_tol is not None:
        config.simulation.survival_tol = survival_tol
    tol = _tolerances(ctx)

    with _guard(ctx):
        qubit = parse_state(state)
        outcome, _ = WalkSimulator(config, tol).finite(n, k, qubit)

    _emit(ctx, {'N': n, 'k': k, 'state': qubit.to_dict()}, outcome)


@cli.command()
@click.option('--k', type=int, default=1, show_default=True, help='Start site')
@click.option('--state', default='R', show_default=True, help='L, R or a_re,a_im,b_re,b_im')
@click.option('--tmax', type=int, help='Number of steps (default: simulation.semi_t_max)')
@click.option('--extrapolate', is_flag=True, help='Add the Richardson estimate 2P(t) - P(t/2)')
@output_options
@click.pass_context
def semi(ctx, k, state, tmax, extrapolate):
    """Absorption probability at 0 with no right barrier."""
    config: Config = ctx.obj
    tol = _tolerances(ctx)
    t_max = tmax if tmax is not None else config.simulation.semi_t_max

    with _guard(ctx):
        qubit = parse_state(state)
        outcome = WalkSimulator(config, tol).semi_infinite(k, qubit, t_max, extrapolate)

    _emit(ctx, {'k': k, 'state': qubit.to_dict(), 't_max': t_max, 'extrapolate': extrapolate}, outcome)


@cli.command()
@click.option('--method', type=click.Choice(['lemma', 'konno', 'solve']), default='solve', show_default=True)
@click.option('--n', type=int, required=True, help='Right barrier N')
@click.option('--k', type=int, default=1, show_default=True, help='Start site')
@click.option('--z', 'z_text', required=True, help='Evaluation point re,im')
@output_options
@click.pass_context
def gf(ctx, method, n, k, z_text):
    """Generating-function values p, r at z with recursion residuals."""
    with _guard(ctx):
        z = parse_complex(z_text)
        value = evaluate_gf(method, z, n, k)
        residual = recursion_residual(method, z, n)

    results = value.to_dict()
    results.update({key: val for key, val in residual.to_dict().items()
                    if key not in ('sample_points', 'method', 'N')})
    results['max_residual'] = residual.max_residual
    _emit(ctx, {'method': method, 'N': n, 'k': k, 'z': z}, results)


@cli.command()
@click.option('--method', type=click.Choice(['solve', 'lemma', 'konno']), default='solve', show_default=True)
@click.option('--n', type=int, required=True, help='Right barrier N')
@click.option('--k', type=int, default=1, show_default=True, help='Start site')
@click.option('--state', default='R', show_default=True, help='L, R or a_re,a_im,b_re,b_im')
@output_options
@click.pass_context
def absorb(ctx, method, n, k, state):
    """Absorption probability from the c1, c2, c3 integrals."""
    config: Config = ctx.obj
    tol = _tolerances(ctx)
    with _guard(ctx):
        qubit = parse_state(state)
        probability, coeffs = theorem_absorption(n, k, qubit, method, tol, **_quad_options(config))

    row = {'method': method, 'N': n, 'k': k, 'probability': probability}
    row.update({f"status_{name}": status for name, status in coeffs.statuses.items()})
    results = {'rows': [row], 'coefficients': coeffs}
    _emit(ctx, {'method': method, 'N': n, 'k': k, 'state': qubit.to_dict()}, results,
          finding=not coeffs.converged)


@cli.command()
@click.option('--n', type=int, required=True, help='Right barrier N')
@click.option('--method', type=click.Choice(['solve', 'lemma', 'konno']), default='solve', show_default=True)
@click.option('--state', help='Also evaluate the general-state form for this qubit')
@output_options
@click.pass_context
def corollary(ctx, n, method, state):
    """P_1^N for |R> as (1 + mean |r_1^N|^2) / 2."""
    config: Config = ctx.obj
    tol = _tolerances(ctx)
    with _guard(ctx):
        qubit = parse_state(state) if state else None
        value, report = corollary_p1N(n, method, tol, **_quad_options(config))

    row: Dict[str, Any] = {'N': n, 'method': method, 'value': value, 'status': report.status.value}
    if qubit is not None:
        row['value_for_state'] = general_p1N_formula(report.mean.real, qubit) if value is not None else None
    params: Dict[str, Any] = {'N': n, 'method': method}
    if qubit is not None:
        params['state'] = qubit.to_dict()
    _emit(ctx, params, {'rows': [row], 'quadrature': report}, finding=value is None)


@cli.command()
@click.option('--max-n', type=int, required=True, help='Last N of the table')
@output_options
@click.pass_context
def conjecture(ctx, max_n):
    """Exact values of the conjectured recursion for N = 1..max-n."""
    with _guard(ctx):
        sequence = conjecture_sequence(max_n)
        limit = conjecture_limit_check(max_n)

    rows = [{'N': N, 'value': value} for N, value in enumerate(sequence, start=1)]
    _emit(ctx, {'max_n': max_n}, {'rows': rows, 'limit_check': limit})


@cli.command()
@output_options
@click.pass_context
def poles(ctx):
    """Poles of the N = 3 rational form and its |.|^2 integral."""
    config: Config = ctx.obj
    tol = _tolerances(ctx)
    with _guard(ctx):
        fragment = checks.analyze_r13_poles(tol, **_quad_options(config))

    fragment['rows'] = [
        {'root': root, 'modulus': modulus, 'angle': angle}
        for root, modulus, angle in zip(fragment['roots'], fragment['moduli'], fragment['pole_angles'])
    ]
    diverged = fragment['quadrature']['status'] != 'Converged'
    _emit(ctx, {}, fragment, finding=diverged)


@cli.command()
@click.option('--samples', type=int, help='Sample points (default: verify.flaw_samples)')
@output_options
@click.pass_context
def flaw(ctx, samples):
    """Show that the printed C_z, E_z force r_1^3 to vanish."""
    config: Config = ctx.obj
    samples = samples or config.verify.flaw_samples
    with _guard(ctx):
        fragment = checks.demonstrate_konno_flaw(samples, config.verify.seed)
    _emit(ctx, {'samples': samples, 'seed': config.verify.seed}, fragment)


@cli.command()
@click.option('--grid', type=int, help='Audit nodes (default: verify.f_audit_grid)')
@output_options
@click.pass_context
def faudit(ctx, grid):
    """Finite-difference audit of the printed antiderivative F."""
    config: Config = ctx.obj
    grid = grid or config.verify.f_audit_grid
    with _guard(ctx):
        fragment = checks.audit_F_antiderivative(grid)
    _emit(ctx, {'grid': grid}, fragment)


@cli.command()
@click.option('--n-values', default='3,4,5', show_default=True, help='Barriers, e.g. 3,4,5 or 3..6')
@output_options
@click.pass_context
def parseval(ctx, n_values):
    """Quadrature of |r_1^N|^2 against the simulated coefficient sum."""
    config: Config = ctx.obj
    tol = _tolerances(ctx)
    with _guard(ctx):
        N_values = parse_n_range(n_values)
        fragment = checks.parseval_check(N_values, tol, **_quad_options(config))
    _emit(ctx, {'N_values': N_values}, fragment, finding=not fragment['complete'])


@cli.command()
@click.option('--n-range', help='Conjecture table range, e.g. 2..10')
@click.option('--workers', type=int, help='Fragments computed concurrently')
@click.option('--progress', is_flag=True, help='Show a progress bar on stderr')
@output_options
@click.pass_context
def verify(ctx, n_range, workers, progress):
    """Full cross-method verification report with verdict."""
    config: Config = ctx.obj
    with _guard(ctx):
        if n_range:
            config.verify.n_range = parse_n_range(n_range)
        if workers is not None:
            config.verify.workers = workers
        if progress:
            config.verify.show_progress = True
        tol = config.tolerance_policy()
        verifier = Verifier(config, tol)
        report = verifier.run()
    logger.debug(f"fragment timings: {verifier.get_statistics()}")

    params = {'n_range': list(config.verify.n_range), 'seed': config.verify.seed}
    _emit(ctx, params, report, finding=report.verdict is Verdict.INCONCLUSIVE)


@cli.command('validate-config')
@output_options
@click.pass_context
def validate_config(ctx):
    """Show the effective configuration after files, environment and flags."""
    config: Config = ctx.obj
    _tolerances(ctx)
    _emit(ctx, {}, config.to_dict())


if __name__ == '__main__':
    cli()
