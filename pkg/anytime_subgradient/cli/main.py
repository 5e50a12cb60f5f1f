"""Command-line interface for anytime-subgradient."""

import logging
import math
import sys
from typing import Dict, List, Optional, Sequence

import click
from pydantic import ValidationError

from ..costs import gaps
from ..errors import CsvFormatError, InvalidInputError, SubgradientError
from ..geometry import format_point, parse_point
from ..harness import (
    DEFAULT_CHUNK,
    GROWTH_SCENARIOS,
    PRESETS,
    emit_csv,
    growth_study,
    preset_config,
    run_monte_carlo,
    sweep_noise,
    write_table,
)
from ..metrics import bound_adversarial, bound_pseudo_regret, bound_tail
from ..models import DomainSpec, ExperimentConfig, config_from_mapping, load_config_file

logger = logging.getLogger(__name__)

PROG_NAME = "anytime-subgradient"

DOMAINS = ["simplex", "box", "interval", "curved", "zero_sum"]
MODELS = ["sphere_noise", "curved_example", "greedy_example", "greedy_example_simplex", "scripted"]

POSITIVE = click.FloatRange(min=0.0, min_open=True)
NON_NEGATIVE = click.FloatRange(min=0.0)


def _point_option(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_point(value).tolist()
    except InvalidInputError as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param)


def _emit(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _echo_pairs(pairs: Sequence) -> None:
    for name, value in pairs:
        click.echo(f"{name},{_emit(value)}")


def _stdout():
    return click.get_text_stream("stdout")


def experiment_options(f):
    """Flags shared by run and sweep."""
    options = [
        click.option('--config', 'config_path', type=click.Path(dir_okay=False), help='Key-value config file'),
        click.option('--preset', type=click.Choice(sorted(PRESETS)), help='Named preset'),
        click.option('--algorithm', type=click.Choice(['lazy', 'greedy', 'ftl']), help='Learner (default lazy)'),
        click.option('--domain', type=click.Choice(DOMAINS), help='Action domain (default simplex)'),
        click.option('--alpha', type=float, help='Curvature exponent of the curved domain'),
        click.option('--d', 'd', type=int, help='Dimension'),
        click.option('--lo', callback=_point_option, help='Box lower corner, e.g. -1,-1'),
        click.option('--hi', callback=_point_option, help='Box upper corner, e.g. 1,1'),
        click.option('--eta', type=float, help='Step parameter (default 1)'),
        click.option('--model', type=click.Choice(MODELS), help='Cost model (default sphere_noise)'),
        click.option('--mean', callback=_point_option, help='Mean cost vector, e.g. 0,1'),
        click.option('--R', 'radius', type=float, help='Sphere-noise radius'),
        click.option('--costs-file', type=click.Path(dir_okay=False), help='Scripted cost vectors'),
        click.option('--N', 'horizon', type=int, help='Turns per trial'),
        click.option('--trials', type=int, help='Independent trials'),
        click.option('--seed', type=int, help='Master seed'),
        click.option('--record-level', type=click.Choice(['summary', 'per_turn']), help='Default summary'),
        click.option('--workers', type=int, default=1, show_default=True, help='Worker processes'),
        click.option('--chunk-size', type=click.IntRange(min=1), default=DEFAULT_CHUNK, show_default=True,
                     help='Trials per worker job'),
        click.option('--output', type=click.Path(dir_okay=False), help='CSV path (default stdout)'),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def build_config(params: Dict) -> ExperimentConfig:
    """
    Assemble an ExperimentConfig from a preset or config file plus flags.

    Flags override file and preset values. Malformed configurations raise
    click.UsageError.
    """
    flags = {
        "algorithm": params.get("algorithm"),
        "domain": params.get("domain"),
        "alpha": params.get("alpha"),
        "d": params.get("d"),
        "lo": params.get("lo"),
        "hi": params.get("hi"),
        "eta": params.get("eta"),
        "model": params.get("model"),
        "mean": params.get("mean"),
        "R": params.get("radius"),
        "costs_file": params.get("costs_file"),
        "N": params.get("horizon"),
        "trials": params.get("trials"),
        "seed": params.get("seed"),
        "record_level": params.get("record_level"),
    }
    flags = {k: v for k, v in flags.items() if v is not None}
    try:
        if params.get("preset"):
            config, _ = preset_config(params["preset"])
            overrides = {"horizon": flags.get("N"), "trials": flags.get("trials"), "seed": flags.get("seed"),
                         "eta": flags.get("eta"), "record_level": flags.get("record_level")}
            config = config.replace(**{k: v for k, v in overrides.items() if v is not None})
            if "R" in flags:
                config = config.with_radius(flags["R"])
            return config
        values: Dict = load_config_file(params["config_path"]) if params.get("config_path") else {}
        values.update(flags)
        return config_from_mapping(values)
    except ValidationError as e:
        raise click.UsageError(f"invalid configuration: {e}")
    except (CsvFormatError, InvalidInputError) as e:
        raise click.UsageError(str(e))


@click.group()
@click.option('--debug', is_flag=True, help='Enable debug logging')
def cli(debug):
    """Lazy anytime Subgradient experiments, bound calculators and projections."""
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    )


@cli.command('run')
@experiment_options
@click.option('--table', type=click.Choice(['summary', 'per_turn']), help='Table to write (default follows --record-level)')
def run_cmd(config_path, preset, workers, chunk_size, output, table, **flags):
    """Run a Monte-Carlo experiment and write its CSV table."""
    config = build_config({"config_path": config_path, "preset": preset, **flags})
    table = table or ("per_turn" if config.record_level == "per_turn" else "summary")
    if table == "per_turn" and config.record_level != "per_turn":
        config = config.replace(record_level="per_turn")

    result = run_monte_carlo(config, workers=workers, chunk_size=chunk_size)
    logger.info(f"runtime: {result.runtime}")
    if result.bound_violations or result.certificate_failures:
        logger.error(
            f"safety net: {result.bound_violations} bound violations, "
            f"{result.certificate_failures} certificate failures"
        )
    if output:
        emit_csv(result, output, table)
    else:
        write_table(result, _stdout(), table)


@cli.command('sweep')
@experiment_options
@click.option('--R-values', 'r_values', help='Comma-separated noise radii (preset default if omitted)')
def sweep_cmd(config_path, preset, workers, chunk_size, output, r_values, **flags):
    """Sweep the sphere-noise radius and write (R, trial, final) rows."""
    config = build_config({"config_path": config_path, "preset": preset, **flags})
    if r_values is not None:
        try:
            radii = parse_point(r_values).tolist()
        except InvalidInputError as e:
            raise click.BadParameter(str(e), param_hint="--R-values")
    elif preset and PRESETS[preset][5] is not None:
        radii = list(PRESETS[preset][5])
    else:
        raise click.UsageError("sweep needs --R-values")

    table = sweep_noise(config, radii, workers=workers, chunk_size=chunk_size)
    if output:
        emit_csv(table, output)
    else:
        write_table(table, _stdout())


@cli.command('growth')
@click.option('--scenario', type=click.Choice(GROWTH_SCENARIOS), required=True, help='Growth scenario')
@click.option('--horizons', default='1000,3000,10000', show_default=True, help='Ascending horizons')
@click.option('--trials', type=int, default=200, show_default=True, help='Independent trials')
@click.option('--seed', type=int, default=0, show_default=True, help='Master seed')
@click.option('--alpha', type=float, default=3.0, show_default=True, help='Curvature exponent (curved)')
@click.option('--eta', type=float, default=1.0, show_default=True, help='Step parameter')
@click.option('--window', help='Fit window lo,hi (default: largest decade)')
@click.option('--workers', type=int, default=1, show_default=True, help='Worker processes')
@click.option('--output', type=click.Path(dir_okay=False), help='CSV path for the per-horizon table')
def growth_cmd(scenario, horizons, trials, seed, alpha, eta, window, workers, output):
    """Fit the log-log growth slope of the mean pseudo-regret."""
    try:
        h = [int(v) for v in parse_point(horizons)]
        fit_window = tuple(parse_point(window).tolist()) if window else None
    except InvalidInputError as e:
        raise click.UsageError(str(e))
    if fit_window is not None and len(fit_window) != 2:
        raise click.BadParameter("expected lo,hi", param_hint="--window")

    result = growth_study(
        scenario, h, trials, seed=seed, alpha=alpha, eta=eta, window=fit_window, workers=workers,
    )
    _echo_pairs([
        ("scenario", result.scenario),
        ("trials", result.trials),
        ("slope", result.slope),
        ("window_lo", result.window[0]),
        ("window_hi", result.window[1]),
    ])
    if output:
        emit_csv(result, output)


@cli.command('bounds')
@click.option('--L2', 'L2', type=POSITIVE, required=True, help='Bound on the cost norms')
@click.option('--R2', 'R2', type=NON_NEGATIVE, default=0.0, show_default=True, help='Bound on the noise norms')
@click.option('--gap', type=POSITIVE, help='Smallest positive gap')
@click.option('--eta', type=POSITIVE, default=1.0, show_default=True, help='Step parameter')
@click.option('--N', 'horizon', type=click.IntRange(min=0), help='Horizon for the adversarial bound')
@click.option('--t', 't', type=NON_NEGATIVE, help='Tail parameter')
@click.option('--D', 'diameter', type=POSITIVE, default=math.sqrt(2.0), help='Domain diameter (simplex default)')
@click.option('--maxnorm', type=POSITIVE, default=1.0, show_default=True, help='Largest norm in the domain')
@click.option('--proof-variant', is_flag=True, help='Use 1/eta in place of 1/(2 eta) in the adversarial bound')
def bounds_cmd(L2, R2, gap, eta, horizon, t, diameter, maxnorm, proof_variant):
    """Print bound values as name,value lines."""
    pairs: List = []
    if horizon is not None:
        report = bound_adversarial(L2, horizon, eta, diameter, maxnorm, proof_variant=proof_variant)
        pairs.append(("adversarial_bound", report.bound_value))
        if report.special_value is not None:
            pairs.append(("adversarial_bound_special", report.special_value))
    if gap is not None:
        report = bound_pseudo_regret(L2, R2, gap, eta)
        pairs.append(("pseudo_regret_bound", report.bound_value))
        pairs.append(("pseudo_regret_bound_special", report.special_value))
        if t is not None:
            tail = bound_tail(L2, R2, gap, eta, t)
            pairs.extend([
                ("tail_threshold", tail.extra["threshold"]),
                ("tail_probability_bound", tail.bound_value),
                ("tail_validity_floor", tail.extra["validity_floor"]),
                ("tail_t_valid", tail.flags["t_valid"]),
            ])
    elif t is not None:
        raise click.UsageError("--t needs --gap")
    if not pairs:
        raise click.UsageError("give --N for the adversarial bound and/or --gap for the pseudo-regret bounds")
    _echo_pairs(pairs)


@cli.command('project')
@click.option('--domain', type=click.Choice(DOMAINS), required=True, help='Target domain')
@click.option('--point', required=True, callback=_point_option, help='Point to project, e.g. 2,0')
@click.option('--alpha', type=float, default=3.0, show_default=True, help='Curvature exponent (curved)')
@click.option('--lo', callback=_point_option, help='Box lower corner')
@click.option('--hi', callback=_point_option, help='Box upper corner')
def project_cmd(domain, point, alpha, lo, hi):
    """Print the Euclidean projection of a point."""
    try:
        spec = DomainSpec(kind=domain, d=len(point), alpha=alpha if domain == "curved" else None, lo=lo, hi=hi)
    except ValidationError as e:
        raise click.UsageError(f"invalid domain: {e}")
    click.echo(format_point(spec.build().project(point)))


@cli.command('gaps')
@click.option('--mean', required=True, callback=_point_option, help='Mean cost vector, e.g. 0,1,1')
def gaps_cmd(mean):
    """Print the gap profile of a mean cost vector."""
    profile = gaps(mean)
    _echo_pairs([
        ("permutation", ",".join(str(int(j)) for j in profile.permutation)),
        ("sorted_gaps", format_point(profile.sorted_gaps)),
        ("min_positive_gap", profile.min_positive_gap if profile.defined else "undefined"),
        ("mean_gap", profile.mean_gap),
    ])


def parse_and_dispatch(argv: Sequence[str]) -> int:
    """
    Run one command and return its exit status.

    0 on success, 2 for usage errors, 1 for runtime failures. Diagnostics
    go to stderr.
    """
    argv = list(argv)
    if not argv:
        click.echo(cli.get_help(click.Context(cli, info_name=PROG_NAME)), err=True)
        return 2
    try:
        result = cli.main(args=argv, prog_name=PROG_NAME, standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return 2
    except click.ClickException as e:
        e.show()
        return 1
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except ValidationError as e:
        click.echo(f"Error: invalid configuration: {e}", err=True)
        return 2
    except (SubgradientError, OSError) as e:
        logger.debug("command failed", exc_info=True)
        click.echo(f"Error: {e}", err=True)
        return 1
    return result if isinstance(result, int) else 0


def main():
    """Console entry point."""
    sys.exit(parse_and_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
