"""Named experiment presets and growth scenarios."""

from typing import Dict, List, Optional, Tuple

from ..errors import InvalidParameterError
from ..models import CostModel, DomainSpec, ExperimentConfig

DEFAULT_SWEEP_R = (0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0)

# name -> (d, mean, R, N, trials, R values for a sweep or None)
PRESETS: Dict[str, Tuple[int, List[float], float, int, int, Optional[Tuple[float, ...]]]] = {
    "sweep_d2": (2, [0.0, 1.0], 1.0, 500, 25, DEFAULT_SWEEP_R),
    "sweep_d32": (32, [0.0] + [1.0] * 31, 1.0, 100, 25, DEFAULT_SWEEP_R),
    "line_d2": (2, [0.0, 1.0], 10.0, 500, 100, None),
    "line_d32": (32, [0.0] + [1.0] * 31, 10.0, 100, 100, None),
    "line_linear_d8": (8, [float(j) for j in range(8)], 10.0, 500, 100, None),
    "line_last_d8": (8, [0.0] * 7 + [1.0], 10.0, 500, 100, None),
}

GROWTH_SCENARIOS = ("curved", "greedy_scalar", "lazy_simplex_equivalent", "sphere_simplex")


def preset_config(name: str, seed: int = 0, eta: float = 1.0) -> Tuple[ExperimentConfig, Optional[Tuple[float, ...]]]:
    """
    Lazy learner on the simplex with sphere noise at a named sweep or line-plot setting.

    Returns:
        (config, R values) where R values is None for line-plot presets
    """
    try:
        d, mean, radius, horizon, trials, r_values = PRESETS[name]
    except KeyError:
        raise InvalidParameterError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
    config = ExperimentConfig(
        algorithm="lazy",
        domain=DomainSpec.simplex(d),
        costs=CostModel.sphere_noise(mean, radius),
        eta=eta,
        horizon=horizon,
        trials=trials,
        seed=seed,
        record_level="per_turn" if r_values is None else "summary",
    )
    return config, r_values


def scenario_config(
    scenario: str,
    horizon: int,
    trials: int,
    seed: int = 0,
    alpha: float = 3.0,
    eta: float = 1.0,
) -> ExperimentConfig:
    """
    Build the config of a growth scenario.

    - curved: lazy on the curved cap with (B, 1) costs
    - greedy_scalar: greedy on [-1, 1] with the +1/-1 counterexample
    - lazy_simplex_equivalent: lazy on the 2-simplex with (s, -s) costs
    - sphere_simplex: lazy on the 2-simplex, a = (0, 1), R = 1
    """
    if scenario == "curved":
        algorithm, domain, costs = "lazy", DomainSpec.curved(alpha), CostModel.curved_example()
    elif scenario == "greedy_scalar":
        algorithm, domain, costs = "greedy", DomainSpec.interval(), CostModel.greedy_example()
    elif scenario == "lazy_simplex_equivalent":
        algorithm, domain, costs = "lazy", DomainSpec.simplex(2), CostModel.greedy_example(simplex=True)
    elif scenario == "sphere_simplex":
        algorithm, domain, costs = "lazy", DomainSpec.simplex(2), CostModel.sphere_noise([0.0, 1.0], 1.0)
    else:
        raise InvalidParameterError(f"unknown growth scenario {scenario!r}; choose from {list(GROWTH_SCENARIOS)}")
    return ExperimentConfig(
        algorithm=algorithm,
        domain=domain,
        costs=costs,
        eta=eta,
        horizon=horizon,
        trials=trials,
        seed=seed,
    )
