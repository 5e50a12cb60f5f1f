"""Tests for regret accounting, bound calculators, certificates and slope fits."""

import itertools
import math

import numpy as np
import pytest

from anytime_subgradient.costs import gaps
from anytime_subgradient.errors import (
    InsufficientDataError,
    InvalidInputError,
    InvalidParameterError,
    UndefinedGapError,
    UnsupportedError,
)
from anytime_subgradient.geometry import CurvedDomain, Interval, Simplex, project_zero_sum
from anytime_subgradient.harness import run_trial
from anytime_subgradient.metrics import (
    RunRecord,
    bound_adversarial,
    bound_pseudo_regret,
    bound_tail,
    certificate_turn,
    empirical_comparator,
    fit_loglog_slope,
    pseudo_regret,
    regret,
    snap_certificate,
    snap_turn,
    tilde_bounds,
    tilde_constants,
)
from anytime_subgradient.models import CostModel, DomainSpec, ExperimentConfig


def test_regret_examples():
    """Test regret against the best vertex."""
    simplex = Simplex(2)
    costs = [[1.0, 0.0]] * 3
    assert regret(costs, [[1.0, 0.0]] * 3, simplex) == 3.0
    assert regret(costs, [[0.0, 1.0]] * 3, simplex) == 0.0


def test_regret_matches_vertex_enumeration():
    """Test regret on small instances against every fixed vertex."""
    rng = np.random.default_rng(0)
    simplex = Simplex(3)
    for _ in range(50):
        costs = rng.normal(size=(5, 3))
        actions = simplex.project(rng.normal(size=(5, 3)))
        paid = float((costs * actions).sum())
        best = min(float(costs[:, j].sum()) for j in range(3))
        assert regret(costs, actions, simplex) == pytest.approx(paid - best, abs=1e-12)


def test_regret_on_other_domains():
    """Test regret with box and curved comparators."""
    costs = np.array([[0.5], [-1.0], [2.0]])
    actions = np.zeros((3, 1))
    # cumulative cost 1.5 > 0, comparator -1
    assert regret(costs, actions, Interval()) == pytest.approx(1.5)

    costs = np.array([[1.0, 1.0], [-1.0, 1.0]])
    actions = np.array([[0.0, 0.0], [0.5, 0.5]])
    # cumulative (0, 2): comparator at the origin
    assert regret(costs, actions, CurvedDomain(3.0)) == pytest.approx(0.0)


def test_regret_rejects_length_mismatch():
    """Test that costs and actions must align."""
    with pytest.raises(InvalidInputError):
        regret([[1.0, 0.0]] * 3, [[1.0, 0.0]] * 2, Simplex(2))


def test_pseudo_regret_examples():
    """Test pseudo-regret against the best-mean vertex."""
    a = [0.0, 1.0]
    assert pseudo_regret(a, [[1.0, 0.0]] * 5) == 0.0
    assert pseudo_regret(a, [[0.0, 1.0]] * 10) == 10.0
    assert pseudo_regret(a, [[0.5, 0.5]] * 4) == 2.0
    # curved domain: comparator at the origin, gap equals the height
    assert pseudo_regret(a, [[0.5, 0.25], [0.0, 0.0]], CurvedDomain(3.0)) == pytest.approx(0.25)


def test_pseudo_regret_below_regret_without_noise():
    """Test that with costs equal to the mean, pseudo-regret equals regret."""
    rng = np.random.default_rng(1)
    a = np.array([0.3, 0.1, 0.7])
    actions = Simplex(3).project(rng.normal(size=(20, 3)))
    costs = np.tile(a, (20, 1))
    assert pseudo_regret(a, actions) <= regret(costs, actions, Simplex(3)) + 1e-12


def test_bound_adversarial_simplex():
    """Test the adversarial bound and its simplex closed form."""
    report = bound_adversarial(1.0, 100, 0.5, math.sqrt(2.0), 1.0)
    assert report.special_value == pytest.approx(math.sqrt(2.0) + 20.0, abs=1e-9)
    assert report.bound_value == pytest.approx(21.414213562373096, abs=1e-9)

    report = bound_adversarial(2.0, 400, 0.25, math.sqrt(2.0), 1.0)
    assert report.special_value == pytest.approx(2.0 * math.sqrt(2.0) + 80.0, abs=1e-9)


def test_bound_adversarial_general_form():
    """Test the general form, the N = 0 boundary and the proof variant."""
    assert bound_adversarial(3.0, 0, 0.7, 2.0, 1.5).bound_value == pytest.approx(6.0)
    report = bound_adversarial(1.0, 4, 1.0, 2.0, 1.0)
    assert report.special_value is None
    assert report.bound_value == pytest.approx(2.0 + (0.5 + 2.0) * 2.0)
    variant = bound_adversarial(1.0, 4, 1.0, 2.0, 1.0, proof_variant=True)
    assert variant.bound_value == pytest.approx(2.0 + (1.0 + 2.0) * 2.0)
    with pytest.raises(InvalidParameterError):
        bound_adversarial(0.0, 10, 1.0, 1.0, 1.0)
    with pytest.raises(InvalidParameterError):
        bound_adversarial(1.0, 10, -1.0, 1.0, 1.0)


def test_bound_pseudo_regret_values():
    """Test the pseudo-regret bound and its tuned closed form."""
    report = bound_pseudo_regret(1.0, 1.0, 1.0, 0.5)
    assert report.special_value == pytest.approx(92.0, abs=1e-9)
    expected = math.sqrt(2.0) + 1.5 / 6.0 + (12.0 + 6.0 + 72.0 * math.exp(-2.0))
    assert report.bound_value == pytest.approx(expected, abs=1e-9)
    # no noise drops the exponential term
    assert bound_pseudo_regret(1.0, 0.0, 1.0, 1.0).extra["noise_term"] == 0.0


def test_bound_pseudo_regret_infinite_gap():
    """Test that an infinite gap leaves the gap-free terms."""
    report = bound_pseudo_regret(2.0, 1.0, math.inf, 0.5)
    assert report.bound_value == pytest.approx(math.sqrt(2.0) * 2.0 + (1.0 + 2.0 * 0.25 * 4.0) * 2.0 / 6.0)


def test_bound_pseudo_regret_monotone():
    """Test monotonicity in the gap, the noise and the cost bound."""
    grid = [0.25, 0.5, 1.0, 2.0, 4.0]
    for L2, R2, gap, eta in itertools.product(grid, grid, grid, [0.5, 1.0]):
        base = bound_pseudo_regret(L2, R2, gap, eta).bound_value
        assert bound_pseudo_regret(L2, R2, 2 * gap, eta).bound_value <= base
        assert bound_pseudo_regret(L2, 2 * R2, gap, eta).bound_value >= base
        assert bound_pseudo_regret(2 * L2, R2, gap, eta).bound_value >= base


def test_bound_pseudo_regret_rejects_zero_gap():
    """Test that a non-positive gap is undefined."""
    with pytest.raises(UndefinedGapError):
        bound_pseudo_regret(1.0, 1.0, 0.0, 1.0)


def test_bound_tail_values():
    """Test the tail bound, its threshold and validity floor."""
    report = bound_tail(1.0, 1.0, 1.0, 1.0, 48.0)
    floor = 3.0 * (2.0 + math.sqrt(2.0) + math.sqrt(2.0) / 3.0) ** 2
    assert report.extra["validity_floor"] == pytest.approx(floor, abs=1e-9)
    assert report.extra["validity_floor"] == pytest.approx(45.29, abs=0.01)
    assert report.bound_value == pytest.approx(37.0 * math.exp(-2.0), abs=1e-9)
    assert report.extra["threshold"] == pytest.approx(50.0)
    assert report.flags["t_valid"]

    assert not bound_tail(1.0, 1.0, 1.0, 1.0, 10.0).flags["t_valid"]
    values = [bound_tail(1.0, 1.0, 1.0, 1.0, t).bound_value for t in (50.0, 75.0, 100.0)]
    assert values[0] > values[1] > values[2]


def test_tilde_constants():
    """Test the flat-component norms of cost samples."""
    lt, rt = tilde_constants([[2.0, 2.0, 2.0], [-1.0, -1.0, -1.0]], [0.0, 0.0, 0.0])
    assert lt == 0.0 and rt == 0.0

    lt, _ = tilde_constants([[1.0, -1.0]], [0.0, 0.0])
    assert lt == pytest.approx(math.sqrt(2.0))

    rng = np.random.default_rng(2)
    samples = rng.normal(size=(100, 4))
    mean = np.array([0.0, 1.0, 1.0, 1.0])
    lt, rt = tilde_constants(samples, mean)
    assert lt == pytest.approx(np.linalg.norm(project_zero_sum(samples), axis=-1).max(), abs=1e-12)
    assert rt == pytest.approx(np.linalg.norm(project_zero_sum(samples - mean), axis=-1).max(), abs=1e-12)
    assert lt <= np.linalg.norm(samples, axis=-1).max()
    assert rt <= np.linalg.norm(samples - mean, axis=-1).max()

    with pytest.raises(InvalidInputError):
        tilde_constants(np.empty((0, 3)), [0.0, 0.0, 0.0])


def test_tilde_bounds_are_tighter():
    """Test that bounds at the tilde constants do not exceed the plain ones."""
    rng = np.random.default_rng(3)
    mean = np.array([0.0, 1.0])
    samples = mean + rng.normal(size=(50, 2))
    adversarial, pseudo = tilde_bounds(samples, mean, 1.0, 1.0, 100)
    L2 = np.linalg.norm(samples, axis=-1).max()
    R2 = np.linalg.norm(samples - mean, axis=-1).max()
    assert pseudo.bound_value <= bound_pseudo_regret(L2, R2, 1.0, 1.0).bound_value
    assert adversarial.bound_value <= bound_adversarial(L2, 100, 1.0, math.sqrt(2.0), 1.0).bound_value
    assert pseudo.flags["tilde"]


def test_empirical_comparator():
    """Test the reference line mean_gap + 0.4 R^2 / gap."""
    assert empirical_comparator(gaps([0.0, 1.0]), 10.0) == pytest.approx(0.5 + 40.0)
    with pytest.raises(UndefinedGapError):
        empirical_comparator(gaps([1.0, 1.0]), 1.0)


def _config(radius, horizon=60, seed=0, eta=1.0):
    return ExperimentConfig(
        algorithm="lazy",
        domain=DomainSpec.simplex(2),
        costs=CostModel.sphere_noise([0.0, 1.0], radius),
        eta=eta,
        horizon=horizon,
        seed=seed,
    )


def test_certificate_without_noise():
    """Test that a noiseless run certifies from turn 9 and plays e_1 after."""
    record = run_trial(_config(0.0, horizon=30))
    report = snap_certificate(record, gaps([0.0, 1.0]), 1.0)
    assert report.first_certified_turn == 9
    assert report.violations == 0
    assert all(h and c for h, c in report.as_pairs()[8:])
    np.testing.assert_array_equal(record.actions[9:], np.tile([1.0, 0.0], (21, 1)))


def test_certificate_turn_floor():
    """Test that the hypothesis fails before 9 / (gap^2 eta^2) turns."""
    profile = gaps([0.0, 0.5])
    mean = np.array([0.0, 0.5])
    # floor is 9 / (0.25 * 4) = 9 turns at eta = 2
    for n in range(1, 9):
        hypothesis, _ = certificate_turn(n, n * mean, np.array([0.5, 0.5]), mean, profile, 2.0)
        assert not hypothesis
    hypothesis, conclusion = certificate_turn(9, 9 * mean, np.array([1.0, 0.0]), mean, profile, 2.0)
    assert hypothesis and conclusion


def test_certificate_holds_on_noisy_runs():
    """Test that the conclusion holds whenever the hypothesis does."""
    profile = gaps([0.0, 1.0])
    for seed in range(20):
        report = snap_certificate(run_trial(_config(1.0, horizon=200, seed=seed)), profile, 1.0)
        assert report.violations == 0


def test_certificate_requires_a_mean():
    """Test that adversarial records are rejected."""
    config = ExperimentConfig(
        domain=DomainSpec.simplex(2),
        costs=CostModel.scripted([[1.0, 0.0], [0.0, 1.0]]),
        horizon=2,
    )
    record = run_trial(config)
    with pytest.raises(UnsupportedError):
        snap_certificate(record, gaps([0.0, 1.0]), 1.0)


def test_snap_turn():
    """Test the first turn after which actions stay on the optimal vertex."""
    profile = gaps([0.0, 1.0])
    actions = np.array([[0.5, 0.5], [1.0, 0.0], [0.2, 0.8], [1.0, 0.0], [1.0, 0.0]])
    assert snap_turn(actions, profile) == 4
    assert snap_turn(actions[:3], profile) is None
    assert snap_turn(np.tile([1.0, 0.0], (3, 1)), profile) == 1


def test_run_record_turn_access():
    """Test per-turn access to a record."""
    record = run_trial(_config(0.0, horizon=5))
    cost, y, x = record.turn(1)
    assert y is None
    np.testing.assert_array_equal(x, [0.5, 0.5])
    np.testing.assert_array_equal(record.unprojected_at(2), [0.0, -1.0])
    with pytest.raises(InvalidInputError):
        record.turn(6)
    assert isinstance(record, RunRecord)


def test_fit_loglog_slope():
    """Test slope fits on exact power laws."""
    n = np.array([10, 100, 1000, 10000, 100000])
    assert fit_loglog_slope(n, np.sqrt(n)) == pytest.approx(0.5, abs=1e-9)
    assert fit_loglog_slope(n, n ** 0.25) == pytest.approx(0.25, abs=1e-9)
    assert fit_loglog_slope(n, np.full(5, 3.0)) == pytest.approx(0.0, abs=1e-9)
    assert fit_loglog_slope(n, n ** 0.25, window=(1000, 100000)) == pytest.approx(0.25, abs=1e-9)


def test_fit_loglog_slope_errors():
    """Test the minimum point count and positivity."""
    with pytest.raises(InsufficientDataError):
        fit_loglog_slope([1, 2], [1.0, 2.0])
    with pytest.raises(InsufficientDataError):
        fit_loglog_slope([1, 10, 100], [1.0, 2.0, 3.0], window=(5, 50))
    with pytest.raises(InvalidInputError):
        fit_loglog_slope([1, 10, 100], [1.0, 0.0, 3.0])
