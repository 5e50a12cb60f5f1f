"""Tests for domains, projections and the brute-force oracle."""

import math

import numpy as np
import pytest

from anytime_subgradient.errors import InvalidInputError, InvalidParameterError, UnsupportedError
from anytime_subgradient.geometry import (
    Box,
    CurvedDomain,
    Interval,
    Simplex,
    ZeroSumHyperplane,
    brute_force_project,
    format_point,
    parse_point,
    project_box,
    project_curved,
    project_simplex,
    project_zero_sum,
)


def test_project_simplex_examples():
    """Test simplex projection on hand-checked points."""
    np.testing.assert_allclose(project_simplex([0.0, 0.0, 0.0]), [1 / 3, 1 / 3, 1 / 3], atol=1e-15)
    np.testing.assert_allclose(project_simplex([2.0, 0.0]), [1.0, 0.0], atol=1e-15)
    np.testing.assert_allclose(project_simplex([0.6, 0.4]), [0.6, 0.4], atol=1e-15)


def test_project_simplex_rejects_bad_input():
    """Test that empty and non-finite points are rejected."""
    with pytest.raises(InvalidInputError):
        project_simplex([])
    with pytest.raises(InvalidInputError):
        project_simplex([1.0, math.nan])
    with pytest.raises(InvalidInputError):
        project_simplex([math.inf, 0.0])


def test_project_simplex_feasible_for_random_points():
    """Test that projected points are non-negative and sum to one."""
    rng = np.random.default_rng(1)
    w = rng.normal(scale=5.0, size=(500, 7))
    p = project_simplex(w)
    assert np.all(p >= 0.0)
    np.testing.assert_allclose(p.sum(axis=-1), 1.0, atol=1e-12)
    assert np.all(Simplex(7).contains(p))


def test_coordinate_gap_forces_zero():
    """Test that a coordinate at least 1 below another is projected to zero."""
    rng = np.random.default_rng(2)
    n = 1500
    rows = np.arange(n)
    checked = 0
    for d in range(2, 9):
        w = rng.normal(scale=3.0, size=(n, d))
        k = rng.integers(d, size=n)
        l = (k + rng.integers(1, d, size=n)) % d
        w[rows, l] = w[rows, k] - 1.0 - rng.exponential(size=n)
        assert np.all(project_simplex(w)[rows, l] <= 1e-12)
        checked += n
    assert checked >= 10_000


def test_simplex_projection_preserves_order():
    """Test that larger inputs never get smaller projected coordinates."""
    rng = np.random.default_rng(3)
    w = rng.normal(size=(1000, 5))
    p = project_simplex(w)
    for row_w, row_p in zip(w, p):
        order = np.argsort(row_w)
        assert np.all(np.diff(row_p[order]) >= -1e-15)


def test_simplex_projection_factors_through_zero_sum():
    """Test P_S(w) = P_S(P_V(w))."""
    rng = np.random.default_rng(4)
    w = rng.normal(scale=4.0, size=(10000, 6))
    np.testing.assert_allclose(project_simplex(project_zero_sum(w)), project_simplex(w), atol=1e-10)


def test_project_zero_sum_examples():
    """Test zero-sum projection removes the mean."""
    np.testing.assert_array_equal(project_zero_sum([1.0, 1.0]), [0.0, 0.0])
    np.testing.assert_array_equal(project_zero_sum([3.0, 1.0]), [1.0, -1.0])
    np.testing.assert_array_equal(project_zero_sum([1.0, 2.0, 3.0]), [-1.0, 0.0, 1.0])


def test_project_box_examples():
    """Test box clamping."""
    np.testing.assert_array_equal(project_box([2.0, -3.0], [-1.0, 0.0], [1.0, 1.0]), [1.0, 0.0])
    np.testing.assert_array_equal(project_box([0.2, 0.3], [-1.0, 0.0], [1.0, 1.0]), [0.2, 0.3])
    np.testing.assert_array_equal(Interval().project(-1.0 + 0.5), [-0.5])


def test_project_box_rejects_inverted_corners():
    """Test that lo > hi is an input error."""
    with pytest.raises(InvalidInputError):
        project_box([0.0], [1.0], [0.0])
    with pytest.raises(InvalidInputError):
        Box([0.0, 2.0], [1.0, 1.0])


def test_project_curved_examples():
    """Test the curved projection below, inside and beside the cap."""
    np.testing.assert_allclose(project_curved([0.0, -1.0], 3.0), [0.0, 0.0], atol=1e-12)
    np.testing.assert_array_equal(project_curved([0.5, 0.5], 3.0), [0.5, 0.5])
    np.testing.assert_allclose(project_curved([0.0, 5.0], 3.0), [0.0, 1.0], atol=1e-15)


def test_project_curved_matches_dense_scan():
    """Test the curved projection of (-0.5, -2) against a dense scan of the boundary."""
    alpha = 3.0
    p = project_curved([-0.5, -2.0], alpha)
    xs = np.linspace(-1.0, 1.0, 2_000_001)
    dist = (xs + 0.5) ** 2 + (np.abs(xs) ** alpha + 2.0) ** 2
    x_best = xs[np.argmin(dist)]
    assert p[0] == pytest.approx(x_best, abs=2e-6)
    assert p[1] == pytest.approx(abs(p[0]) ** alpha, abs=1e-12)
    # normal equation at the root
    slope = (p[0] + 0.5) + alpha * (abs(p[0]) ** alpha + 2.0) * np.sign(p[0]) * abs(p[0]) ** (alpha - 1)
    assert abs(slope) < 1e-9


def test_curved_rejects_flat_exponent():
    """Test that alpha <= 2 is rejected."""
    with pytest.raises(InvalidParameterError):
        CurvedDomain(2.0)
    with pytest.raises(InvalidParameterError):
        project_curved([0.0, 0.0], 1.5)


def test_batch_projection_matches_rows():
    """Test that projecting a batch gives the same bits as row by row."""
    rng = np.random.default_rng(5)
    for domain in (Simplex(4), CurvedDomain(3.0), Box([-1.0, 0.0], [1.0, 2.0])):
        w = rng.normal(scale=2.0, size=(64, domain.dimension))
        batch = domain.project(w)
        rows = np.stack([domain.project(row) for row in w])
        np.testing.assert_array_equal(batch, rows)


def test_projection_is_non_expansive():
    """Test ||P(w1) - P(w2)|| <= ||w1 - w2|| on every domain."""
    rng = np.random.default_rng(6)
    domains = [Simplex(3), CurvedDomain(2.5), CurvedDomain(5.0), Box([-1.0, -2.0], [1.0, 0.5]), ZeroSumHyperplane(3)]
    for domain in domains:
        w1 = rng.normal(scale=2.0, size=(300, domain.dimension))
        w2 = rng.normal(scale=2.0, size=(300, domain.dimension))
        lhs = np.linalg.norm(domain.project(w1) - domain.project(w2), axis=-1)
        rhs = np.linalg.norm(w1 - w2, axis=-1)
        assert np.all(lhs <= rhs + 1e-10)


def test_projection_lands_in_domain():
    """Test that every projection satisfies the membership check."""
    rng = np.random.default_rng(7)
    for domain in (Simplex(5), CurvedDomain(3.0), Interval(), ZeroSumHyperplane(4)):
        p = domain.project(rng.normal(scale=3.0, size=(200, domain.dimension)))
        assert np.all(domain.contains(p))


def test_domain_constants():
    """Test diameter and max-norm of each domain."""
    assert Simplex(3).diameter == pytest.approx(math.sqrt(2.0))
    assert Simplex(3).max_norm == 1.0
    assert CurvedDomain().diameter == 2.0
    assert CurvedDomain().max_norm == pytest.approx(math.sqrt(2.0))
    assert Interval().diameter == 2.0
    assert not ZeroSumHyperplane(2).is_compact


def test_minimize_linear():
    """Test the comparator of each domain."""
    np.testing.assert_array_equal(Simplex(3).minimize_linear([3.0, 1.0, 2.0]), [0.0, 1.0, 0.0])
    np.testing.assert_array_equal(Simplex(2).minimize_linear([0.0, 0.0]), [1.0, 0.0])
    np.testing.assert_array_equal(Box([-1.0, 0.0], [1.0, 2.0]).minimize_linear([1.0, -1.0]), [-1.0, 2.0])
    np.testing.assert_allclose(CurvedDomain().minimize_linear([0.0, 1.0]), [0.0, 0.0], atol=1e-15)
    np.testing.assert_array_equal(CurvedDomain().minimize_linear([1.0, -1.0]), [-1.0, 1.0])
    with pytest.raises(UnsupportedError):
        ZeroSumHyperplane(2).minimize_linear([1.0, 0.0])


def test_curved_minimize_linear_beats_scan():
    """Test the closed-form curved comparator against a boundary scan."""
    rng = np.random.default_rng(8)
    domain = CurvedDomain(3.0)
    xs = np.linspace(-1.0, 1.0, 200001)
    boundary = np.concatenate([np.stack([xs, np.abs(xs) ** 3], axis=-1), np.stack([xs, np.ones_like(xs)], axis=-1)])
    for c in rng.normal(size=(50, 2)):
        best = domain.minimize_linear(c)
        assert best @ c <= (boundary @ c).min() + 1e-9


def test_oracle_examples():
    """Test the oracle on its documented examples."""
    np.testing.assert_allclose(brute_force_project(Simplex(2), [2.0, 0.0]), [1.0, 0.0], atol=1e-3)
    np.testing.assert_allclose(brute_force_project(CurvedDomain(3.0), [0.0, -1.0]), [0.0, 0.0], atol=1e-3)
    box = Box([-1.0, 0.0], [1.0, 1.0])
    np.testing.assert_allclose(brute_force_project(box, [2.0, -3.0]), [1.0, 0.0], atol=1e-3)


def test_oracle_agrees_with_projections():
    """Test analytic projections against the oracle on random points."""
    rng = np.random.default_rng(9)
    domains = [Simplex(2), Simplex(3), Simplex(4), Simplex(5), CurvedDomain(2.5), CurvedDomain(3.0),
               Box([-1.0, -1.0], [1.0, 0.5])]
    for domain in domains:
        for w in rng.normal(scale=1.5, size=(20, domain.dimension)):
            np.testing.assert_allclose(domain.project(w), brute_force_project(domain, w), atol=1e-3)


def test_oracle_reaches_simplex_vertex():
    """Test the oracle on a 5-simplex point whose projection is a vertex."""
    w = np.array([-1.856, 1.301, -0.739, -1.864, -1.919])
    p = brute_force_project(Simplex(5), w)
    np.testing.assert_allclose(p, [0.0, 1.0, 0.0, 0.0, 0.0], atol=1e-6)
    np.testing.assert_allclose(p, project_simplex(w), atol=1e-6)
    assert np.sum((p - w) ** 2) <= np.sum((project_simplex(w) - w) ** 2) + 1e-9


def test_oracle_rejects_unsupported():
    """Test the oracle's dimension and domain limits."""
    with pytest.raises(UnsupportedError):
        brute_force_project(Simplex(6), np.zeros(6))
    with pytest.raises(UnsupportedError):
        brute_force_project(ZeroSumHyperplane(2), [1.0, 0.0])


def test_point_text_round_trip():
    """Test parsing and formatting of comma-separated points."""
    np.testing.assert_array_equal(parse_point("2,0"), [2.0, 0.0])
    assert format_point(np.array([1.0, 0.0])) == "1,0"
    assert format_point(np.array([0.25, -0.5])) == "0.25,-0.5"
    with pytest.raises(InvalidInputError):
        parse_point("1,,2")
    with pytest.raises(InvalidInputError):
        parse_point("a,b")


@pytest.mark.slow
def test_oracle_agreement_full():
    """Test analytic projections against the oracle on 1000 points per domain."""
    rng = np.random.default_rng(10)
    domains = [Simplex(2), Simplex(3), Simplex(4), Simplex(5), CurvedDomain(2.5), CurvedDomain(3.0), CurvedDomain(5.0),
               Box([-1.0, -1.0], [1.0, 0.5]), Interval()]
    for domain in domains:
        for w in rng.normal(scale=1.5, size=(1000, domain.dimension)):
            p = domain.project(w)
            np.testing.assert_allclose(p, brute_force_project(domain, w), atol=1e-3)
            assert domain.contains(p)
