"""Tests for configuration models and config files."""

import pytest
from pydantic import ValidationError

from anytime_subgradient.errors import CsvFormatError
from anytime_subgradient.geometry import CurvedDomain, Interval, Simplex
from anytime_subgradient.models import (
    CostModel,
    DomainSpec,
    ExperimentConfig,
    config_from_mapping,
    load_config_file,
    parse_config_text,
)


def test_domain_spec_build():
    """Test building live domains."""
    assert isinstance(DomainSpec.simplex(3).build(), Simplex)
    assert isinstance(DomainSpec.interval().build(), Interval)
    assert isinstance(DomainSpec.curved(4.0).build(), CurvedDomain)
    box = DomainSpec(kind="box", lo=[0.0, 0.0], hi=[1.0, 2.0])
    assert box.d == 2


def test_domain_spec_validation():
    """Test rejected domain descriptions."""
    with pytest.raises(ValidationError):
        DomainSpec(kind="curved", alpha=2.0)
    with pytest.raises(ValidationError):
        DomainSpec(kind="box", lo=[1.0], hi=[0.0])
    with pytest.raises(ValidationError):
        DomainSpec(kind="box", d=2)


def test_cost_model_validation():
    """Test rejected cost models."""
    with pytest.raises(ValidationError):
        CostModel(kind="sphere_noise")
    with pytest.raises(ValidationError):
        CostModel.sphere_noise([1.0], 0.5)
    with pytest.raises(ValidationError):
        CostModel.sphere_noise([0.0, 1.0], -1.0)
    with pytest.raises(ValidationError):
        CostModel.scripted([[1.0, 0.0], [1.0]])


def test_cost_model_constants():
    """Test means and norm bounds of the built-in models."""
    model = CostModel.sphere_noise([3.0, 4.0], 2.0)
    assert model.cost_bound() == 7.0
    assert model.noise_bound() == 2.0
    assert CostModel.greedy_example().mean_vector().tolist() == [0.5]
    assert CostModel.scripted([[1.0, 0.0]]).mean_vector() is None


def test_experiment_config_validation():
    """Test rejected combinations."""
    costs = CostModel.sphere_noise([0.0, 1.0], 1.0)
    with pytest.raises(ValidationError):
        ExperimentConfig(domain=DomainSpec.simplex(3), costs=costs, horizon=10)
    with pytest.raises(ValidationError):
        ExperimentConfig(algorithm="ftl", domain=DomainSpec.curved(), costs=costs, horizon=10)
    with pytest.raises(ValidationError):
        ExperimentConfig(domain=DomainSpec.simplex(2), costs=costs, horizon=0)
    with pytest.raises(ValidationError):
        ExperimentConfig(domain=DomainSpec.simplex(2), costs=costs, horizon=5, eta=0.0)
    with pytest.raises(ValidationError):
        ExperimentConfig(domain=DomainSpec.simplex(2), costs=costs, horizon=5, seed=-1)


def test_with_radius_revalidates():
    """Test that copies are validated."""
    config = ExperimentConfig(domain=DomainSpec.simplex(2), costs=CostModel.sphere_noise([0.0, 1.0], 1.0), horizon=5)
    assert config.with_radius(3.0).costs.radius == 3.0
    with pytest.raises(ValidationError):
        config.with_radius(-1.0)
    with pytest.raises(ValidationError):
        config.replace(trials=0)


def test_parse_config_text():
    """Test the key-value parser."""
    values = parse_config_text("# comment\n\nmean = 0,1\nR: 2\n")
    assert values == {"mean": "0,1", "R": "2"}
    with pytest.raises(CsvFormatError):
        parse_config_text("mean 0,1\n")
    with pytest.raises(CsvFormatError):
        parse_config_text("colour = blue\n")


def test_config_from_mapping():
    """Test building an experiment from string values."""
    config = config_from_mapping({"mean": "0,1,1", "R": "0.5", "N": "40", "trials": "3", "algorithm": "ftl"})
    assert config.algorithm == "ftl"
    assert config.domain.d == 3
    assert config.horizon == 40
    assert config.costs.radius == 0.5


def test_config_from_mapping_errors():
    """Test missing pieces."""
    with pytest.raises(ValidationError):
        config_from_mapping({"R": "1", "N": "10"})
    with pytest.raises(CsvFormatError):
        config_from_mapping({"model": "scripted", "N": "3"})


def test_load_config_file(tmp_path):
    """Test reading a config file from disk."""
    path = tmp_path / "exp.cfg"
    path.write_text("domain = interval\nmodel = greedy_example\nalgorithm = greedy\nN = 10\n")
    config = config_from_mapping(load_config_file(path))
    assert config.domain.kind == "interval"
    with pytest.raises(OSError, match="missing.cfg"):
        load_config_file(tmp_path / "missing.cfg")
