import copy
import json
import os

import pytest

from polygrow.utils.config_validator import ConfigValidator
from polygrow.utils.errors import ConfigError

VALID = {
    'enumeration_config': {'threads': 0, 'parallel_threshold': 64, 'zero_interior_collinear_cap': 8},
    'reporting': {'json_reports': True, 'word_reports': False, 'plot_images': False,
                  'report_directory': './reports', 'dataset_directory': './datasets'},
    'classification_runs': [
        {'name': 'r2_k1', 'execute': 'y', 'r': 2, 'k': 1, 'expected_total': 106},
        {'name': 'zero_interior', 'execute': 'n', 'zero_interior': True, 'expected_total': 79},
    ],
}


@pytest.fixture
def config():
    return copy.deepcopy(VALID)


def test_valid_config(config):
    assert ConfigValidator().validate_master_config(config)


def test_shipped_config_is_valid():
    path = os.path.join(os.path.dirname(__file__), os.pardir, "config", "master_config.json")
    assert ConfigValidator().load_config(path)["classification_runs"]


@pytest.mark.parametrize("section", ['enumeration_config', 'reporting', 'classification_runs'])
def test_missing_section(config, section):
    del config[section]
    assert not ConfigValidator().validate_master_config(config)


@pytest.mark.parametrize("name,value", [('threads', -1), ('parallel_threshold', 0), ('threads', True),
                                        ('zero_interior_collinear_cap', 'eight')])
def test_bad_enumeration_values(config, name, value):
    config['enumeration_config'][name] = value
    assert not ConfigValidator().validate_master_config(config)


def test_reporting_fields(config):
    del config['reporting']['dataset_directory']
    assert not ConfigValidator().validate_master_config(config)
    config = copy.deepcopy(VALID)
    config['reporting']['plot_images'] = 'yes'
    assert not ConfigValidator().validate_master_config(config)


@pytest.mark.parametrize("change", [
    {'execute': 'maybe'},
    {'r': 0},
    {'k': -1},
    {'r': 1, 'k': 2},
    {'expected_total': -5},
])
def test_bad_runs(config, change):
    config['classification_runs'][0].update(change)
    assert not ConfigValidator().validate_master_config(config)


def test_zero_interior_run_needs_no_parameters(config):
    config['classification_runs'] = [{'name': 'zi', 'execute': 'y', 'zero_interior': True}]
    assert ConfigValidator().validate_master_config(config)


def test_load_errors(tmp_path, config):
    validator = ConfigValidator()
    with pytest.raises(ConfigError):
        validator.load_config(str(tmp_path / "absent.json"))

    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding='utf-8')
    with pytest.raises(ConfigError):
        validator.load_config(str(broken))

    config['classification_runs'][0]['execute'] = 'sometimes'
    invalid = tmp_path / "invalid.json"
    invalid.write_text(json.dumps(config), encoding='utf-8')
    with pytest.raises(ConfigError):
        validator.load_config(str(invalid))
