#!/usr/bin/env python3
from fractions import Fraction
from unittest.mock import mock_open, patch

import pytest
import yaml

from qmatroid.config import DEFAULTS, RunConfig, load_config
from qmatroid.errors import ConfigError, ParseError
from qmatroid.finite_field import parse_field_spec

# Sample configuration, partial on purpose: missing keys come from the defaults
TEST_CONFIG = {
    'enumeration': {
        'budget': 5000,
        'workers': 2
    },
    'verify': {
        'q': [3, 7],
        'g_convention': 'cardinality'
    },
    'output': {
        'format': 'structured'
    }
}


class TestLoadConfig:

    @patch('builtins.open', new_callable=mock_open, read_data=yaml.dump(TEST_CONFIG))
    def test_load_config(self, mock_file):
        config = load_config('test_config.yaml')
        assert config['enumeration']['budget'] == 5000
        assert config['verify']['q'] == [3, 7]
        assert config['verify']['oracle'] == 'shortcut'
        assert config['field']['max_size'] == DEFAULTS['field']['max_size']
        mock_file.assert_called_once_with('test_config.yaml', 'r')

    def test_load_config_missing_key(self):
        invalid_config = {'enumeration': {'budget': 10}}
        with patch('builtins.open', new_callable=mock_open, read_data=yaml.dump(invalid_config)):
            with pytest.raises(ConfigError) as excinfo:
                load_config('test_config.yaml')
            assert "Missing required key 'verify'" in str(excinfo.value)

    def test_load_config_not_a_mapping(self):
        with patch('builtins.open', new_callable=mock_open, read_data='- just\n- a list\n'):
            with pytest.raises(ConfigError):
                load_config('test_config.yaml')

    def test_load_config_bad_yaml(self):
        with patch('builtins.open', new_callable=mock_open, read_data='verify: [unclosed\n'):
            with pytest.raises(ConfigError) as excinfo:
                load_config('test_config.yaml')
            assert 'Invalid YAML' in str(excinfo.value)

    def test_load_config_missing_file(self, tmp_path):
        with pytest.raises(ConfigError) as excinfo:
            load_config(str(tmp_path / 'absent.yaml'))
        assert 'Cannot read config file' in str(excinfo.value)

    @patch('qmatroid.config.os.path.exists', return_value=False)
    def test_defaults_without_a_file(self, mock_exists):
        config = load_config()
        assert config == DEFAULTS
        assert config is not DEFAULTS


class TestRunConfig:

    def test_from_sources_uses_config_values(self):
        with patch('builtins.open', new_callable=mock_open, read_data=yaml.dump(TEST_CONFIG)):
            config = load_config('test_config.yaml')
        cfg = RunConfig.from_sources(config, command='verify')
        assert cfg.budget == 5000
        assert cfg.workers == 2
        assert cfg.q_values == [3, 7]
        assert cfg.g_convention == 'cardinality'
        assert cfg.output_format == 'structured'
        assert cfg.a == Fraction(1) and cfg.b == Fraction(-1)

    def test_flags_override_config(self):
        cfg = RunConfig.from_sources(DEFAULTS, command='verify', budget=99, oracle='subset-search', workers=None)
        assert cfg.budget == 99
        assert cfg.oracle == 'subset-search'
        assert cfg.workers == 1

    @pytest.mark.parametrize(
        'overrides',
        [
            {'budget': 0},
            {'workers': 0},
            {'output_format': 'xml'},
            {'oracle': 'guess'},
            {'g_convention': 'legendre'},
        ],
    )
    def test_invalid_values(self, overrides):
        with pytest.raises(ConfigError):
            RunConfig(command='verify', **overrides)

    def test_field_spec_is_parsed(self):
        cfg = RunConfig(command='verify', field_spec='3^2:2,2,1')
        assert cfg.field == parse_field_spec('3^2:2,2,1')
        assert cfg.field.q == 9
        assert RunConfig(command='verify').field is None

    def test_malformed_field_spec(self):
        with pytest.raises(ParseError):
            RunConfig(command='verify', field_spec='nine')
