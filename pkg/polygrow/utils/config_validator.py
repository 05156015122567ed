"""
Configuration Validator
Validates the master configuration and its classification runs
"""

import json
import os
from typing import Any, Dict, List

from polygrow.utils.errors import ConfigError
from polygrow.utils.logger import Logger


class ConfigValidator:
    def __init__(self):
        """Initialize Configuration Validator"""
        self.logger = Logger()

    def load_config(self, config_path: str) -> Dict[str, Any]:
        """Load and validate a master configuration file"""
        if not os.path.exists(config_path):
            raise ConfigError(f"Config file not found: {config_path}")
        try:
            with open(config_path, 'r', encoding='utf-8') as file:
                config = json.load(file)
        except json.JSONDecodeError as e:
            raise ConfigError(f"Invalid JSON in {config_path}: {str(e)}")
        if not self.validate_master_config(config):
            raise ConfigError(f"Configuration validation failed: {config_path}")
        return config

    def validate_master_config(self, config: Dict[str, Any]) -> bool:
        """Validate master configuration file"""
        try:
            required_sections = ['enumeration_config', 'reporting', 'classification_runs']
            for section in required_sections:
                if section not in config:
                    self.logger.error(f"Missing required section: {section}")
                    return False

            if not self._validate_enumeration_config(config['enumeration_config']):
                return False

            if not self._validate_reporting_config(config['reporting']):
                return False

            if not self._validate_classification_runs(config['classification_runs']):
                return False

            self.logger.debug("Master configuration validation passed")
            return True

        except Exception as e:
            self.logger.error(f"Master config validation failed: {str(e)}")
            return False

    def _is_int(self, value: Any) -> bool:
        return isinstance(value, int) and not isinstance(value, bool)

    def _validate_enumeration_config(self, enumeration_config: Dict[str, Any]) -> bool:
        """Validate enumeration_config section"""
        limits = {'threads': 0, 'parallel_threshold': 1, 'zero_interior_collinear_cap': 1}
        for name, minimum in limits.items():
            if name in enumeration_config:
                value = enumeration_config[name]
                if not self._is_int(value) or value < minimum:
                    self.logger.error(f"Invalid {name}: must be an integer >= {minimum}")
                    return False
        return True

    def _validate_reporting_config(self, reporting_config: Dict[str, Any]) -> bool:
        """Validate reporting configuration section"""
        required_fields = ['json_reports', 'word_reports', 'report_directory', 'dataset_directory']

        for field in required_fields:
            if field not in reporting_config:
                self.logger.error(f"Missing reporting field: {field}")
                return False

        for field in ['json_reports', 'word_reports', 'plot_images']:
            if field in reporting_config and not isinstance(reporting_config[field], bool):
                self.logger.error(f"Invalid {field}: must be boolean")
                return False

        return True

    def _validate_classification_runs(self, runs: List[Dict[str, Any]]) -> bool:
        """Validate the list of classification runs"""
        if not isinstance(runs, list):
            self.logger.error("classification_runs must be a list")
            return False

        if not runs:
            self.logger.warning("No classification runs defined")
            return True

        for i, run in enumerate(runs):
            for field in ['name', 'execute']:
                if field not in run:
                    self.logger.error(f"Run {i}: Missing required field: {field}")
                    return False

            if str(run['execute']).lower() not in ['y', 'n']:
                self.logger.error(f"Run {i}: execute must be 'y' or 'n'")
                return False

            expected = run.get('expected_total')
            if expected is not None and (not self._is_int(expected) or expected < 0):
                self.logger.error(f"Run {i}: expected_total must be a nonnegative integer")
                return False

            if run.get('zero_interior', False):
                continue

            r, k = run.get('r'), run.get('k')
            if not self._is_int(r) or r < 1:
                self.logger.error(f"Run {i}: r must be a positive integer")
                return False
            if not self._is_int(k) or k < 0 or (r == 1 and k < 3):
                self.logger.error(f"Run {i}: k must be >= 0, and >= 3 when r = 1")
                return False

        return True
