"""
Configuration loading and validation
"""

import json
import sys
from pathlib import Path
from typing import Any

from logger import Logger
from propagation import PathLossModel

DEFAULT_CONFIG_FILE = 'locator.json'

DEFAULTS: dict[str, Any] = {
    'path_loss': {
        'p0_dbm': -40.0,
        'd0_m': 1.0,
        'exponent': 3.0,
        'shadowing_sigma_db': 4.0,
    },
    'spacing': 5.0,
    'k': 3,
    'epsilon': 0.0,
    'bind': '127.0.0.1:7117',
    'trials': 200,
    'seed': 1,
    'leaf_size': 8,
}


class Config:
    """Handles loading and accessing locator settings from locator.json"""

    def __init__(self, config_file: str | None = DEFAULT_CONFIG_FILE, logger=None, required: bool = False):
        self.config_file = config_file
        self.logger = logger or Logger()
        self.settings = self._load(required)

    def _load(self, required: bool) -> dict[str, Any]:
        """Load settings from JSON file; an absent optional file means defaults."""
        if self.config_file is None:
            return {}
        if not Path(self.config_file).exists() and not required:
            return {}
        try:
            with open(self.config_file, encoding='utf-8') as f:
                data = json.load(f)
        except FileNotFoundError:
            self.logger.error(f"Error: Config file '{self.config_file}' not found")
            sys.exit(1)
        except json.JSONDecodeError as e:
            self.logger.error(f"Error: Invalid JSON in config file: {e}")
            sys.exit(1)
        if not isinstance(data, dict):
            self.logger.error(f"Error: Config file '{self.config_file}' must hold a JSON object")
            sys.exit(1)
        return data

    def get(self, key: str) -> Any:
        """Get a top-level setting, falling back to the built-in default"""
        return self.settings.get(key, DEFAULTS.get(key))

    def _number(self, key: str, kind: type) -> Any:
        value = self.get(key)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            self.logger.warning(f"Warning: '{key}' in {self.config_file} is not a number, using default")
            return DEFAULTS[key]
        return kind(value)

    def get_path_loss_model(self) -> PathLossModel:
        """Build the propagation model from the 'path_loss' block.

        Keys missing from the block keep their defaults.
        """
        block = self.settings.get('path_loss', {})
        if not isinstance(block, dict):
            self.logger.warning(f"Warning: 'path_loss' in {self.config_file} is not an object, using defaults")
            block = {}
        params = dict(DEFAULTS['path_loss'])
        for name in params:
            value = block.get(name)
            if isinstance(value, (int, float)) and not isinstance(value, bool):
                params[name] = float(value)
        return PathLossModel(**params)

    def get_spacing(self) -> float:
        return self._number('spacing', float)

    def get_k(self) -> int:
        return self._number('k', int)

    def get_epsilon(self) -> float:
        return self._number('epsilon', float)

    def get_trials(self) -> int:
        return self._number('trials', int)

    def get_seed(self) -> int:
        return self._number('seed', int)

    def get_leaf_size(self) -> int:
        return self._number('leaf_size', int)

    def get_bind(self) -> str:
        value = self.get('bind')
        return value if isinstance(value, str) else DEFAULTS['bind']
