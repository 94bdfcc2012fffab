"""
Configuration management for symdeform.

Supports multiple configuration sources with priority:
1. CLI arguments
2. Environment variables (a ``.env`` file in the working directory is loaded first)
3. Config file
4. Default values
"""

import copy
import os
from pathlib import Path
from typing import Any, Dict, Optional
from functools import lru_cache

from dotenv import load_dotenv

try:
    import tomllib  # Python 3.11+
except ImportError:
    import tomli as tomllib  # Fallback for Python < 3.11


DEFAULTS: Dict[str, Any] = {
    "format": "text",
    "log_level": "WARNING",
    "sweep": {
        "max_block_n": 6,
        "max_total": 10,
        "lambdas": "0,1,-1,1/2,1+1i",
        "triples": 200,
        "workers": 1,
    },
    "projection": {
        "samples": 100,
        "seed": 20240611,
    },
    "catalog": {
        "nw_single": "first_column",
        "righthalfcap": "first_row_last_column",
    },
}

# env var -> (dotted key, converter)
_ENV_OVERRIDES = {
    "SYMDEFORM_FORMAT": ("format", str),
    "SYMDEFORM_LOG_LEVEL": ("log_level", str),
    "SYMDEFORM_SEED": ("projection.seed", int),
    "SYMDEFORM_WORKERS": ("sweep.workers", int),
}


def _merge(base: Dict[str, Any], update: Dict[str, Any]) -> Dict[str, Any]:
    """Recursively merge ``update`` into ``base`` (in place)."""
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        else:
            base[key] = value
    return base


class Config:
    """Centralized configuration manager."""

    def __init__(self, config_file: Optional[Path] = None, use_env: bool = True):
        self._config: Dict[str, Any] = {}
        self._config_file: Optional[Path] = config_file
        self._use_env = use_env
        self._load_config()

    def _load_config(self):
        """Load configuration from all sources."""
        self._config = copy.deepcopy(DEFAULTS)

        config_file = self._config_file or self._find_config_file()
        if config_file and config_file.exists():
            self._config_file = config_file
            try:
                with open(config_file, "rb") as f:
                    _merge(self._config, tomllib.load(f))
            except (tomllib.TOMLDecodeError, OSError):
                pass

        if not self._use_env:
            return

        load_dotenv(Path.cwd() / ".env", override=False)
        for var, (key, convert) in _ENV_OVERRIDES.items():
            raw = os.getenv(var)
            if raw:
                try:
                    self.set(key, convert(raw), save=False)
                except ValueError:
                    pass

    def _find_config_file(self) -> Optional[Path]:
        """Find config file in standard locations."""
        cwd_config = Path.cwd() / ".symdeformrc"
        if cwd_config.exists():
            return cwd_config

        home_config = Path.home() / ".symdeform" / "config.toml"
        if home_config.exists():
            return home_config

        return None

    @property
    def config_file(self) -> Optional[Path]:
        return self._config_file

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value.

        Supports dot notation for nested keys (e.g., 'sweep.max_total').
        """
        keys = key.split(".")
        value = self._config

        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return value

    def set(self, key: str, value: Any, save: bool = True):
        """
        Set configuration value.

        Supports dot notation for nested keys.
        Creates config file if it doesn't exist.
        """
        keys = key.split(".")
        config = self._config

        for k in keys[:-1]:
            if k not in config or not isinstance(config[k], dict):
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value

        if save:
            self._save_config()

    def as_dict(self) -> Dict[str, Any]:
        """Return a deep copy of the effective configuration."""
        return copy.deepcopy(self._config)

    def _remove_none_values(self, data: Dict[str, Any]) -> Dict[str, Any]:
        """Recursively remove None values from dictionary for TOML serialization."""
        result = {}
        for key, value in data.items():
            if value is None:
                continue
            elif isinstance(value, dict):
                cleaned = self._remove_none_values(value)
                if cleaned:
                    result[key] = cleaned
            else:
                result[key] = value
        return result

    def _save_config(self):
        """Save configuration to file."""
        import tomli_w

        if not self._config_file:
            config_dir = Path.home() / ".symdeform"
            config_dir.mkdir(parents=True, exist_ok=True)
            self._config_file = config_dir / "config.toml"

        config_to_save = self._remove_none_values(self._config)
        with open(self._config_file, "wb") as f:
            tomli_w.dump(config_to_save, f)


@lru_cache(maxsize=1)
def get_config() -> Config:
    """Get global configuration instance."""
    return Config()


def set_config(key: str, value: Any, save: bool = True):
    """Set configuration value."""
    get_config().set(key, value, save=save)
