import json
import logging
import os
import sys
from pathlib import Path
from typing import Optional

import yaml

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

logger = logging.getLogger(__name__)

ENV_VAR = "HOMLIE_CONFIG"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
KNOWN_KEYS = ("seed", "falsifier_trials", "random_checks", "max_levels", "default_adjoint", "debug_checks", "log_level")


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


class HomLieConfig:
    """Holds solver and CLI defaults."""
    def __init__(self, data: Optional[dict] = None):
        data = dict(data or {})
        self.seed: int = data.get("seed", 0)
        self.falsifier_trials: int = data.get("falsifier_trials", 8)
        self.random_checks: int = data.get("random_checks", 20)
        self.max_levels: Optional[int] = data.get("max_levels")
        self.default_adjoint: int = data.get("default_adjoint", 0)
        self.debug_checks: bool = data.get("debug_checks", False)
        self.log_level: str = data.get("log_level", "WARNING")

        for key in sorted(set(data) - set(KNOWN_KEYS)):
            logger.warning(f"Ignoring unknown config key '{key}'")
        if not _is_int(self.seed):
            logger.warning(f"Invalid seed '{self.seed}'. Defaulting to 0.")
            self.seed = 0
        if not _is_int(self.falsifier_trials) or self.falsifier_trials < 0:
            logger.warning(f"Invalid falsifier_trials '{self.falsifier_trials}'. Defaulting to 8.")
            self.falsifier_trials = 8
        if not _is_int(self.random_checks) or self.random_checks < 0:
            logger.warning(f"Invalid random_checks '{self.random_checks}'. Defaulting to 20.")
            self.random_checks = 20
        if self.max_levels is not None and (not _is_int(self.max_levels) or self.max_levels < 1):
            logger.warning(f"Invalid max_levels '{self.max_levels}'. Defaulting to the dimension.")
            self.max_levels = None
        if not _is_int(self.default_adjoint):
            logger.warning(f"Invalid default_adjoint '{self.default_adjoint}'. Defaulting to 0.")
            self.default_adjoint = 0
        if not isinstance(self.debug_checks, bool):
            logger.warning(f"Invalid debug_checks '{self.debug_checks}'. Defaulting to false.")
            self.debug_checks = False
        if not isinstance(self.log_level, str) or self.log_level.upper() not in LOG_LEVELS:
            logger.warning(f"Invalid log_level '{self.log_level}'. Defaulting to WARNING.")
            self.log_level = "WARNING"
        self.log_level = self.log_level.upper()


def load_config(path: str) -> Optional[HomLieConfig]:
    """Loads configuration from a JSON, YAML or TOML file."""
    config_path = Path(path)
    try:
        logger.info(f"Attempting to load configuration from: {config_path}")
        suffix = config_path.suffix.lower()
        if suffix == ".toml":
            with open(config_path, "rb") as f:
                data = tomllib.load(f)
        else:
            with open(config_path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) if suffix in (".yaml", ".yml") else json.load(f)
        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ValueError("top level must be a mapping")
        config = HomLieConfig(data)
        logger.info("Configuration loaded successfully.")
        return config
    except FileNotFoundError:
        logger.critical(f"Config file not found: {config_path}")
        return None
    except json.JSONDecodeError:
        logger.critical(f"Failed to decode JSON config: {config_path}")
        return None
    except yaml.YAMLError:
        logger.critical(f"Failed to decode YAML config: {config_path}")
        return None
    except tomllib.TOMLDecodeError:
        logger.critical(f"Failed to decode TOML config: {config_path}")
        return None
    except ValueError as e:
        logger.critical(f"Config validation failed: {e}")
        return None
    except Exception as e:
        logger.critical(f"Unexpected error loading config: {e}")
        return None


def resolve_config(path: Optional[str] = None) -> Optional[HomLieConfig]:
    """--config first, then $HOMLIE_CONFIG, then defaults. None means the named file failed to load."""
    path = path or os.environ.get(ENV_VAR)
    if not path:
        return HomLieConfig()
    return load_config(path)
