import copy
import logging
import os
from pathlib import Path

import toml
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

CONFIG_FILE_NAME = "config.toml"
LOCAL_CONFIG_FILE_NAME = "config.local.toml"

# corequot/config_manager/config.py -> project root
PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent
CONFIG_FILE_PATH = PROJECT_ROOT / CONFIG_FILE_NAME
LOCAL_CONFIG_FILE_PATH = PROJECT_ROOT / LOCAL_CONFIG_FILE_NAME

DEFAULT_CONFIG = {
    "logging": {
        "log_level": "WARNING",
        "log_file": "",
    },
    "verification": {
        "order": 40,
        "max_n": 25,
        "max_t": 6,
        "workers": 4,
        "seed": 20240601,
        "failure_sample": 5,
        "wright_max_weight": 0,
    },
    "qseries": {
        "window_margin": 1,
    },
}

# environment variable -> (section, key)
ENV_OVERRIDES = {
    "COREQUOT_MAX_N": ("verification", "max_n"),
    "COREQUOT_MAX_T": ("verification", "max_t"),
    "COREQUOT_ORDER": ("verification", "order"),
    "COREQUOT_WORKERS": ("verification", "workers"),
}


class ConfigError(Exception):
    """Custom exception for configuration errors."""
    pass


def _merge(defaults, loaded):
    merged = copy.deepcopy(defaults)
    for section, values in loaded.items():
        if isinstance(values, dict) and isinstance(merged.get(section), dict):
            merged[section].update(values)
        else:
            merged[section] = values
    return merged


def _apply_env_overrides(config):
    for name, (section, key) in ENV_OVERRIDES.items():
        raw = os.environ.get(name)
        if raw is None or raw == "":
            continue
        try:
            value = int(raw)
        except ValueError:
            raise ConfigError(f"Environment variable {name} must be a positive integer, got '{raw}'") from None
        if value < 1:
            raise ConfigError(f"Environment variable {name} must be a positive integer, got {value}")
        logger.debug(f"{name} overrides [{section}] {key} = {value}")
        config[section][key] = value


def validate_config(config):
    """
    Checks the [verification] and [qseries] values that the engine reads.

    Raises:
        ConfigError: If a depth, worker count or margin is out of range.
    """
    for key in ("order", "max_n", "max_t", "workers", "failure_sample"):
        value = config["verification"].get(key)
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ConfigError(f"[verification] {key} must be a positive integer, got {value!r}")
    seed = config["verification"].get("seed")
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ConfigError(f"[verification] seed must be an integer, got {seed!r}")
    # 0 means no cap
    cap = config["verification"].get("wright_max_weight")
    if not isinstance(cap, int) or isinstance(cap, bool) or cap < 0:
        raise ConfigError(f"[verification] wright_max_weight must be a nonnegative integer, got {cap!r}")
    margin = config["qseries"].get("window_margin")
    if not isinstance(margin, int) or isinstance(margin, bool) or margin < 0:
        raise ConfigError(f"[qseries] window_margin must be a nonnegative integer, got {margin!r}")


def load_config(config_path=None):
    """
    Loads the configuration, layered over the built-in defaults.

    An explicit path wins; otherwise config.local.toml and then config.toml in
    the project root are tried. With no file at all the defaults are used.
    COREQUOT_* environment variables (optionally from a .env file) override
    the [verification] depths last.

    Args:
        config_path (str or Path, optional): Explicit configuration file.

    Returns:
        dict: A dictionary containing the configuration settings.

    Raises:
        ConfigError: If an explicit file is missing, a file cannot be parsed,
                     or a value is invalid.
    """
    load_dotenv()
    path_to_load = None
    if config_path is not None:
        path_to_load = Path(config_path)
        if not path_to_load.exists():
            raise ConfigError(f"Configuration file not found: {path_to_load}")
    elif LOCAL_CONFIG_FILE_PATH.exists():
        path_to_load = LOCAL_CONFIG_FILE_PATH
    elif CONFIG_FILE_PATH.exists():
        path_to_load = CONFIG_FILE_PATH

    loaded = {}
    if path_to_load is not None:
        logger.debug(f"Using configuration: {path_to_load}")
        try:
            with open(path_to_load, 'r') as f:
                loaded = toml.load(f)
        except toml.TomlDecodeError as e:
            raise ConfigError(f"Error decoding '{path_to_load.name}': {e}")
        except OSError as e:
            raise ConfigError(f"Could not read '{path_to_load}': {e}")
    else:
        logger.debug("No configuration file found, using defaults")

    config = _merge(DEFAULT_CONFIG, loaded)
    _apply_env_overrides(config)
    validate_config(config)
    return config
