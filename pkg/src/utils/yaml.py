import os
from typing import Any, Dict

import yaml

from utils.errors import ConfigError

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(os.path.dirname(__file__)), "config.yaml")


def load_config(config_path: str = DEFAULT_CONFIG_PATH) -> Dict[str, Any]:
    try:
        with open(config_path, "r") as f:
            config = yaml.safe_load(f)
    except OSError as e:
        raise ConfigError(f"Cannot read config file {config_path}: {e.strerror}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"Config file {config_path} is not valid YAML: {e}") from e
    if not isinstance(config, dict):
        raise ConfigError(f"Config file {config_path} must contain a mapping at top level")
    return config
