"""Run configuration: YAML defaults merged with command-line flags."""

import copy
import logging
import os
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Any, Dict, List, Optional

import yaml

from .enumeration import DEFAULT_BUDGET
from .errors import ConfigError
from .finite_field import DEFAULT_MAX_FIELD_SIZE, Field, parse_field_spec
from .kontsevich import G_CONVENTIONS, W_ORACLES

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_FILE = "qmatroid.yaml"

DEFAULTS: Dict[str, Any] = {
    "enumeration": {"budget": DEFAULT_BUDGET, "workers": 1},
    "field": {"max_size": DEFAULT_MAX_FIELD_SIZE, "spec": None},
    "verify": {
        "q": [3, 5],
        "oracle": "shortcut",
        "g_convention": "characteristic",
        "seed": 20240229,
        "chevalley_samples": 50,
        "kung_points": 5,
    },
    "output": {"format": "text"},
    "rank_oracle": {"validate": True},
}

REQUIRED_KEYS = ["enumeration", "verify"]
OUTPUT_FORMATS = ("text", "structured")


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(config_file: Optional[str] = None) -> Dict[str, Any]:
    """Load and validate the run configuration.

    Without a file, or when the default file is absent, the built-in defaults are
    returned.
    """
    if config_file is None:
        if not os.path.exists(DEFAULT_CONFIG_FILE):
            return copy.deepcopy(DEFAULTS)
        config_file = DEFAULT_CONFIG_FILE
    try:
        with open(config_file, "r") as f:
            config = yaml.safe_load(f)
    except OSError as e:
        raise ConfigError(f"Cannot read config file {config_file}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid YAML in {config_file}: {e}") from e

    if not isinstance(config, dict):
        raise ConfigError(f"Config file {config_file} must contain a mapping")
    for key in REQUIRED_KEYS:
        if key not in config:
            raise ConfigError(f"Missing required key '{key}' in config file")

    logger.debug("Loaded config from %s", config_file)
    return _merge(DEFAULTS, config)


@dataclass
class RunConfig:
    """Everything a command needs, after flags have overridden the YAML values.

    field is parsed from field_spec; q_from_flags marks q_values given on the
    command line rather than taken from the config file.
    """

    command: str
    inputs: List[str] = dataclass_field(default_factory=list)
    field_spec: Optional[str] = None
    q_values: List[int] = dataclass_field(default_factory=lambda: [3, 5])
    suite: Optional[str] = None
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    output_format: str = "text"
    oracle: str = "shortcut"
    g_convention: str = "characteristic"
    seed: int = 20240229
    chevalley_samples: int = 50
    kung_points: int = 5
    max_field_size: int = DEFAULT_MAX_FIELD_SIZE
    validate_oracles: bool = True
    a: Fraction = Fraction(1)
    b: Fraction = Fraction(-1)
    field: Optional[Field] = None
    q_from_flags: bool = False

    def __post_init__(self):
        if self.budget <= 0:
            raise ConfigError(f"enumeration budget must be positive, got {self.budget}")
        if self.workers < 1:
            raise ConfigError(f"worker count must be at least 1, got {self.workers}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"output format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")
        if self.oracle not in W_ORACLES:
            raise ConfigError(f"oracle must be one of {W_ORACLES}, got {self.oracle!r}")
        if self.g_convention not in G_CONVENTIONS:
            raise ConfigError(f"g convention must be one of {G_CONVENTIONS}, got {self.g_convention!r}")
        if self.field is None and self.field_spec:
            self.field = parse_field_spec(self.field_spec, self.max_field_size)

    @classmethod
    def from_sources(cls, config: Dict[str, Any], **flags) -> "RunConfig":
        """Combine a loaded config with parsed flags; flags set to None fall back to the config."""
        enumeration, verify = config["enumeration"], config["verify"]
        values = {
            "field_spec": config.get("field", {}).get("spec"),
            "q_values": list(verify.get("q", [3, 5])),
            "budget": int(enumeration.get("budget", DEFAULT_BUDGET)),
            "workers": int(enumeration.get("workers", 1)),
            "output_format": config.get("output", {}).get("format", "text"),
            "oracle": verify.get("oracle", "shortcut"),
            "g_convention": verify.get("g_convention", "characteristic"),
            "seed": int(verify.get("seed", 20240229)),
            "chevalley_samples": int(verify.get("chevalley_samples", 50)),
            "kung_points": int(verify.get("kung_points", 5)),
            "max_field_size": int(config.get("field", {}).get("max_size", DEFAULT_MAX_FIELD_SIZE)),
            "validate_oracles": bool(config.get("rank_oracle", {}).get("validate", True)),
        }
        values.update({key: value for key, value in flags.items() if value is not None})
        return cls(**values)
