import os
import sys
import logging
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Optional

from core.errors import ConfigError

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "HAMCAY_CONFIG"


@dataclass(frozen=True)
class Config:
    """Application configuration"""
    # Handle paths for both .py and frozen executables
    if getattr(sys, 'frozen', False):
        BASE_DIR = os.path.dirname(sys.executable)
    else:
        BASE_DIR = os.path.dirname(os.path.abspath(__file__))

    VERSION = "1.0.0"

    ORACLE_WINDOW_MULTIPLIER: int = 4
    SEARCH_BUDGET: int = 24
    AUTO_PREFERENCE: str = "rays"
    CUT_BAND: int = 2
    CUT_BUDGET: int = 100000
    SWEEP_JOBS: int = 1
    OUTPUT_DIR: str = os.path.join(BASE_DIR, "hamcay_output")
    FIXTURE_DIR: str = os.path.join(BASE_DIR, "fixtures", "data")
    LOG_LEVEL: str = "WARNING"

    def __post_init__(self):
        for name in ("ORACLE_WINDOW_MULTIPLIER", "SEARCH_BUDGET", "CUT_BUDGET", "SWEEP_JOBS"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}")
        if self.CUT_BAND < 0:
            raise ConfigError(f"CUT_BAND must be non-negative, got {self.CUT_BAND}")
        if self.AUTO_PREFERENCE not in ("rays", "circles"):
            raise ConfigError(f"AUTO_PREFERENCE must be 'rays' or 'circles', got {self.AUTO_PREFERENCE!r}")

    @classmethod
    def load(cls, path: Optional[str] = None) -> "Config":
        """Load defaults overridden by a key=value file (argument or $HAMCAY_CONFIG)"""
        path = path or os.environ.get(CONFIG_ENV_VAR)
        if not path:
            return cls()

        try:
            with open(path, 'r', encoding='utf-8') as f:
                values = cls._parse_lines(f.read().splitlines(), path)
        except OSError as e:
            raise ConfigError(f"Cannot read config file {path}: {e}") from e

        logger.info(f"Loaded {len(values)} setting(s) from {path}")
        return cls(**values)

    @classmethod
    def _parse_lines(cls, lines, source: str) -> Dict[str, Any]:
        """Parse `key = value` lines into typed field values"""
        known = {f.name: f for f in fields(cls)}
        values: Dict[str, Any] = {}
        for lineno, raw in enumerate(lines, start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            if '=' not in line:
                raise ConfigError(f"{source}:{lineno}: expected key = value")
            key, value = (part.strip() for part in line.split('=', 1))
            field = known.get(key.upper())
            if field is None:
                raise ConfigError(f"{source}:{lineno}: unknown setting {key!r}")
            if field.type in (int, 'int'):
                try:
                    values[field.name] = int(value)
                except ValueError:
                    raise ConfigError(f"{source}:{lineno}: {key} must be an integer") from None
            else:
                values[field.name] = value
        return values

    def with_overrides(self, **overrides: Any) -> "Config":
        """Command-line flags win over file values; None means not given"""
        given = {key.upper(): value for key, value in overrides.items() if value is not None}
        return replace(self, **given) if given else self
