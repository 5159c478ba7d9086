"""
Engine Settings

Process-wide knobs shared by the counting engines: the oracle budget, the
thread count for catalog sweeps and the seed for randomized checks.
"""

import logging
from dataclasses import dataclass, replace
from threading import RLock

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 8
DEFAULT_SEED = 20240611


@dataclass(frozen=True)
class EngineSettings:
    """Configuration settings for the counting engines."""

    # Cap on candidate objects an exhaustive oracle may visit
    oracle_budget: int = DEFAULT_BUDGET

    # Worker threads for per-class sweeps (1 = sequential)
    threads: int = 1

    # Seed for randomized property checks
    seed: int = DEFAULT_SEED


_settings = EngineSettings()
_settings_lock = RLock()


def get_settings() -> EngineSettings:
    """Get the current engine settings."""
    with _settings_lock:
        return _settings


def set_settings(settings: EngineSettings) -> None:
    """Replace the engine settings."""
    global _settings
    with _settings_lock:
        _settings = settings


def update_settings(**kwargs) -> None:
    """Update specific settings values."""
    global _settings
    with _settings_lock:
        for key in kwargs:
            if not hasattr(_settings, key):
                raise ValueError(f"Unknown settings option: {key}")
        _settings = replace(_settings, **kwargs)
        logger.debug(f"Engine settings updated: {_settings}")
