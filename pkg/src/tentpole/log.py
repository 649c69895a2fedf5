"""Logging configuration."""

import logging
import logging.config
from pathlib import Path

import yaml

from tentpole.settings import LoggingSettings

_FORMATS = {
    "text": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    "json": '{"timestamp": "%(asctime)s", "logger": "%(name)s", '
    '"level": "%(levelname)s", "message": "%(message)s"}',
}


def _default_config_path() -> Path | None:
    for candidate in (
        Path.cwd() / "config" / "logging.yaml",
        Path(__file__).parent.parent.parent / "config" / "logging.yaml",
    ):
        if candidate.exists():
            return candidate
    return None


def configure_logging(settings: LoggingSettings, verbose: bool = False) -> None:
    """Configure the ``tentpole`` logger hierarchy.

    A dictConfig YAML file wins when one is configured or found under
    ``config/``; otherwise a stderr handler with the configured format is
    installed.

    Args:
        settings: Logging settings
        verbose: Force DEBUG level regardless of settings
    """
    path = settings.config_path or _default_config_path()
    if path is not None and path.exists():
        with open(path) as f:
            logging.config.dictConfig(yaml.safe_load(f))
    else:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(_FORMATS[settings.format]))
        root = logging.getLogger("tentpole")
        root.handlers[:] = [handler]
        root.propagate = False

    level = "DEBUG" if verbose else settings.level.upper()
    logging.getLogger("tentpole").setLevel(level)
