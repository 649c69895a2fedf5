"""Configuration settings for Tentpole."""

from pathlib import Path
from typing import Literal

import yaml
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat
from pydantic_settings import BaseSettings, SettingsConfigDict


class ToleranceSettings(BaseModel):
    """Numerical tolerances used by construction and verification.

    All values are relative factors; each operation documents the scale it
    multiplies them with.
    """

    model_config = ConfigDict(frozen=True)

    sos: PositiveFloat = 1e-8
    interp: PositiveFloat = 1e-8
    bnd: PositiveFloat = 1e-8
    dom: PositiveFloat = 1e-8
    nonneg: PositiveFloat = 1e-9
    compat: PositiveFloat = 1e-9
    cert: PositiveFloat = 1e-6
    roots: PositiveFloat = 1e-8
    pair: PositiveFloat = 1e-7
    trim: PositiveFloat = 1e-12


class LoggingSettings(BaseModel):
    """Logging settings."""

    level: str = "WARNING"
    format: Literal["text", "json"] = "text"
    config_path: Path | None = None


class OutputSettings(BaseModel):
    """Defaults for emitted documents."""

    format: Literal["edge", "tent"] = "edge"
    indent: int = 2


class Settings(BaseSettings):
    """Main settings for Tentpole."""

    model_config = SettingsConfigDict(
        env_prefix="TENTPOLE_",
        env_nested_delimiter="__",
        case_sensitive=False,
    )

    tolerances: ToleranceSettings = Field(default_factory=ToleranceSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)

    @classmethod
    def from_yaml(cls, path: Path) -> "Settings":
        """Load settings from a YAML file."""
        if not path.exists():
            return cls()
        with open(path) as f:
            data = yaml.safe_load(f) or {}
        return cls(**data)


def get_schemas_dir() -> Path:
    """Get the path to the schemas directory."""
    # Check relative to package
    pkg_dir = Path(__file__).parent.parent.parent
    schemas_dir = pkg_dir / "schemas"
    if schemas_dir.exists():
        return schemas_dir
    # Check in current working directory
    cwd_schemas = Path.cwd() / "schemas"
    if cwd_schemas.exists():
        return cwd_schemas
    # Fallback
    return schemas_dir


# Global settings instance
_settings: Settings | None = None


def get_settings() -> Settings:
    """Get the global settings instance."""
    global _settings
    if _settings is None:
        # Try to load from config file
        config_paths = [
            Path.cwd() / "tentpole.yaml",
            Path.cwd() / "config" / "tentpole.yaml",
            Path("/etc/tentpole/tentpole.yaml"),
        ]
        for path in config_paths:
            if path.exists():
                _settings = Settings.from_yaml(path)
                break
        else:
            _settings = Settings()
    return _settings


def set_settings(settings: Settings) -> None:
    """Set the global settings instance."""
    global _settings
    _settings = settings


def load_settings_from_yaml(path: Path) -> Settings:
    """Load and set settings from a YAML file."""
    settings = Settings.from_yaml(path)
    set_settings(settings)
    return settings


def resolve_tolerances(tol: ToleranceSettings | None) -> ToleranceSettings:
    """Return ``tol`` or the configured tolerances when it is ``None``."""
    return tol if tol is not None else get_settings().tolerances
