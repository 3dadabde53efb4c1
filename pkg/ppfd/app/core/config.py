"""
Application Settings

Defaults for the CLI, overridable through PPFD_* environment variables or a
.env file in the working directory.
"""

from datetime import datetime
from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="PPFD_", env_file=".env", extra="ignore"
    )

    output_dir: Path = Path("./results")
    log_level: str = "INFO"
    default_seed: int = 0
    synth_origin: datetime = datetime(2000, 1, 1)
    workers: int = Field(default=1, ge=1)

    @field_validator("log_level")
    @classmethod
    def upper_level(cls, value: str) -> str:
        level = value.upper()
        if level not in {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {value!r}")
        return level

    def output_path(self, name: str) -> str:
        """Default location for an output file inside output_dir."""
        return str(self.output_dir / name)
