"""Configuration management."""

import os

from dotenv import load_dotenv
from pydantic import BaseModel

from .errors import ConfigError

OUTPUT_FORMATS = ("json", "text")


class Config(BaseModel):
    """Application configuration."""

    # Output
    output_format: str = "json"  # "json" or "text"

    # Verification windows
    box_radius: int = 3
    seed: int = 0
    samples: int = 50

    @classmethod
    def from_env(cls) -> "Config":
        """Load configuration from environment variables."""
        load_dotenv()
        config = cls(
            output_format=os.getenv("MPWEYL_FORMAT", "json"),
            box_radius=_int_env("MPWEYL_BOX", 3),
            seed=_int_env("MPWEYL_SEED", 0),
            samples=_int_env("MPWEYL_SAMPLES", 50),
        )
        config.require_valid()
        return config

    def require_valid(self) -> None:
        """Validate option values, raise ConfigError if one is unusable."""
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(
                f"MPWEYL_FORMAT must be one of {', '.join(OUTPUT_FORMATS)}, "
                f"got {self.output_format!r}"
            )
        if self.box_radius < 0:
            raise ConfigError(f"box radius must be >= 0, got {self.box_radius}")
        if self.samples < 1:
            raise ConfigError(f"samples must be >= 1, got {self.samples}")


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
