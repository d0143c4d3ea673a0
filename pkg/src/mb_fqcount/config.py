"""Centralized application configuration."""

import os
import tomllib
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError, computed_field

from mb_fqcount.errors import FqCountError

DEFAULT_DATA_DIR = Path.home() / ".local" / "mb-fqcount"

# Environment overrides, applied after config.toml and before CLI flags
ENV_WORK_CAP = "FQCOUNT_CAP"
ENV_WORKERS = "FQCOUNT_WORKERS"

_TOML_KEYS = ("field_cap", "work_cap", "workers", "pairing_limit")


class Config(BaseModel):
    """Application-wide configuration."""

    model_config = ConfigDict(frozen=True)

    data_dir: Path = Field(description="Base directory for all application data")
    field_cap: int = Field(default=2**20, ge=2, description="Largest field size q accepted")
    work_cap: int = Field(default=10**8, ge=1, description="Largest number of tuple evaluations per enumeration")
    workers: int = Field(default=1, ge=1, description="Worker processes for enumeration and bijection checks")
    pairing_limit: int = Field(default=10**5, ge=0, description="Certificates keep explicit pairings up to this size")

    @computed_field(description="Optional TOML configuration file")
    @property
    def config_path(self) -> Path:
        """Optional TOML configuration file."""
        return self.data_dir / "config.toml"

    @computed_field(description="Log file")
    @property
    def log_path(self) -> Path:
        """Log file."""
        return self.data_dir / "fqcount.log"

    @staticmethod
    def build(data_dir: Path | None = None, *, work_cap: int | None = None, workers: int | None = None) -> Config:
        """Build a Config from defaults, optional config.toml, environment, then explicit overrides.

        Raises:
            FqCountError: Malformed config file, environment value or override (code: ``invalid_config``).

        """
        resolved_dir = data_dir if data_dir is not None else DEFAULT_DATA_DIR
        config_path = resolved_dir / "config.toml"

        kwargs: dict[str, Any] = {"data_dir": resolved_dir}
        if config_path.is_file():
            try:
                with config_path.open("rb") as f:
                    toml_data = tomllib.load(f)
            except tomllib.TOMLDecodeError as e:
                raise FqCountError("invalid_config", f"{config_path}: {e}") from e
            kwargs.update({key: toml_data[key] for key in _TOML_KEYS if key in toml_data})

        for env_name, key in ((ENV_WORK_CAP, "work_cap"), (ENV_WORKERS, "workers")):
            raw = os.environ.get(env_name)
            if raw:
                try:
                    kwargs[key] = int(raw)
                except ValueError:
                    raise FqCountError("invalid_config", f"{env_name} must be an integer, got '{raw}'.") from None

        if work_cap is not None:
            kwargs["work_cap"] = work_cap
        if workers is not None:
            kwargs["workers"] = workers

        try:
            return Config(**kwargs)
        except ValidationError as e:
            problems = "; ".join(f"{'.'.join(map(str, err['loc']))}: {err['msg']}" for err in e.errors())
            raise FqCountError("invalid_config", problems) from e
