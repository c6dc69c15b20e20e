"""Settings from the environment and verification bounds from YAML.

Precedence for a suite's bounds: CLI flags, then the suite's block in
``defaults.yaml``, then the file's ``default`` block, then the model defaults.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

import yaml
from pydantic import BaseModel, ConfigDict, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

_BUNDLED_CONFIG = Path(__file__).resolve().parent.parent / "config"


# ---------------------------------------------------------------------------
# Environment
# ---------------------------------------------------------------------------

class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="AICRYSTAL_", env_file=".env", env_file_encoding="utf-8"
    )

    log_json: bool = False
    log_level: str = "WARNING"
    verify_threads: int = Field(default=4, ge=1)
    config_dir: Path = _BUNDLED_CONFIG


@lru_cache()
def get_settings() -> Settings:
    return Settings()


# ---------------------------------------------------------------------------
# Verification bounds
# ---------------------------------------------------------------------------

class SuiteLimits(BaseModel):
    """Desk-scale bounds for one verification suite."""

    model_config = ConfigDict(frozen=True)

    max_n: int = Field(default=4, ge=3)
    max_size: int = Field(default=4, ge=0)
    max_len: int = Field(default=4, ge=0)


class SuiteOverrides(BaseModel):
    model_config = ConfigDict(extra="forbid")

    max_n: int | None = None
    max_size: int | None = None
    max_len: int | None = None

    def present(self) -> dict[str, int]:
        return self.model_dump(exclude_none=True)


class VerifyDefaults(BaseModel):
    """The ``verify`` section of ``defaults.yaml``."""

    default: SuiteOverrides = SuiteOverrides()
    suites: dict[str, SuiteOverrides] = {}


@lru_cache()
def get_defaults() -> VerifyDefaults:
    path = get_settings().config_dir / "defaults.yaml"
    if not path.exists():
        return VerifyDefaults()
    with open(path, "r", encoding="utf-8") as fh:
        raw = yaml.safe_load(fh) or {}
    return VerifyDefaults.model_validate(raw.get("verify") or {})


def get_suite_limits(suite: str, **flags: int | None) -> SuiteLimits:
    """Bounds for ``suite`` with any non-None ``flags`` applied last."""
    defaults = get_defaults()
    merged = defaults.default.present()
    merged.update(defaults.suites.get(suite, SuiteOverrides()).present())
    merged.update(SuiteOverrides(**flags).present())
    return SuiteLimits(**merged)
