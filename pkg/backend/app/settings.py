# ============================================================
# ⚙️ SETTINGS MODULE
# Exact-path limits, bound constants, grids and logging setup
# ============================================================

import logging
import sys
from pathlib import Path
from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict

from .errors import UsageError

# ------------------------------------------------------------
# 🌐 Paths Setup
# ------------------------------------------------------------
ROOT = Path(__file__).resolve().parents[2]
DATA_DIR = ROOT / "data"
ENV_FILE = Path(__file__).resolve().parents[1] / ".env"


# ------------------------------------------------------------
# ⚙️ Settings
# ------------------------------------------------------------
class Settings(BaseSettings):
    APP_NAME: str = "Ewens Berry-Esseen Toolkit"
    DEBUG: bool = False

    # exact-path limits (integer sizes grow factorially)
    STIRLING_LIMIT: int = 500
    RATIONAL_LIMIT: int = 200
    UNDERFLOW_FLOOR: float = 1e-300

    # bound constants
    BERRY_ESSEEN_C: float = 0.5591
    HALL_BARBOUR_D: float = 1.0

    # c* root finding
    CSTAR_TOLERANCE: float = 1e-12
    CSTAR_BRACKET_LO: float = 0.1
    CSTAR_BRACKET_HI: float = 100.0
    CSTAR_DEGENERACY: float = 1e-6

    # sweeps
    GRID_LOG2_MIN: int = 10
    GRID_LOG2_MAX: int = 20
    GRID_POINTS: int = 11
    JOBS: int = 1

    DATA_DIR: Path = DATA_DIR

    model_config = SettingsConfigDict(
        env_prefix="EWENS_BERRY_",
        env_file=ENV_FILE,
        case_sensitive=False,
        extra="ignore",
    )


settings = Settings()


def load_settings(config_path: Optional[Path] = None) -> Settings:
    """Build settings from an optional key=value file; environment still wins."""
    if config_path is None:
        return Settings()
    path = Path(config_path)
    if not path.exists():
        raise UsageError(f"config file not found: {path}")
    return Settings(_env_file=path)


def use_settings(new: Settings) -> Settings:
    """Copy ``new`` into the shared instance so library defaults follow it."""
    for name in Settings.model_fields:
        setattr(settings, name, getattr(new, name))
    return settings


# ------------------------------------------------------------
# 🧾 Logging
# ------------------------------------------------------------
def configure_logging(debug: bool = False) -> None:
    """Route tagged log lines to stderr; stdout carries command payloads."""
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(message)s"))
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if debug else logging.INFO)
