"""Application settings loaded from environment variables."""

from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict

# Resolve .env path relative to project root (parent of config/)
_PROJECT_ROOT = Path(__file__).resolve().parent.parent
_ENV_FILE = _PROJECT_ROOT / ".env"


class Settings(BaseSettings):
    """Workbench configuration. All values loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=_ENV_FILE,
        env_file_encoding="utf-8",
        env_prefix="TORIC_QH_",
        case_sensitive=False,
        extra="ignore",
    )

    log_level: str = "INFO"

    # Size bounds: trace-form determinants, associativity sweep on FDAlgebra construction
    trace_form_max_dim: int = 16
    associativity_check_max_dim: int = 8

    # Non-vanishing test: schedule points tried after the all-ones point
    nonvanishing_max_points: int = 12

    blowup_max_n: int = 64

    # Report output
    emit_format: str = "text"
    report_indent: int = 2


settings = Settings()
