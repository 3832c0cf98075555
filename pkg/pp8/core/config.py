"""
Configuration settings for the degree-8 permutation polynomial classifier.

This module defines the application settings using Pydantic's BaseSettings,
which automatically loads configuration from environment variables (prefixed
with ``PP8_``) and the ``.env`` file.
"""

from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

BASE_DIR: Path = Path(__file__).resolve().parent.parent.parent


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.

    Attributes:
        moduli_file (Optional[Path]): Moduli constants file replacing the packaged one
        threads (int): Default worker count for the search drivers
        hc_odd_k_only (bool): Test only odd k in the full Hermite check
        logs_dir (Path): Directory receiving the dated log file
        log_level (str): Level of the ``pp8`` logger
        output_dir (Path): Default directory for ``classify --out`` result files
    """
    moduli_file: Optional[Path] = None
    threads: int = Field(default=1, ge=1)
    hc_odd_k_only: bool = False
    logs_dir: Path = BASE_DIR / 'logs'
    log_level: str = 'INFO'
    output_dir: Path = Path('.')

    model_config: SettingsConfigDict = SettingsConfigDict(
        env_file=".env",
        env_prefix="PP8_",
        extra="ignore",
    )


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached application settings.

    Returns:
        Settings: Application settings instance
    """
    return Settings()


settings: Settings = get_settings()
