"""
Simulator configuration loaded from environment variables or a .env file.
We use pydantic-settings so every tolerance and default is typed and validated on startup.
"""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="HOPSWITCH_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    APP_NAME: str = "hopswitch"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False

    # Entrywise tolerance on Hermiticity / trace / eigenvalues of density matrices
    STATE_TOLERANCE: float = 1e-10
    # Entrywise tolerance on the Kraus closure residual  sum K^dag K - I
    CPTP_TOLERANCE: float = 1e-10
    UNITARY_TOLERANCE: float = 1e-12
    # Amplitude products below this modulus count as vanishing
    AMPLITUDE_TOLERANCE: float = 1e-12
    # Default verdict threshold for walk-vs-switch comparisons
    EQUIVALENCE_TOLERANCE: float = 1e-9

    DEFAULT_SEED: int = 2025
    SWEEP_TRIALS: int = 100
    # 1 keeps sweeps sequential; >1 fans trials out over a thread pool
    SWEEP_WORKERS: int = 1

    # Sample channel / extension / coin spec files
    DATA_DIR: str = "data"
    OUTPUT_DIR: str = "reports"


# Shared by every module; tests monkeypatch attributes on this instance
settings = Settings()
