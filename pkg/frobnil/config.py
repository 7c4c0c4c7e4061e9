"""Application configuration."""

import os
from typing import List


class Settings:
    """Application settings loaded from environment variables."""

    # Truncation and verification bounds
    DEGREE_CAP: int = int(os.getenv("FROBNIL_DEGREE_CAP", "6"))
    MAX_STRANDS: int = int(os.getenv("FROBNIL_MAX_STRANDS", "4"))
    SAMPLES: int = int(os.getenv("FROBNIL_SAMPLES", "200"))
    SEED: int = int(os.getenv("FROBNIL_SEED", "0"))

    # Memoized products of basis keys, per algebra
    PRODUCT_CACHE_SIZE: int = int(os.getenv("FROBNIL_PRODUCT_CACHE_SIZE", "65536"))

    # Directory of user-defined algebra configs
    ALGEBRA_DIR: str = os.getenv("FROBNIL_ALGEBRA_DIR", "algebras")

    # Redis Configuration
    REDIS_URL: str = os.getenv("REDIS_URL", "redis://localhost:6379")
    REPORT_TTL: int = int(os.getenv("FROBNIL_REPORT_TTL", "86400"))

    # CORS Configuration
    ALLOWED_ORIGINS: List[str] = os.getenv(
        "ALLOWED_ORIGINS",
        "http://localhost:3000,http://127.0.0.1:3000"
    ).split(",")

    # API Configuration
    API_TITLE: str = os.getenv("API_TITLE", "Frobnil API")
    API_DESCRIPTION: str = os.getenv(
        "API_DESCRIPTION",
        "Normal forms and relation checks for Frobenius nilHecke algebras"
    )
    API_VERSION: str = os.getenv("API_VERSION", "1.0.0")

    # Environment
    ENVIRONMENT: str = os.getenv("ENVIRONMENT", "development")

    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")


# Global settings instance
settings = Settings()
