"""
Application configuration settings.

Centralized configuration management using environment variables.
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Settings:
    """Engine configuration settings."""

    # Nichols pairing matrices: cap on m^d (alphabet size to the degree)
    QGROW_SIZE_CAP: int = int(os.getenv("QGROW_SIZE_CAP", "10000"))

    # Yang-Baxter checks: exhaustive triple products up to this space
    # dimension, probe vectors above it
    QYBE_EXHAUSTIVE_MAX_DIM: int = int(os.getenv("QYBE_EXHAUSTIVE_MAX_DIM", "8"))
    QYBE_PROBE_COUNT: int = int(os.getenv("QYBE_PROBE_COUNT", "16"))

    # Growth tree: include rank-induction edges A_{n-1} -> A_n, flagged as cited
    TREE_INCLUDE_CITED: bool = os.getenv("TREE_INCLUDE_CITED", "true").lower() == "true"

    # Logging Configuration
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING").upper()
    LOG_FILE: str = os.getenv("LOG_FILE", "")
    LOG_FORMAT: str = os.getenv(
        "LOG_FORMAT", "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )


# Global settings instance
settings = Settings()
