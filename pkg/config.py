"""
Configuration utilities for the mexlab toolkit.
"""

import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv


def setup_logging(level: str = "INFO"):
    """
    Configure logging with timestamps and levels.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
    """
    log_level = getattr(logging, level.upper(), logging.INFO)
    logging.basicConfig(
        level=log_level,
        format='%(asctime)s.%(msecs)03d - %(levelname)s - %(name)-9s -  %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    logging.debug(f"log_level: {logging.getLevelName(log_level)}")


@dataclass
class MexLabConfig:
    max_n: int = 90
    max_order: int = 5000
    default_max_n: int = 40
    default_order: int = 120
    workers: int = 1
    cache_n: int = 40
    output_dir: str = "./data/reports"
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "MexLabConfig":
        load_dotenv()  # optional .env support
        return cls(
            max_n=int(os.getenv("MEXLAB_MAX_N", "90")),
            max_order=int(os.getenv("MEXLAB_MAX_ORDER", "5000")),
            default_max_n=int(os.getenv("MEXLAB_DEFAULT_MAX_N", "40")),
            default_order=int(os.getenv("MEXLAB_ORDER", "120")),
            workers=max(1, int(os.getenv("MEXLAB_WORKERS", "1"))),
            cache_n=int(os.getenv("MEXLAB_CACHE_N", "40")),
            output_dir=os.getenv("MEXLAB_OUTPUT_DIR", "./data/reports"),
            log_level=os.getenv("LOG_LEVEL", "WARNING"),
        )
