"""
Storage utilities for saving rendered reports, tables and sequences.
"""

import datetime
import logging
import os

from config import MexLabConfig
from formats import OutputFormat

logger = logging.getLogger(__name__)


class StorageManager:
    def __init__(self, cfg: MexLabConfig):
        self.cfg = cfg

    @staticmethod
    def _timestamp() -> str:
        return datetime.datetime.now().strftime("%Y%m%d_%H%M%S")

    def save_output(self, text: str, prefix: str, fmt: OutputFormat) -> str:
        os.makedirs(self.cfg.output_dir, exist_ok=True)
        fname = f"{prefix}_{self._timestamp()}.{fmt.extension}"
        path = os.path.join(self.cfg.output_dir, fname)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        logger.info(f"Saved {fmt.value} output to {path}")
        return path
