"""
Utility modules for dlens
"""

from .config import DEFAULT_CONFIG, PROJECT_DIR, load_config
from .io_utils import round_half_away, save_csv, save_jsonl, save_to_json, write_jsonl
from .logger import setup_logger

__all__ = [
    "DEFAULT_CONFIG",
    "PROJECT_DIR",
    "load_config",
    "round_half_away",
    "save_csv",
    "save_jsonl",
    "save_to_json",
    "write_jsonl",
    "setup_logger",
]
