"""
Logging utilities for dlens
"""

import sys
from datetime import datetime
from pathlib import Path
from typing import Optional

from loguru import logger


CONSOLE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} - {extra[name]} - {level} - {message}"
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} - {extra[name]} - {level} - {file}:{line} - {message}"


def setup_logger(name: str, level: str = "INFO", log_dir: Optional[str] = "logs"):
    """
    Setup loguru with a console sink and, optionally, a daily file sink

    Args:
        name: Logger name, used in the log file name
        level: Console level (DEBUG, INFO, WARNING, ERROR)
        log_dir: Directory to save log files; None disables file logging

    Returns:
        The configured loguru logger, bound to `name`
    """
    level = level.upper()
    logger.remove()
    logger.configure(extra={"name": name})

    # Console sink on stderr so reports on stdout stay machine-readable
    logger.add(sys.stderr, level=level, format=CONSOLE_FORMAT)

    if log_dir:
        Path(log_dir).mkdir(parents=True, exist_ok=True)
        timestamp = datetime.now().strftime("%Y%m%d")
        log_file = Path(log_dir) / f"{name}_{timestamp}.log"
        # Always save detailed logs to file
        logger.add(str(log_file), level="DEBUG", format=FILE_FORMAT, encoding="utf-8")

    return logger.bind(name=name)
