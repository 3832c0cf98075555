"""
Logging configuration for the degree-8 permutation polynomial classifier.

This module sets up the ``pp8`` logger with both file and stream handlers,
using UTC for log timestamps. Logs are written to a dated file under the
configured logs directory and to stderr, with process and thread information
so that records coming from search workers can be told apart.
"""

import logging
import time
from datetime import datetime
from pathlib import Path

import pytz
from pytz import timezone

from pp8.core.config import settings

# Timezone and paths
TZ: timezone = pytz.UTC
LOGS_DIR: Path = settings.logs_dir
LOGS_DIR.mkdir(parents=True, exist_ok=True)

# Logger setup
logger: logging.Logger = logging.getLogger("pp8")
logger.setLevel(settings.log_level.upper())

log_fmt: str = '%(asctime)s [%(processName)s: %(process)d] [%(threadName)s: %(thread)d] ' \
               '[%(levelname)s] %(name)s: %(message)s'
date_fmt: str = '%Y-%m-%d %H:%M:%S'
formatter: logging.Formatter = logging.Formatter(fmt=log_fmt, datefmt=date_fmt)
formatter.converter = time.gmtime

# Handlers
file_handler: logging.FileHandler = logging.FileHandler(
    LOGS_DIR / f'{datetime.now(TZ).date()}_pp8.log'
)
file_handler.setFormatter(formatter)

stream_handler: logging.StreamHandler = logging.StreamHandler()
stream_handler.setFormatter(formatter)

if not logger.handlers:
    logger.addHandler(file_handler)
    logger.addHandler(stream_handler)
