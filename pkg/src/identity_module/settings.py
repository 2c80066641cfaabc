##################################################
# Module F - Runtime Settings
# Python version: 3.13.x (project standard)
#
# Description:
# Reads SCHURLAB_THREADS and SCHURLAB_LOG_LEVEL from the environment
# (a local .env is loaded first when python-dotenv is available).
#
# Functions:
# - load_settings(env=None)
#
# Returns:
# Settings (frozen dataclass)
#
# Requirements:
# - pip install python-dotenv
##################################################

import logging
import os
from dataclasses import dataclass

# Load environment variables from a local .env file if present
try:
    from dotenv import load_dotenv
    load_dotenv()
except Exception:
    pass

logger = logging.getLogger(__name__)

DEFAULT_THREADS = 1
DEFAULT_LOG_LEVEL = "WARNING"


@dataclass(frozen=True)
class Settings:
    threads: int = DEFAULT_THREADS
    log_level: str = DEFAULT_LOG_LEVEL


def _parse_threads(raw):
    if raw is None or raw == "":
        return DEFAULT_THREADS
    try:
        value = int(raw)
    except ValueError:
        logger.warning("SCHURLAB_THREADS=%r is not an integer, using %d", raw, DEFAULT_THREADS)
        return DEFAULT_THREADS
    if value < 1:
        logger.warning("SCHURLAB_THREADS=%d is not positive, using %d", value, DEFAULT_THREADS)
        return DEFAULT_THREADS
    return value


def load_settings(env=None):
    # env defaults to the process environment; tests pass a plain dict
    env = os.environ if env is None else env

    threads = _parse_threads(env.get("SCHURLAB_THREADS"))
    level = (env.get("SCHURLAB_LOG_LEVEL") or DEFAULT_LOG_LEVEL).upper()
    if level not in logging.getLevelNamesMapping():
        logger.warning("unknown SCHURLAB_LOG_LEVEL=%r, using %s", level, DEFAULT_LOG_LEVEL)
        level = DEFAULT_LOG_LEVEL

    return Settings(threads=threads, log_level=level)


##################################################
# Simple test block
##################################################

if __name__ == "__main__":
    print(load_settings())
    print(load_settings({"SCHURLAB_THREADS": "4", "SCHURLAB_LOG_LEVEL": "debug"}))
