"""Utility modules for configuration, logging, timing and modular arithmetic."""

from src.utils.config import settings
from src.utils.log import get_logger
from src.utils.timing import timing

__all__ = [
    "settings",
    "get_logger",
    "timing",
]
