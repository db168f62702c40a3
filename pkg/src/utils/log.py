"""Logger lookup that works inside and outside Prefect runs."""

import logging

from prefect import get_run_logger
from prefect.exceptions import MissingContextError
from prefect.logging import get_logger as get_prefect_logger

LOGGER_NAME = "face_numbers"


def get_logger() -> logging.Logger | logging.LoggerAdapter:
    """Return the active flow/task run logger, or the package logger outside a run."""
    try:
        return get_run_logger()
    except MissingContextError:
        return get_prefect_logger(LOGGER_NAME)
