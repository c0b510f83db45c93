import logging
import sys

from app.core.config import settings


def configure_logging(level: str = None) -> None:
    """
    Route all log records to stderr so stdout only carries rendered results
    """
    level_name = (level or settings.LOG_LEVEL).upper()
    logging.basicConfig(
        level=getattr(logging, level_name, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True
    )
