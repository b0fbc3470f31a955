"""Structured logging setup for numerical runs.

This module configures structlog with:
- JSON output in production for machine parsing
- Pretty console output in development for human readability
- Source location on every entry
- Run-scoped context (q, m, suite) via contextvars

Log lines go to stderr so that stdout carries only CLI tables and reports.
"""

import logging
import sys
from typing import Any

import structlog
from structlog.typing import EventDict, Processor

from src.shared.config import settings

if hasattr(logging, "getLevelNamesMapping"):
    _level_names_mapping = logging.getLevelNamesMapping
else:  # Python < 3.11

    def _level_names_mapping() -> dict[str, int]:
        return dict(logging._nameToLevel)


def add_source_location(
    logger: logging.Logger,  # noqa: ARG001  # Required by structlog processor signature
    method_name: str,  # noqa: ARG001  # Required by structlog processor signature
    event_dict: EventDict,
) -> EventDict:
    """Add source code location (file, function, line) to log entries."""
    frame = sys._getframe(6)  # Adjust frame depth to get actual caller
    event_dict["source"] = {
        "file": frame.f_code.co_filename.split("/")[-1],
        "function": frame.f_code.co_name,
        "line": frame.f_lineno,
    }
    return event_dict


def configure_logging(level: str | None = None) -> None:
    """Configure structlog for the entire application.

    Args:
        level: Optional level name overriding ``settings.log_level``.
    """
    shared_processors: list[Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.processors.TimeStamper(fmt="iso", utc=True),
        structlog.processors.add_log_level,
        add_source_location,
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
    ]

    if settings.environment == "development":
        processors = [
            *shared_processors,
            structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty()),
        ]
    else:
        processors = [
            *shared_processors,
            structlog.processors.dict_tracebacks,
            structlog.processors.JSONRenderer(),
        ]

    numeric_level = _level_names_mapping()[level or settings.log_level]

    structlog.configure(
        processors=processors,  # type: ignore[arg-type]  # structlog processor types are complex
        wrapper_class=structlog.make_filtering_bound_logger(numeric_level),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,  # Allow test fixtures to reconfigure logging
    )


def get_logger(name: str | None = None) -> structlog.stdlib.BoundLogger:
    """Get a structlog logger instance.

    Args:
        name: Optional logger name (typically __name__ of the module)

    Returns:
        Configured structlog logger

    Example:
        logger = get_logger(__name__)
        logger.info("hankel_transform_started", nu=0.5, scale=1.0)
    """
    return structlog.get_logger(name)  # type: ignore[no-any-return]  # structlog typing is complex


def bind_context(**kwargs: Any) -> None:
    """Bind context variables that will be included in all subsequent logs.

    Args:
        **kwargs: Key-value pairs to bind to the context

    Example:
        bind_context(q=0.5, m=3, suite="qcore")
        logger.info("check_completed")  # Will include q, m and suite
    """
    structlog.contextvars.bind_contextvars(**kwargs)


def clear_context() -> None:
    """Clear all bound context variables at the end of a run."""
    structlog.contextvars.clear_contextvars()
