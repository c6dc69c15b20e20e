"""Structured logging via structlog.

Records go to stderr so that command output on stdout stays byte-identical
between runs.  Every record of a CLI invocation carries the bound command;
records from a verification worker also carry the suite and its limits.

Shapes, tableaux and words may be logged as they are: the ``_render_models``
processor turns them into their compact labels (``(2,1)``, ``12/3``, ``4231``).
"""

from __future__ import annotations

import logging
import sys
from typing import Any

import structlog
from pydantic import BaseModel


def setup_logging(json_output: bool = False, level: str = "WARNING") -> None:
    """Route structlog and stdlib records through one stderr handler."""
    chain: list[Any] = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso"),
        _render_models,
    ]
    structlog.configure(
        processors=[*chain, structlog.stdlib.ProcessorFormatter.wrap_for_formatter],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(
        structlog.stdlib.ProcessorFormatter(
            foreign_pre_chain=chain,
            processors=[
                structlog.stdlib.ProcessorFormatter.remove_processors_meta,
                _renderer(json_output),
            ],
        )
    )

    root = logging.getLogger()
    root.handlers.clear()
    root.addHandler(handler)
    root.setLevel(getattr(logging, level.upper(), logging.WARNING))


def _renderer(json_output: bool) -> Any:
    if json_output:
        return structlog.processors.JSONRenderer(sort_keys=True)
    return structlog.dev.ConsoleRenderer(colors=False)


def get_logger(name: str | None = None) -> structlog.stdlib.BoundLogger:
    return structlog.get_logger(name)


def bind_run_context(command: str, **extra: Any) -> None:
    structlog.contextvars.bind_contextvars(command=command, **extra)


def bind_suite_context(suite: str, **limits: Any) -> None:
    """Tag records from a verification worker thread with its suite."""
    structlog.contextvars.bind_contextvars(suite=suite, **limits)


def clear_context() -> None:
    structlog.contextvars.clear_contextvars()


# ---------------------------------------------------------------------------
# Domain values
# ---------------------------------------------------------------------------

def _render_models(_logger: Any, _method: str, event_dict: dict[str, Any]) -> dict[str, Any]:
    """Replace model values (and lists of them) by their string labels."""
    for key, value in event_dict.items():
        if isinstance(value, BaseModel):
            event_dict[key] = str(value)
        elif isinstance(value, (list, tuple)) and any(isinstance(v, BaseModel) for v in value):
            event_dict[key] = [str(v) if isinstance(v, BaseModel) else v for v in value]
    return event_dict
