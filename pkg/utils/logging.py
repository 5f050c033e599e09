"""DEA logging utilities."""

import logging
import sys
from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from dealcs.core.sequences import Alphabet
    from dealcs.core.solver import SolveResult
    from dealcs.stages.templates import Template

# Module-level logger
_logger: Optional[logging.Logger] = None


# Valid logging level names (case-insensitive)
_VALID_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}

# Templates longer than this are abbreviated in debug output
_MAX_LOGGED_SYMBOLS = 80


def setup_logging(
    level: str = "INFO",
    log_file: Optional[str] = None,
    log_format: Optional[str] = None,
) -> logging.Logger:
    """
    Set up logging for the DEA toolkit.

    Console output goes to stderr so that reports and CSV on stdout stay clean.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional file path to write logs to
        log_format: Optional custom log format string

    Returns:
        Configured logger instance

    Raises:
        ValueError: If level is not a valid logging level name.
    """
    global _logger

    if not isinstance(level, str) or level.upper() not in _VALID_LEVELS:
        raise ValueError(f"level must be one of {sorted(_VALID_LEVELS)}, got {level!r}")

    if log_format is None:
        log_format = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    logger = logging.getLogger("dealcs")
    logger.setLevel(getattr(logging, level.upper(), logging.INFO))
    logger.propagate = False

    # Clear existing handlers
    logger.handlers = []

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(logging.Formatter(log_format))
    logger.addHandler(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setFormatter(logging.Formatter(log_format))
        logger.addHandler(file_handler)

    _logger = logger
    return logger


def get_logger() -> logging.Logger:
    """
    Get the DEA logger.

    Returns:
        Logger instance (creates default if not initialized)
    """
    global _logger
    if _logger is None:
        _logger = setup_logging()
    return _logger


def log_template(
    template: "Template",
    alphabet: "Alphabet",
    label: str = "template",
    logger: Optional[logging.Logger] = None,
) -> None:
    """
    Log a template body and its origin at DEBUG level.

    Args:
        template: Template to log
        alphabet: Alphabet used to decode the body
        label: Prefix for the log line (e.g. "pool", "extended")
        logger: Optional logger instance (uses default if not provided)
    """
    if logger is None:
        logger = get_logger()
    if not logger.isEnabledFor(logging.DEBUG):
        return

    text = alphabet.decode(template.body)
    if len(text) > _MAX_LOGGED_SYMBOLS:
        text = f"{text[:_MAX_LOGGED_SYMBOLS]}..."
    logger.debug(
        f"{label}: origin={template.origin.describe(alphabet)} len={len(template.body)} {text!r}"
    )


def log_solve_summary(
    result: "SolveResult",
    alphabet: "Alphabet",
    logger: Optional[logging.Logger] = None,
) -> None:
    """
    Log one INFO line summarising a solve.

    Args:
        result: Solver output
        alphabet: Alphabet used to decode the winning origin
        logger: Optional logger instance
    """
    if logger is None:
        logger = get_logger()

    parts = [f"{result.algorithm}:", f"len={result.length}"]
    if result.origin is not None:
        parts.append(f"origin={result.origin.describe(alphabet)}")
    if result.search_range_used is not None:
        parts.append(f"L={result.search_range_used}")
    if result.pool_size:
        parts.append(f"pool={result.pool_size}")
    parts.append(f"elapsed={result.elapsed * 1000:.1f}ms")

    logger.info(" ".join(parts))
