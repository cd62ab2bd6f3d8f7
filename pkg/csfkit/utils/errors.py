"""Error handling utilities

Provides the exception hierarchy shared by the library and the CLI, and the
CLI-side handler that turns an exception into output plus an exit code.
"""

import json
import logging
import sys
from typing import Any, Dict, Optional, TextIO

from csfkit.cli.responses import error_response
from csfkit.config import error_types
from csfkit.config.constants import (
    EXIT_USAGE,
    ERROR_MSG_BOUND_EXCEEDED,
    ERROR_MSG_INTERNAL,
)

logger = logging.getLogger(__name__)


class AppError(Exception):
    """Base application error"""

    def __init__(
        self,
        message: str,
        exit_code: int = EXIT_USAGE,
        error_type: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ):
        super().__init__(message)
        self.message = message
        self.exit_code = exit_code
        self.error_type = error_type or error_types.INTERNAL_ERROR
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        """Convert error to standard error response format"""
        return error_response(
            error_type=self.error_type,
            message=self.message,
            details=self.details
        )


class ValidationError(AppError):
    """Malformed input"""

    def __init__(
        self,
        message: str,
        details: Optional[Dict[str, Any]] = None,
        error_type: str = error_types.INVALID_REQUEST
    ):
        super().__init__(message, error_type=error_type, details=details)


class NotATreeError(ValidationError):
    """Edge list is disconnected, cyclic or has the wrong edge count"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details, error_type=error_types.NOT_A_TREE)


class BadLabelError(ValidationError):
    """Vertex label outside 0..order-1"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details, error_type=error_types.BAD_LABEL)


class NoTrunkError(AppError):
    """Tree is a path, so it has no trunk and no twigs"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, error_type=error_types.NO_TRUNK, details=details)


class BoundExceededError(AppError):
    """Input is larger than a desk-scale bound"""

    def __init__(self, what: str, size: int, bound: int):
        super().__init__(
            ERROR_MSG_BOUND_EXCEEDED.format(what=what, size=size, bound=bound),
            error_type=error_types.BOUND_EXCEEDED,
            details={"what": what, "size": size, "bound": bound}
        )
        self.size = size
        self.bound = bound


class EdgeNotInTreeError(ValidationError):
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details, error_type=error_types.EDGE_NOT_IN_TREE)


class WeightMismatchError(ValidationError):
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details, error_type=error_types.WEIGHT_MISMATCH)


class CoefficientOverflowError(AppError):
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, error_type=error_types.COEFFICIENT_OVERFLOW, details=details)


class BadExponentError(ValidationError):
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details, error_type=error_types.BAD_EXPONENT)


class IdentityCompositionError(ValidationError):
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details, error_type=error_types.IDENTITY_COMPOSITION)


class HypothesisViolatedError(ValidationError):
    """Arguments do not satisfy the hypotheses of the modular factorization check"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details, error_type=error_types.HYPOTHESIS_VIOLATED)


class BadCompositionError(ValidationError):
    """Composition cannot be realized as a proper q-caterpillar"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details, error_type=error_types.BAD_COMPOSITION)


class NotAProperQCaterpillarError(ValidationError):
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details, error_type=error_types.NOT_A_PROPER_Q_CATERPILLAR)


class CacheError(AppError):
    """Result cache could not be read or written"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, error_type=error_types.CACHE_ERROR, details=details)


def handle_cli_error(
    error: Exception,
    as_json: bool = False,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None
) -> int:
    """
    Render an exception for the command line and return the exit code.

    JSON mode writes the standard error envelope to stdout so scripts can parse
    it; text mode writes a single line to stderr.

    Args:
        error: The exception raised by a command handler
        as_json: Whether --json was given
        stdout: Output stream (defaults to sys.stdout)
        stderr: Diagnostic stream (defaults to sys.stderr)

    Returns:
        Process exit code
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    if isinstance(error, AppError):
        logger.debug(
            "Application error: %s",
            error.message,
            extra={"error_type": error.error_type, "details": error.details},
        )
        content = error.to_dict()
        exit_code = error.exit_code
        text = f"error: {error.error_type}: {error.message}"
    else:
        logger.error("Unexpected error: %s", str(error), exc_info=True)
        content = error_response(
            error_types.INTERNAL_ERROR,
            ERROR_MSG_INTERNAL.format(detail=error)
        )
        exit_code = EXIT_USAGE
        text = f"error: {error_types.INTERNAL_ERROR}: {error}"

    if as_json:
        stdout.write(json.dumps(content, sort_keys=True) + "\n")
    else:
        stderr.write(text + "\n")
    return exit_code
