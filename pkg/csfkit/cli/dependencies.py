"""Shared state for command handlers."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from csfkit.config.constants import EXIT_OK
from csfkit.config.settings import Config
from csfkit.core.service_container import ServiceContainer


@dataclass
class CommandResult:
    """Output of one command.

    Attributes:
        lines: Text output, one entry per line
        data: Payload of the JSON envelope
        exit_code: Process exit code
        meta: Optional JSON envelope metadata
    """
    lines: List[str]
    data: Any
    exit_code: int = EXIT_OK
    meta: Optional[Dict[str, Any]] = None

    def render_text(self) -> str:
        return "".join(line + "\n" for line in self.lines)


class CliContext:
    """Configuration plus a lazily started service container."""

    def __init__(self, config: Config):
        self.config = config
        self._container: Optional[ServiceContainer] = None

    @property
    def container(self) -> ServiceContainer:
        if self._container is None:
            self._container = ServiceContainer(self.config)
            self._container.initialize()
        return self._container

    def close(self) -> None:
        if self._container is not None:
            self._container.cleanup()
            self._container = None
