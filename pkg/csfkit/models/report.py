"""Verification run data models."""
import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from csfkit.config.constants import STATUS_PASS, STATUS_FAIL


@dataclass
class RunManifest:
    """Identity of a verification run, stored next to its report.

    Attributes:
        command: Verification sub-command name (e.g. 'theorem1')
        params: Parameter map (q, max_order, bounds, seed, ...)
        version: Tool version that produced the report
        outcome: 'PASS' or 'FAIL' once the run finished, otherwise None
    """
    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    version: str = ""
    outcome: Optional[str] = None

    def cache_key(self) -> str:
        """sha256 over command, params and version; the outcome is not part of the key."""
        identity = json.dumps(
            {"command": self.command, "params": self.params, "version": self.version},
            sort_keys=True,
            separators=(",", ":"),
        )
        return hashlib.sha256(identity.encode("utf-8")).hexdigest()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "params": dict(sorted(self.params.items())),
            "version": self.version,
            "outcome": self.outcome,
        }

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "RunManifest":
        return cls(
            command=payload["command"],
            params=dict(payload.get("params") or {}),
            version=payload.get("version", ""),
            outcome=payload.get("outcome"),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RunManifest":
        return cls.from_dict(json.loads(text))


@dataclass
class VerificationReport:
    """Deterministic outcome of one verification command.

    Attributes:
        command: Verification sub-command name
        params: Parameters, in the order they are printed in the summary line
        lines: Per-order (or per-check) result lines
        violations: Counterexample certificates, empty on PASS
    """
    command: str
    params: Dict[str, Any]
    lines: List[str] = field(default_factory=list)
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def status(self) -> str:
        return STATUS_PASS if self.passed else STATUS_FAIL

    def summary_line(self) -> str:
        rendered = " ".join(f"{name}={value}" for name, value in self.params.items())
        return f"{self.command} {rendered} {self.status}".replace("  ", " ")

    def render(self) -> str:
        """Full text report, newline terminated."""
        out = list(self.lines)
        out.extend(f"violation: {v}" for v in self.violations)
        out.append(self.summary_line())
        return "\n".join(out) + "\n"


@dataclass
class RunResult:
    """A finished (or cache-served) verification run.

    Attributes:
        manifest: Manifest with the outcome filled in
        text: Rendered report, byte-identical between fresh and cached runs
        cached: Whether the report came from the cache
    """
    manifest: RunManifest
    text: str
    cached: bool = False

    @property
    def passed(self) -> bool:
        return self.manifest.outcome == STATUS_PASS
