"""Verification report cache.

Reports are content-addressed by their run manifest: each run lives in
``<root>/<sha256>/`` as ``manifest.json`` plus ``report.txt``.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional, Protocol

from csfkit.config.constants import (
    CACHE_MANIFEST_FILE,
    CACHE_REPORT_FILE,
    LOG_MSG_CACHE_HIT,
    LOG_MSG_CACHE_WRITE,
)
from csfkit.models.report import RunManifest, RunResult
from csfkit.utils.errors import CacheError


class ReportCacheProtocol(Protocol):
    """Interface for pluggable report caches."""

    def get(self, manifest: RunManifest) -> Optional[RunResult]:
        ...

    def put(self, manifest: RunManifest, report: str) -> None:
        ...


class NullReportCache:
    """No-op cache for library use and tests."""

    def get(self, manifest: RunManifest) -> Optional[RunResult]:
        return None

    def put(self, manifest: RunManifest, report: str) -> None:
        return None


class FileReportCache:
    """Report cache on the local filesystem."""

    def __init__(self, root: str):
        self.root = Path(root)
        self._logger = logging.getLogger(__name__)

    def entry_dir(self, manifest: RunManifest) -> Path:
        return self.root / manifest.cache_key()

    def get(self, manifest: RunManifest) -> Optional[RunResult]:
        """
        Stored run for the manifest, or None on a miss

        A directory whose manifest does not match (other command or params
        under a colliding key, or a half-written entry) counts as a miss.
        """
        entry = self.entry_dir(manifest)
        manifest_path = entry / CACHE_MANIFEST_FILE
        report_path = entry / CACHE_REPORT_FILE
        if not manifest_path.is_file() or not report_path.is_file():
            return None
        try:
            stored = RunManifest.from_json(manifest_path.read_text(encoding="utf-8"))
            report = report_path.read_text(encoding="utf-8")
        except (OSError, ValueError, KeyError) as e:
            self._logger.warning(f"忽略损坏的缓存条目 {entry}: {e}")
            return None
        if stored.cache_key() != manifest.cache_key():
            return None
        self._logger.info(LOG_MSG_CACHE_HIT.format(key=manifest.cache_key()))
        return RunResult(manifest=stored, text=report, cached=True)

    def put(self, manifest: RunManifest, report: str) -> None:
        """
        Write manifest.json and report.txt

        Raises:
            CacheError: The cache directory cannot be written
        """
        entry = self.entry_dir(manifest)
        try:
            entry.mkdir(parents=True, exist_ok=True)
            # report first: an entry is only complete once its manifest exists
            (entry / CACHE_REPORT_FILE).write_text(report, encoding="utf-8")
            (entry / CACHE_MANIFEST_FILE).write_text(manifest.to_json(), encoding="utf-8")
        except OSError as e:
            raise CacheError(
                f"cannot write cache entry {entry}: {e}",
                details={"path": str(entry)}
            ) from e
        self._logger.info(LOG_MSG_CACHE_WRITE.format(key=manifest.cache_key()))
