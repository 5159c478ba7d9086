"""
Progress Stage

Base class for one tracked phase of a command (catalog build, verification
suites, table rendering) and its status enumeration.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from threading import RLock
from typing import Any, Callable, Dict, List, Optional

logger = logging.getLogger(__name__)

StageCallback = Callable[[str, "StageProgress"], None]


class StageStatus(Enum):
    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"
    SKIPPED = "skipped"


FINISHED = (StageStatus.COMPLETED, StageStatus.FAILED, StageStatus.SKIPPED)


@dataclass
class StageProgress:
    """Snapshot of a stage.

    current: Units completed (point counts built, suites run, tables drawn).
    total: Units expected, when known.
    details: Free-form values for renderers, never used in progress math.
    """
    current: int = 0
    total: Optional[int] = None
    status: StageStatus = StageStatus.PENDING
    message: str = ""
    details: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None


class ProgressStage:
    """
    Thread-safe progress state with change callbacks.

    Callbacks receive (stage_name, snapshot) and run outside the lock.
    """

    def __init__(self, name: str, description: str = "") -> None:
        self.name = name
        self.description = description
        self._lock = RLock()
        self._state = StageProgress()
        self._callbacks: List[StageCallback] = []

    @property
    def progress(self) -> StageProgress:
        with self._lock:
            return replace(self._state, details=dict(self._state.details))

    def add_callback(self, callback: StageCallback) -> None:
        with self._lock:
            if callback not in self._callbacks:
                self._callbacks.append(callback)

    def remove_callback(self, callback: StageCallback) -> None:
        with self._lock:
            if callback in self._callbacks:
                self._callbacks.remove(callback)

    def _apply(self, details: Optional[Dict[str, Any]] = None, **changes: Any) -> bool:
        """Set fields and merge details under the lock, then notify. False if finished."""
        with self._lock:
            if changes.get('status') in FINISHED and self._state.status in FINISHED:
                return False
            for name, value in changes.items():
                setattr(self._state, name, value)
            if details:
                self._state.details.update(details)
            callbacks = list(self._callbacks)
            snapshot = replace(self._state, details=dict(self._state.details))
        for callback in callbacks:
            try:
                callback(self.name, snapshot)
            except Exception as e:
                logger.warning(f"Progress callback failed for {self.name}: {e}", exc_info=True)
        return True

    def update_progress(
        self,
        current: Optional[int] = None,
        total: Optional[int] = None,
        message: str = "",
        details: Optional[Dict[str, Any]] = None,
        error: Optional[str] = None,
    ) -> None:
        changes: Dict[str, Any] = {
            name: value
            for name, value in (('current', current), ('total', total), ('error', error))
            if value is not None
        }
        if message:
            changes['message'] = message
        self._apply(details, **changes)

    def start(self, total: Optional[int] = None, message: str = "") -> None:
        changes: Dict[str, Any] = {'status': StageStatus.RUNNING, 'current': 0, 'error': None}
        if total is not None:
            changes['total'] = total
        if message:
            changes['message'] = message
        self._apply(**changes)

    def _finish(self, status: StageStatus, message: str, error: Optional[str] = None) -> None:
        changes: Dict[str, Any] = {'status': status}
        if message:
            changes['message'] = message
        if error is not None:
            changes['error'] = error
        if status == StageStatus.COMPLETED:
            with self._lock:
                total = self._state.total
            if total is not None:
                changes['current'] = total
        self._apply(**changes)

    def complete(self, message: str = "") -> None:
        self._finish(StageStatus.COMPLETED, message)

    def fail(self, error: str, message: str = "") -> None:
        self._finish(StageStatus.FAILED, message, error)

    def skip(self, message: str = "") -> None:
        self._finish(StageStatus.SKIPPED, message)

    def get_display_info(self) -> Dict[str, Any]:
        snapshot = self.progress
        info = {'name': self.name, 'description': self.description}
        info.update(
            status=snapshot.status.value,
            current=snapshot.current,
            total=snapshot.total,
            message=snapshot.message,
            error=snapshot.error,
            details=snapshot.details,
        )
        return info

    def __str__(self) -> str:
        snapshot = self.progress
        return f"{self.name} [{snapshot.status.value}] {snapshot.message}"
