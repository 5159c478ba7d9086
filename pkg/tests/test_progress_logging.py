import logging

import pytest

from src.catalog import enumerate_catalog
from src.logging import LoggingManager
from src.logging.manager import MAX_BUFFERED_WARNINGS
from src.progress import (
    CatalogBuildStage, ProgressMode, ProgressStage, ProgressTracker, StageStatus, TableStage,
    VerificationStage, create_progress_tracker,
)
from src.progress.config import ProgressConfig, set_config
from src.progress.core.tracker import ProgressRenderer
from src.progress.utils import format_details, stage_title


class RecordingRenderer(ProgressRenderer):

    def __init__(self):
        self.started = self.stopped = False
        self.updates = []

    def start(self):
        self.started = True

    def stop(self):
        self.stopped = True

    def update_stage(self, stage_name, stage_progress):
        self.updates.append((stage_name, stage_progress.status, stage_progress.message))

    def is_available(self):
        return True


@pytest.fixture
def manager(tmp_path, capsys):
    manager = LoggingManager()
    manager.setup(tmp_path / "logs" / "test.log", console_level=logging.WARNING)
    yield manager
    manager.cleanup()


def test_stage_lifecycle():
    stage = ProgressStage("work")
    assert stage.progress.status == StageStatus.PENDING
    stage.start(total=4, message="go")
    stage.update_progress(current=2)
    assert (stage.progress.status, stage.progress.current) == (StageStatus.RUNNING, 2)
    stage.complete("done")
    assert (stage.progress.current, stage.progress.message) == (4, "done")
    stage.fail("too late")
    assert stage.progress.status == StageStatus.COMPLETED
    assert stage.progress.error is None


def test_stage_snapshots_are_copies():
    stage = ProgressStage("work")
    stage.update_progress(details={"k": 1})
    snapshot = stage.progress
    snapshot.details["k"] = 99
    assert stage.progress.details == {"k": 1}


def test_callbacks_receive_snapshots_and_survive_errors():
    stage = ProgressStage("work")
    seen = []

    def broken(name, progress):
        raise RuntimeError("renderer gone")

    stage.add_callback(lambda name, progress: seen.append((name, progress.current)))
    stage.add_callback(broken)
    stage.update_progress(current=3)
    assert seen == [("work", 3)]


def test_catalog_build_stage_counts_classes():
    stage = CatalogBuildStage()
    enumerate_catalog(3, progress_stage=stage)
    progress = stage.progress
    assert progress.status == StageStatus.COMPLETED
    assert progress.message == "9 classes"
    assert progress.details == {"k": 3, "classes": 9}


def test_catalog_build_stage_for_empty_catalog():
    stage = CatalogBuildStage()
    enumerate_catalog(0, progress_stage=stage)
    assert stage.progress.status == StageStatus.COMPLETED


def test_verification_stage_reports_failures():
    stage = VerificationStage()
    stage.start_suites(2)
    stage.begin_suite("closed forms")
    assert stage.progress.message == "closed forms"
    stage.finish_suite("closed forms", 0)
    stage.begin_suite("divisibility")
    stage.finish_suite("divisibility", 2)
    stage.finish()
    progress = stage.progress
    assert progress.status == StageStatus.FAILED
    assert progress.error == "2 failing check(s)"
    assert progress.details == {"suite": "divisibility", "failed": 2}


def test_table_stage_messages():
    stage = TableStage()
    stage.start_tables(2)
    stage.table_done(1, "exponential sums")
    assert stage.progress.message == "exponential sums (1/2)"
    stage.table_done(2, "p(k)")
    stage.complete()
    assert stage.progress.status == StageStatus.COMPLETED


def test_tracker_off_never_touches_logging(manager):
    tracker = ProgressTracker(ProgressMode.OFF, manager)
    renderer = RecordingRenderer()
    tracker.set_renderer(renderer)
    with tracker:
        stage = TableStage()
        tracker.add_stage(stage)
        stage.start_tables(1)
        assert not manager.is_progress_mode_active()
    assert not renderer.started
    assert renderer.updates == []


def test_tracker_auto_is_off_without_terminal(capsys):
    assert not ProgressTracker(ProgressMode.AUTO).enabled


def test_tracker_on_drives_renderer_and_logging(manager):
    tracker = ProgressTracker(ProgressMode.ON, manager)
    renderer = RecordingRenderer()
    tracker.set_renderer(renderer)
    with tracker:
        assert manager.is_progress_mode_active()
        stage = VerificationStage()
        tracker.add_stage(stage)
        stage.start_suites(1)
        stage.finish_suite("published tables", 0)
        stage.finish()
    assert renderer.started and renderer.stopped
    assert not manager.is_progress_mode_active()
    assert renderer.updates[0][0] == "verification"
    assert renderer.updates[-1][1] == StageStatus.COMPLETED
    assert not tracker.has_failures()
    assert tracker.get_summary()["verification"]["status"] == "completed"


def test_create_tracker_falls_back_to_auto():
    assert create_progress_tracker("sometimes").mode == ProgressMode.AUTO
    assert create_progress_tracker("OFF").mode == ProgressMode.OFF


def test_detail_formatting():
    assert format_details("catalog_build", {"classes": 9, "k": 3, "other": 1}) == "k: 3, classes: 9"
    assert format_details("verification", {"suite": "aggregates", "failed": 0}, limit=1) == "suite: aggregates"
    assert stage_title("catalog_build") == "Catalog Build"


def test_console_is_quiet_during_progress(manager, capsys):
    log = logging.getLogger("posetx.test")
    with manager.progress_mode():
        log.info("hidden")
        log.warning("held back")
        assert capsys.readouterr().err == ""
    err = capsys.readouterr().err
    assert "1 warning(s) during progress" in err
    assert "WARNING - held back" in err
    assert "hidden" not in err


def test_progress_mode_is_reference_counted(manager):
    manager.enable_progress_mode()
    manager.enable_progress_mode()
    manager.disable_progress_mode()
    assert manager.is_progress_mode_active()
    manager.disable_progress_mode()
    assert not manager.is_progress_mode_active()
    manager.disable_progress_mode()
    assert not manager.is_progress_mode_active()


def test_buffered_warnings_are_capped(manager, capsys):
    log = logging.getLogger("posetx.test")
    with manager.progress_mode():
        for i in range(MAX_BUFFERED_WARNINGS + 10):
            log.warning(f"warning {i}")
    err = capsys.readouterr().err
    assert f"{MAX_BUFFERED_WARNINGS} warning(s) during progress" in err
    assert "warning 9\n" not in err
    assert f"warning {MAX_BUFFERED_WARNINGS + 9}" in err


def test_errors_surface_during_progress(manager, capsys):
    with manager.progress_mode():
        logging.getLogger("posetx.test").error("catalog file unreadable")
        assert "catalog file unreadable" in capsys.readouterr().err


def test_file_log_keeps_everything(tmp_path):
    manager = LoggingManager()
    path = tmp_path / "logs" / "full.log"
    manager.setup(path, console_level=logging.WARNING)
    try:
        with manager.progress_mode():
            logging.getLogger("posetx.test").debug("detail for the file")
    finally:
        manager.cleanup()
    assert "detail for the file" in path.read_text(encoding="utf-8")


def test_update_interval_throttles_running_updates(manager):
    set_config(ProgressConfig(min_update_interval=3600))
    tracker = ProgressTracker(ProgressMode.ON, manager)
    renderer = RecordingRenderer()
    tracker.set_renderer(renderer)
    with tracker:
        stage = VerificationStage()
        tracker.add_stage(stage)
        stage.start_suites(3)
        for suite in ("census", "aggregates", "matrices"):
            stage.begin_suite(suite)
            stage.finish_suite(suite, 0)
        stage.finish()
    statuses = [status for _, status, _ in renderer.updates]
    assert statuses == [StageStatus.RUNNING, StageStatus.COMPLETED]
