"""
Verification Stage

One unit per check suite run by the verification driver.
"""

from src.progress.stages.base import StageConfig, WorkflowStage

VERIFICATION_STAGE_CONFIG = StageConfig(
    name="verification",
    description="Running identity checks",
    message_template="{suite}",
    details_fields=["suite", "failed"],
)


class VerificationStage(WorkflowStage):

    def __init__(self) -> None:
        super().__init__(VERIFICATION_STAGE_CONFIG)
        self._done = 0
        self._failed = 0

    def start_suites(self, total: int) -> None:
        self._done = self._failed = 0
        self.start(total=total, message="Starting checks")

    def begin_suite(self, suite: str) -> None:
        self.update(suite=suite, failed=self._failed)

    def finish_suite(self, suite: str, failures: int) -> None:
        self._done += 1
        self._failed += failures
        self.update(current=self._done, suite=suite, failed=self._failed)

    def finish(self) -> None:
        if self._failed:
            self.fail(f"{self._failed} failing check(s)", "Checks finished with failures")
        else:
            self.complete("All checks passed")
