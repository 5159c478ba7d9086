"""
Table Stage

One unit per rendered table (aggregated sums, representing matrices).
"""

from src.progress.stages.base import StageConfig, WorkflowStage

TABLE_STAGE_CONFIG = StageConfig(
    name="tables",
    description="Rendering tables",
    message_template="{table} ({current}/{total})",
    details_fields=["table"],
)


class TableStage(WorkflowStage):

    def __init__(self) -> None:
        super().__init__(TABLE_STAGE_CONFIG)

    def start_tables(self, total: int) -> None:
        self.start(total=total, message="Rendering")

    def table_done(self, index: int, table: str) -> None:
        self.update(current=index, total=self.progress.total, table=table)
