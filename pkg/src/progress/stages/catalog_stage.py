"""
Catalog Build Stage

One unit per point count while the isomorphism classes are enumerated.
"""

from src.progress.stages.base import StageConfig, WorkflowStage

CATALOG_STAGE_CONFIG = StageConfig(
    name="catalog_build",
    description="Enumerating isomorphism classes",
    message_template="k={k} ({current}/{total})",
    details_fields=["k", "classes"],
)


class CatalogBuildStage(WorkflowStage):

    def __init__(self) -> None:
        super().__init__(CATALOG_STAGE_CONFIG)
        self._classes = 1

    def start_build(self, k_max: int) -> None:
        self._classes = 1
        self.start(total=k_max, message=f"Building catalog through k={k_max}")
        if k_max == 0:
            self.complete("Empty poset only")

    def update_level(self, k: int, classes_found: int) -> None:
        """Record that every class on k points is known."""
        self._classes += classes_found
        self.update(current=k, total=self.progress.total, k=k, classes=self._classes)
        if k == self.progress.total:
            self.complete(f"{self._classes} classes")
