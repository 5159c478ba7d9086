"""
Workflow Stage Base

Stage whose message and shown details come from a small config record.
"""

from dataclasses import dataclass
from typing import Any, Dict, List

from src.progress.core.stage import ProgressStage


@dataclass(frozen=True)
class StageConfig:
    name: str
    description: str
    message_template: str
    details_fields: List[str]

    def format_message(self, **kwargs: Any) -> str:
        try:
            return self.message_template.format(**kwargs)
        except (KeyError, IndexError):
            return self.message_template

    def extract_details(self, **kwargs: Any) -> Dict[str, Any]:
        return {name: kwargs[name] for name in self.details_fields if name in kwargs}


class WorkflowStage(ProgressStage):

    def __init__(self, stage_config: StageConfig) -> None:
        super().__init__(stage_config.name, stage_config.description)
        self.config = stage_config

    def update(self, **kwargs: Any) -> None:
        """Progress update whose message is the template filled from kwargs."""
        self.update_progress(
            current=kwargs.get('current'),
            total=kwargs.get('total'),
            message=self.config.format_message(**kwargs),
            details=self.config.extract_details(**kwargs),
            error=kwargs.get('error'),
        )
