import json
from dataclasses import dataclass, field
from typing import List

from ..enums import OutputFormat


@dataclass
class RunResult:
    """Exit status, JSON report and text rendering of one command."""
    status: int
    report: dict
    lines: List[str] = field(default_factory=list)

    @property
    def text(self) -> str:
        return "\n".join(self.lines)

    def render(self, output_format: OutputFormat) -> str:
        if output_format == OutputFormat.JSON:
            return json.dumps(self.report, indent=2, ensure_ascii=False)
        return self.text
