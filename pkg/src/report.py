"""
Check Reports

Data classes collecting the outcome of identity and inequality checks.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check."""
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'passed': self.passed, 'detail': self.detail}


@dataclass
class CheckReport:
    """Results of a family of checks, in the order they ran."""
    title: str
    results: List[CheckResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> bool:
        """Record one check and return its outcome."""
        self.results.append(CheckResult(name, bool(passed), detail))
        return bool(passed)

    def note(self, message: str) -> None:
        self.notes.append(message)

    def extend(self, other: "CheckReport") -> None:
        """Append the results and notes of another report."""
        self.results.extend(other.results)
        self.notes.extend(other.notes)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]

    def names(self) -> Iterable[str]:
        return (result.name for result in self.results)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output."""
        return {
            'title': self.title,
            'passed': self.passed,
            'total': len(self.results),
            'failed': len(self.failures),
            'results': [result.to_dict() for result in self.results],
            'notes': list(self.notes),
        }
