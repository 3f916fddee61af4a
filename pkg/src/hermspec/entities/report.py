"""
Analysis report entity.

Reports are plain dictionaries of JSON-compatible values (rationals as
strings) so that rendering is deterministic and a rendered report parses
back into the same structure.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List

SCHEMA_VERSION = 1

STATUS_OK = 'ok'
STATUS_NOT_CONVERGED = 'not_converged'

EXIT_NOT_CONVERGED = 3


@dataclass
class AnalysisReport:
    """Result of one command."""

    command: str
    input: Dict[str, Any]
    results: Dict[str, Any]
    warnings: List[str] = field(default_factory=list)
    exact: Dict[str, bool] = field(default_factory=dict)
    status: str = STATUS_OK
    schema_version: int = SCHEMA_VERSION

    @property
    def exit_code(self) -> int:
        return EXIT_NOT_CONVERGED if self.status == STATUS_NOT_CONVERGED else 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'schema_version': self.schema_version,
            'command': self.command,
            'status': self.status,
            'input': self.input,
            'results': self.results,
            'warnings': list(self.warnings),
            'exact': dict(self.exact),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'AnalysisReport':
        return cls(
            command=data['command'],
            input=data.get('input', {}),
            results=data.get('results', {}),
            warnings=list(data.get('warnings', [])),
            exact={k: bool(v) for k, v in data.get('exact', {}).items()},
            status=data.get('status', STATUS_OK),
            schema_version=int(data.get('schema_version', SCHEMA_VERSION)),
        )
