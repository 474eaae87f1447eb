"""
Output envelope shared by every command
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from .. import __version__


@dataclass
class OutputEnvelope:
    """
    Command payload plus the parameters and tolerances that produced it.

    wall_time_ms stays None unless timing was requested, so that repeated
    runs serialize byte-identically.
    """
    command: str
    params: Dict[str, Any]
    results: Any
    tolerances: Dict[str, Any] = field(default_factory=dict)
    version: str = __version__
    wall_time_ms: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': self.command,
            'params': self.params,
            'results': self.results,
            'tolerances': self.tolerances,
            'version': self.version,
            'wall_time_ms': self.wall_time_ms,
        }
