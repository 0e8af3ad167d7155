from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Optional

PASS = 'pass'
FAIL = 'fail'
SKIPPED = 'skipped'


@dataclass
class CheckResult:
    """Outcome of one instantiation (graph, s, edge/vertex) of one named check."""
    check_id: str
    graph_id: str
    params: Dict[str, Any] = field(default_factory=dict)
    status: str = PASS
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    witness: Optional[Dict[str, Any]] = None
    reason: Optional[str] = None

    def __post_init__(self):
        assert self.status in (PASS, FAIL, SKIPPED), f"unknown status {self.status}"
        assert self.status != FAIL or self.witness, f"{self.check_id} on {self.graph_id}: a failure needs a witness"
        assert self.status != SKIPPED or self.reason, f"{self.check_id} on {self.graph_id}: a skip needs a reason"

    @property
    def sort_key(self):
        return self.graph_id, self.check_id, sorted((k, str(v)) for k, v in self.params.items())

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "CheckResult":
        return cls(**d)
