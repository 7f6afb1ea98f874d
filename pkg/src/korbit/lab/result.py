import hashlib
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

Params = Dict[str, Any]
Witness = Dict[str, Any]


class CheckStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    VACUOUS = "VACUOUS"
    SKIPPED = "SKIPPED"
    UNKNOWN = "UNKNOWN"


def params_digest(params: Params) -> str:
    payload = json.dumps(params, sort_keys=True)
    return hashlib.sha1(payload.encode()).hexdigest()[:12]


def instance_id(group_id: str, params: Params) -> str:
    return f"{group_id}#{params_digest(params)}"


def normalize(value: Any) -> Any:
    """JSON round trip, so tuples and lists compare alike."""
    return json.loads(json.dumps(value))


@dataclass
class CheckResult:
    """One report row: a check evaluated on one (group, parameters) instance."""

    check: str
    instance: str
    group_id: str
    params: Params
    status: CheckStatus
    witness: Witness = field(default_factory=dict)
    millis: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "instance": self.instance,
            "group_id": self.group_id,
            "params": self.params,
            "status": self.status.value,
            "witness": self.witness,
            "millis": self.millis,
        }

    @classmethod
    def from_dict(cls, record: Dict[str, Any]) -> "CheckResult":
        return cls(
            record["check"],
            record["instance"],
            record["group_id"],
            record["params"],
            CheckStatus(record["status"]),
            record.get("witness") or {},
            record.get("millis"),
        )
