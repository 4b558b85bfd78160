"""Pass/fail records returned by every verification routine."""
from dataclasses import dataclass, field

from .scalar import to_json


def jsonable(value):
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if value is None or isinstance(value, (str, bool, int, float)):
        return value
    if hasattr(value, "to_json"):
        return value.to_json()
    return to_json(value)


@dataclass
class CheckReport:
    name: str
    passed: bool
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def first_failure(self):
        return self.failures[0] if self.failures else None

    def to_json(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "failures": jsonable(self.failures),
            "details": jsonable(self.details),
        }
