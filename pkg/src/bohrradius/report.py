"""Verification report record shared by the checks in every module."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

DEFAULT_SLACK = 1e-9


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking ``value <= bound``.

    ``margin`` is always ``bound - value``.  Unless ``passed`` is given
    explicitly, the check passes when ``margin >= -slack``.  Sharpness sweeps
    pass their own verdict because their claim is the existence of a
    violation, not the inequality itself.
    """

    claim: str
    value: float
    bound: float
    slack: float = DEFAULT_SLACK
    witness: Optional[dict] = None
    passed: Optional[bool] = None
    margin: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "margin", self.bound - self.value)
        if self.passed is None:
            object.__setattr__(self, "passed", bool(self.margin >= -self.slack))

    def __bool__(self):
        return bool(self.passed)

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "value": self.value,
            "bound": self.bound,
            "margin": self.margin,
            "pass": self.passed,
            "witness": self.witness,
        }


def all_passed(reports) -> bool:
    return all(rep.passed for rep in reports)
