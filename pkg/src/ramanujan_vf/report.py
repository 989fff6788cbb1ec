"""Check results and per-prime verification reports."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckResult:
    name: str
    claim: str
    passed: bool
    detail: str = ""
    witness: Any = None
    seconds: float = 0.0
    skipped: bool = False

    @property
    def status(self) -> str:
        if self.skipped:
            return "skipped"
        return "pass" if self.passed else "fail"

    def __bool__(self):
        return self.passed

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "name": self.name,
            "claim": self.claim,
            "status": self.status,
            "detail": self.detail,
            "witness": _jsonable(self.witness),
        }
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out


@dataclass
class VerificationReport:
    p: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "p": self.p,
            "status": "pass" if self.passed else "fail",
            "checks": [c.to_dict(timing) for c in self.checks],
        }


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


class _Clock:
    seconds = 0.0


@contextmanager
def timed():
    clock = _Clock()
    start = time.perf_counter()
    try:
        yield clock
    finally:
        clock.seconds = time.perf_counter() - start
