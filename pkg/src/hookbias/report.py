"""Structured pass/fail records for claim checks."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Any

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class VerificationReport:
    claim_id: str
    range: Any
    status: str
    counterexamples: list = field(default_factory=list)
    runtime_ms: int = 0
    reason: str | None = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in (PASS, FAIL, SKIPPED):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == FAIL) != bool(self.counterexamples):
            raise ValueError("status 'fail' iff counterexamples are present")
        if self.status == SKIPPED and not self.reason:
            raise ValueError("a skipped report needs a reason")

    @classmethod
    def from_checks(cls, claim_id, rng, counterexamples, t0: float, details=None, reason=None):
        """Build a report; ``t0`` is a ``time.perf_counter()`` start mark."""
        return cls(
            claim_id=claim_id,
            range=rng,
            status=FAIL if counterexamples else PASS,
            counterexamples=list(counterexamples),
            runtime_ms=int(round((time.perf_counter() - t0) * 1000)),
            reason=reason,
            details=dict(details or {}),
        )

    @classmethod
    def skipped(cls, claim_id, rng, reason):
        return cls(claim_id=claim_id, range=rng, status=SKIPPED, reason=reason)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, include_runtime: bool = True) -> str:
        d = self.to_dict()
        if not include_runtime:
            d.pop("runtime_ms")
        return json.dumps(_jsonable(d), sort_keys=True)

    def summary(self) -> str:
        line = f"[{self.status.upper():7}] {self.claim_id} range={_fmt(self.range)}"
        if self.status == FAIL:
            line += f" counterexamples={len(self.counterexamples)}"
        if self.reason:
            line += f" ({self.reason})"
        return line


def _fmt(rng) -> str:
    if isinstance(rng, (tuple, list)) and len(rng) == 2:
        return f"{rng[0]}..{rng[1]}"
    return str(rng)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    return x
