"""Verification reports."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from importlib import resources
from typing import Any

MAX_COUNTEREXAMPLES = 50


@dataclass
class Report:
    claim_id: str
    params: dict
    counterexamples: list = field(default_factory=list)
    total_counterexamples: int = 0
    wall_time_ms: float = 0.0
    artifacts: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.total_counterexamples == 0

    def fail(self, check: str, **info: Any) -> None:
        """Record a counterexample; the stored list is truncated."""
        self.total_counterexamples += 1
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append({"check": check, **info})

    def expect(self, ok: bool, check: str, **info: Any) -> bool:
        if not ok:
            self.fail(check, **info)
        return ok

    @contextmanager
    def timed(self):
        t0 = time.perf_counter()
        try:
            yield self
        finally:
            self.wall_time_ms = round((time.perf_counter() - t0) * 1000, 3)

    def to_json(self) -> dict:
        return {
            "claim": self.claim_id,
            "params": self.params,
            "pass": self.passed,
            "counterexamples": self.counterexamples,
            "total_counterexamples": self.total_counterexamples,
            "wall_time_ms": self.wall_time_ms,
            "artifacts": self.artifacts,
            "details": self.details,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True, default=_jsonable)

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({self.total_counterexamples} counterexamples)"
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.claim_id}({params}): {status} in {self.wall_time_ms:.0f} ms"


def merge(claim_id: str, params: dict, reports: list[Report]) -> Report:
    out = Report(claim_id, params)
    for r in reports:
        for ce in r.counterexamples:
            out.fail(ce["check"], claim=r.claim_id, **{k: v for k, v in ce.items() if k != "check"})
        # counterexamples past the per-report truncation still count
        out.total_counterexamples += r.total_counterexamples - len(r.counterexamples)
        out.wall_time_ms += r.wall_time_ms
        out.artifacts.extend(r.artifacts)
        out.details[r.claim_id] = r.to_json()
    out.wall_time_ms = round(out.wall_time_ms, 3)
    return out


def _jsonable(obj):
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if hasattr(obj, "tolist"):
        return obj.tolist()
    if hasattr(obj, "item"):
        return obj.item()
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def report_schema() -> dict:
    return json.loads(resources.files(__package__).joinpath("report.schema.json").read_text())
