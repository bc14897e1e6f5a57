"""Machine-readable check reports shared by every verification campaign."""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass
class CheckReport:
    check: str
    n: int
    status: str  # "pass" | "fail"
    residual_terms: int
    elapsed_ms: int
    detail: str | None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> str:
        # fixed key order so identical runs emit byte-identical lines
        payload = {
            "check": self.check,
            "n": self.n,
            "status": self.status,
            "residual_terms": self.residual_terms,
            "elapsed_ms": self.elapsed_ms,
            "detail": self.detail,
        }
        return json.dumps(payload, separators=(",", ":"))

    def text_line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        line = f"[{tag}] {self.check} n={self.n} residual_terms={self.residual_terms} ({self.elapsed_ms} ms)"
        if not self.ok and self.detail:
            line += f"\n    {self.detail}"
        return line


def passed(check: str, n: int, elapsed_ms: int) -> CheckReport:
    return CheckReport(check, n, "pass", 0, elapsed_ms, None)


def failed(check: str, n: int, residual_terms: int, elapsed_ms: int, detail: str | None) -> CheckReport:
    return CheckReport(check, n, "fail", residual_terms, elapsed_ms, detail)
