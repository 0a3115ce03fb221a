"""Machine-readable check reports shared by the verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass
class CheckResult:
    check: str
    paper_ref: str
    params: dict
    status: str  # "pass" | "fail"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "paper_ref": self.paper_ref,
            "params": self.params,
            "status": self.status,
            "detail": self.detail,
        }


def result(check: str, ref: str, params: dict, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(check, ref, params, "pass" if ok else "fail", detail)


def render_json(results: list[CheckResult]) -> str:
    entries = sorted((r.to_dict() for r in results), key=lambda d: (d["check"], json.dumps(d["params"], sort_keys=True)))
    return json.dumps(entries, indent=2, sort_keys=True)


def render_text(results: list[CheckResult]) -> str:
    lines = []
    for r in sorted(results, key=lambda r: (r.check, json.dumps(r.params, sort_keys=True))):
        mark = "PASS" if r.ok else "FAIL"
        extra = f"  -- {r.detail}" if r.detail and not r.ok else ""
        lines.append(f"[{mark}] {r.check}{extra}")
    return "\n".join(lines)


def all_ok(results: list[CheckResult]) -> bool:
    return all(r.ok for r in results)
