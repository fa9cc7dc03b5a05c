"""Named pass/fail checks and the report that collects them."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .tensor import Tensor

PASS, FAIL, SKIPPED, INFO = "pass", "fail", "skipped", "informational"


@dataclass
class Check:
    name: str
    anchor: str
    status: str
    witness: dict | None = None
    detail: str = ""
    section: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict:
        d = {"name": self.name, "anchor": self.anchor, "status": self.status}
        if self.section:
            d["section"] = self.section
        if self.witness is not None:
            d["witness"] = self.witness
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    checks: list = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if c.status == FAIL]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def tag(self, section: str) -> "Report":
        """Label every check with the suite section it belongs to."""
        for c in self.checks:
            c.section = section
        return self

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def __iter__(self):
        return iter(self.checks)

    def __len__(self):
        return len(self.checks)

    def to_dict(self) -> dict:
        counts = {s: sum(c.status == s for c in self.checks) for s in (PASS, FAIL, SKIPPED, INFO)}
        return {"passed": self.passed, "counts": counts, "checks": [c.to_dict() for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            where = f"{c.section}: " if c.section else ""
            line = f"[{c.status.upper():>13}] {where}{c.name}  ({c.anchor})"
            if c.detail:
                line += f"  {c.detail}"
            lines.append(line)
            if c.witness:
                lines.append(f"{'':16}witness: {json.dumps(c.witness, ensure_ascii=False)}")
        d = self.to_dict()["counts"]
        lines.append(f"{d[PASS]} passed, {d[FAIL]} failed, {d[SKIPPED]} skipped, {d[INFO]} informational")
        return "\n".join(lines)


def first_difference(lhs: Tensor, rhs: Tensor):
    """Multi-index of the first entry where two equal-shape tensors differ, or None."""
    diff = (lhs - rhs).num
    nz = np.argwhere(diff != 0)
    if len(nz) == 0:
        return None
    return tuple(int(i) for i in nz[0])


def compare(name: str, anchor: str, lhs: Tensor, rhs: Tensor) -> Check:
    """Entrywise equality check with a witness on failure."""
    if lhs.dims != rhs.dims:
        return Check(name, anchor, FAIL, {"shape": [list(lhs.dims), list(rhs.dims)]})
    if lhs == rhs:
        return Check(name, anchor, PASS)
    idx = first_difference(lhs, rhs)
    f = lhs.field
    return Check(name, anchor, FAIL, {
        "index": list(idx),
        "lhs": f.format(lhs[idx]),
        "rhs": f.format(rhs[idx]),
    })


def boolean(name: str, anchor: str, ok: bool, witness: dict | None = None, detail: str = "") -> Check:
    return Check(name, anchor, PASS if ok else FAIL, None if ok else (witness or {}), detail)
