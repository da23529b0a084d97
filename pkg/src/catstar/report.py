"""Machine-readable verification reports.

Reports are deterministic for a fixed (instance, seed): checks are sorted
by (suite, check id) and the only nondeterministic fields are the isolated
wall-clock timings, which `stable_form` strips for diffing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


def jsonable(value):
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = list(value)
        if isinstance(value, (set, frozenset)):
            items = sorted(items, key=repr)
        return [jsonable(v) for v in items]
    return repr(value)


@dataclass
class CheckRecord:
    suite: str
    check: str
    anchor: str
    mode: str
    verdict: str          # pass | fail | skipped
    witness: object = None
    wall_ms: float = 0.0

    def to_dict(self):
        return {
            "suite": self.suite,
            "check": self.check,
            "anchor": self.anchor,
            "mode": self.mode,
            "verdict": self.verdict,
            "witness": jsonable(self.witness),
            "wall_ms": round(self.wall_ms, 3),
        }


@dataclass
class Report:
    instance: str
    seed: int
    bounds: dict
    checks: list = field(default_factory=list)

    def sort(self):
        self.checks.sort(key=lambda c: (c.suite, c.check))

    @property
    def summary(self):
        out = {"total": len(self.checks), "passed": 0, "failed": 0,
               "skipped": 0}
        for c in self.checks:
            if c.verdict == "pass":
                out["passed"] += 1
            elif c.verdict == "fail":
                out["failed"] += 1
            else:
                out["skipped"] += 1
        return out

    @property
    def all_passed(self):
        return self.summary["failed"] == 0

    def to_dict(self):
        self.sort()
        return {
            "instance": self.instance,
            "seed": self.seed,
            "bounds": dict(sorted(self.bounds.items())),
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.summary,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def stable_form(self):
        """The report with timing fields removed; equal across reruns."""
        doc = self.to_dict()
        for c in doc["checks"]:
            c.pop("wall_ms")
        return doc

    def to_text(self):
        self.sort()
        lines = [f"instance: {self.instance}   seed: {self.seed}"]
        width = max((len(f"{c.suite}/{c.check}") for c in self.checks),
                    default=0)
        for c in self.checks:
            tag = {"pass": "ok", "fail": "FAIL", "skipped": "skip"}[c.verdict]
            line = f"  {f'{c.suite}/{c.check}':<{width}}  {tag:<4} [{c.mode}]"
            if c.verdict == "fail" and c.witness is not None:
                line += f"  witness: {jsonable(c.witness)}"
            lines.append(line)
        s = self.summary
        lines.append(
            f"{s['passed']}/{s['total']} passed, {s['failed']} failed, "
            f"{s['skipped']} skipped"
        )
        return "\n".join(lines)


def records_from_results(suite, results, anchor_map=None, anchor=""):
    """Convert CheckResult tuples to records; `skipped` mode becomes the
    skipped verdict."""
    out = []
    for r in results:
        if r.mode == "skipped":
            verdict = "skipped"
        else:
            verdict = "pass" if r.ok else "fail"
        a = anchor
        if anchor_map and r.name in anchor_map:
            a = anchor_map[r.name]
        out.append(CheckRecord(
            suite=suite, check=r.name, anchor=a, mode=r.mode,
            verdict=verdict, witness=r.witness if not r.ok else None,
        ))
    return out
