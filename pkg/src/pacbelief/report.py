"""Pass/fail bookkeeping for property checks, with JSON-lines output."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable

MAX_COUNTEREXAMPLES = 5


@dataclass
class Verdict:
    checked: int = 0
    failed: int = 0
    skipped: int = 0
    counterexamples: list[dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failed == 0


class Report:
    """Ordered map from property name to :class:`Verdict`."""

    def __init__(self, names: Iterable[str] = ()):
        self.verdicts: dict[str, Verdict] = {n: Verdict() for n in names}

    def __getitem__(self, name: str) -> Verdict:
        return self.verdicts[name]

    def __contains__(self, name: str) -> bool:
        return name in self.verdicts

    def __iter__(self):
        return iter(self.verdicts)

    def check(self, name: str, ok: bool, **context: Any) -> bool:
        v = self.verdicts.setdefault(name, Verdict())
        v.checked += 1
        if not ok:
            v.failed += 1
            if len(v.counterexamples) < MAX_COUNTEREXAMPLES:
                v.counterexamples.append({k: _plain(x) for k, x in context.items()})
        return ok

    def skip(self, name: str, count: int = 1) -> None:
        self.verdicts.setdefault(name, Verdict()).skipped += count

    def merge(self, other: Report) -> Report:
        for name, theirs in other.verdicts.items():
            mine = self.verdicts.setdefault(name, Verdict())
            mine.checked += theirs.checked
            mine.failed += theirs.failed
            mine.skipped += theirs.skipped
            room = MAX_COUNTEREXAMPLES - len(mine.counterexamples)
            mine.counterexamples.extend(theirs.counterexamples[:max(room, 0)])
        return self

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts.values())

    @property
    def failures(self) -> list[str]:
        return [n for n, v in self.verdicts.items() if not v.passed]

    def records(self) -> list[dict[str, Any]]:
        return [
            {
                "postulate": name,
                "status": "pass" if v.passed else "fail",
                "checked": v.checked,
                "failed": v.failed,
                "skipped": v.skipped,
                "counterexamples": v.counterexamples,
            }
            for name, v in self.verdicts.items()
        ]

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in self.records())

    def table(self) -> str:
        width = max([len(n) for n in self.verdicts] + [9])
        lines = [f"{'postulate':<{width}}  status  checked  failed  skipped"]
        for name, v in self.verdicts.items():
            status = "pass" if v.passed else "FAIL"
            lines.append(f"{name:<{width}}  {status:<6}  {v.checked:>7}  {v.failed:>6}  {v.skipped:>7}")
        return "\n".join(lines)


def _plain(x: Any) -> Any:
    # formulas and other objects are reported as text
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _plain(y) for k, y in x.items()}
    return str(x)
