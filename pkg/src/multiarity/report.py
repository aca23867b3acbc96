"""Law reports and the shared instance runner.

A law is an instance generator plus an evaluator. The generator is written
against a ``pick`` function: given the options at each choice point it
returns either all of them (exhaustive mode) or one random option (sampling
mode), so one generator serves both. The evaluator maps a witness dict to
``(lhs, rhs)`` and may raise ``CoverageError`` when an entry is absent.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .errors import CoverageError

MAX_STORED = 25


@dataclass
class CheckConfig:
    max_instances: int = 20_000
    seed: int = 0
    threads: int = field(default_factory=lambda: int(os.environ.get("MULTIARITY_THREADS", "1") or 1))

    def rng(self, salt: str = "") -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


DEFAULT = CheckConfig()


@dataclass
class Entry:
    law: str
    witness: dict
    detail: str = ""

    def to_json(self) -> dict:
        return {"law": self.law, "witness": self.witness, "detail": self.detail}


@dataclass
class LawStats:
    checked: int = 0
    violations: int = 0
    skipped: int = 0
    gaps: int = 0
    capped: bool = False

    def to_json(self) -> dict:
        return {"checked": self.checked, "violations": self.violations, "skipped": self.skipped,
                "gaps": self.gaps, "capped": self.capped}


class Report:
    def __init__(self, subject: str = ""):
        self.subject = subject
        self.violations: list[Entry] = []
        self.gaps: list[Entry] = []
        self.stats: dict[str, LawStats] = {}
        self.notes: list[str] = []
        self.data: dict = {}

    def law(self, name: str) -> LawStats:
        return self.stats.setdefault(name, LawStats())

    def fail(self, law: str, witness: dict, detail: str = "") -> None:
        st = self.law(law)
        st.violations += 1
        if st.violations <= MAX_STORED:
            self.violations.append(Entry(law, witness, detail))

    def gap(self, law: str, witness: dict, detail: str = "") -> None:
        st = self.law(law)
        st.gaps += 1
        if st.gaps <= MAX_STORED:
            self.gaps.append(Entry(law, witness, detail))

    def passed(self, law: str) -> None:
        self.law(law).checked += 1

    @property
    def violation_count(self) -> int:
        return sum(s.violations for s in self.stats.values())

    @property
    def gap_count(self) -> int:
        return sum(s.gaps for s in self.stats.values())

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    @property
    def status(self) -> str:
        if self.violation_count:
            return "fail"
        if self.gap_count or any(s.capped for s in self.stats.values()):
            return "coverage-gap"
        return "pass"

    @property
    def exit_code(self) -> int:
        return {"pass": 0, "fail": 1, "coverage-gap": 3}[self.status]

    def merge(self, other: "Report", prefix: str = "") -> "Report":
        for e in other.violations:
            self.violations.append(Entry(prefix + e.law, e.witness, e.detail))
        for e in other.gaps:
            self.gaps.append(Entry(prefix + e.law, e.witness, e.detail))
        for name, st in other.stats.items():
            mine = self.law(prefix + name)
            mine.checked += st.checked
            mine.violations += st.violations
            mine.skipped += st.skipped
            mine.gaps += st.gaps
            mine.capped = mine.capped or st.capped
        self.notes.extend(other.notes)
        return self

    def laws_failed(self) -> set[str]:
        return {name for name, st in self.stats.items() if st.violations}

    def to_json(self) -> dict:
        out = {
            "subject": self.subject,
            "status": self.status,
            "violations": self.violation_count,
            "entries": [e.to_json() for e in self.violations],
            "gaps": [e.to_json() for e in self.gaps],
            "stats": {k: self.stats[k].to_json() for k in sorted(self.stats)},
        }
        if self.notes:
            out["notes"] = list(self.notes)
        if self.data:
            out["data"] = self.data
        return out


def exhaustive(options):
    return options


def sampler(rng: random.Random) -> Callable:
    def pick(options):
        options = list(options)
        return [rng.choice(options)] if options else []
    return pick


def run_law(
    report: Report,
    law: str,
    instances: Callable[[Callable], Iterable[dict]],
    evaluate: Callable[[dict], tuple],
    config: CheckConfig = DEFAULT,
) -> None:
    """Check every instance (or a capped prefix plus a random sample)."""
    st = report.law(law)

    def check(w: dict) -> None:
        try:
            lhs, rhs = evaluate(w)
        except CoverageError as e:
            if e.truncated:
                st.skipped += 1
            else:
                report.gap(law, w, str(e))
            return
        if lhs == rhs:
            st.checked += 1
        else:
            report.fail(law, dict(w, lhs=lhs, rhs=rhs))

    seen = 0
    for w in instances(exhaustive):
        if seen >= config.max_instances:
            st.capped = True
            break
        check(w)
        seen += 1
    if st.capped:
        pick = sampler(config.rng(law))
        for _ in range(config.max_instances // 2):
            for w in _first(instances(pick)):
                check(w)


def _first(it: Iterable) -> Iterator:
    for x in it:
        yield x
        return
