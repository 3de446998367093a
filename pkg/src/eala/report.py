"""Verification reports and their text/JSON rendering."""

from __future__ import annotations

import json
import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import ReportWriteError

__all__ = ["VerificationReport", "PASS", "FAIL", "NOT_FALSIFIED", "emit_report", "render", "timer"]

PASS = "pass"
FAIL = "fail"
NOT_FALSIFIED = "not-falsified"
STATUSES = (PASS, FAIL, NOT_FALSIFIED)

# JSON key order is part of the output contract
FIELDS = ("check_id", "status", "box", "samples", "seed", "witness", "duration_ms")


@dataclass
class VerificationReport:
    check_id: str
    status: str
    box: int = 0
    samples: int = 0
    seed: int = 0
    witness: Optional[str] = None
    duration_ms: int = 0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == FAIL and self.witness is None:
            raise ValueError(f"failing report {self.check_id} needs a witness")

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in FIELDS}

    def __str__(self) -> str:
        line = (
            f"{self.check_id:<28} {self.status:<14} box={self.box} "
            f"samples={self.samples} seed={self.seed} {self.duration_ms}ms"
        )
        if self.witness is not None:
            line += f" witness={self.witness}"
        return line


@contextmanager
def timer():
    """Yields a one-element list that receives the elapsed milliseconds."""
    out = [0]
    t0 = time.perf_counter()
    try:
        yield out
    finally:
        out[0] = int((time.perf_counter() - t0) * 1000)


def render(reports: Iterable[VerificationReport], fmt: str = "text") -> str:
    reports = list(reports)
    if fmt == "json":
        return json.dumps([r.as_dict() for r in reports], indent=2) if reports else "[]"
    if fmt == "text":
        return "\n".join(str(r) for r in reports)
    raise ValueError(f"unknown format {fmt!r}")


def emit_report(reports: Iterable[VerificationReport], fmt: str = "text", path=None) -> None:
    text = render(reports, fmt) + "\n"
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise ReportWriteError(f"cannot write report to {path}: {exc}") from exc
