"""Point files and verdict JSON.

A point file is UTF-8 text: an optional ``n <count>`` header, then one
point per line as two signed decimal integers separated by whitespace.
Lines starting with ``#`` and blank lines are skipped.
"""
from __future__ import annotations

import json
import re
import sys
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable

from .decider import Verdict
from .geometry import COORD_LIMIT, Point

_INT = re.compile(r"[+-]?[0-9]+\Z")


class PointFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def _int(tok: str, line: int) -> int:
    if not _INT.match(tok):
        raise PointFileError(f"not an integer: {tok!r}", line)
    v = int(tok)
    if not -COORD_LIMIT < v < COORD_LIMIT:
        raise PointFileError(f"coordinate {tok} outside (-2^62, 2^62)", line)
    return v


def parse_points(text: str) -> list[Point]:
    points: list[Point] = []
    seen: set[Point] = set()
    declared = None
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if toks[0] == "n":
            if declared is not None or points:
                raise PointFileError("header must precede all points", no)
            if len(toks) != 2:
                raise PointFileError("header is 'n <count>'", no)
            declared = _int(toks[1], no)
            if declared < 0:
                raise PointFileError("negative count", no)
            continue
        if len(toks) != 2:
            raise PointFileError(f"expected two integers, got {len(toks)} fields", no)
        p = (_int(toks[0], no), _int(toks[1], no))
        if p in seen:
            raise PointFileError(f"duplicate point {p[0]} {p[1]}", no)
        seen.add(p)
        points.append(p)
    if declared is not None and declared != len(points):
        raise PointFileError(f"header declares {declared} points, found {len(points)}")
    return points


def read_points(path: str) -> list[Point]:
    if path == "-":
        return parse_points(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_points(fh.read())
    except (OSError, UnicodeDecodeError) as e:
        raise PointFileError(str(e)) from None


def format_points(points: Iterable, header: bool = False) -> str:
    rows = [f"{int(x)} {int(y)}" for x, y in points]
    if header:
        rows.insert(0, f"n {len(rows)}")
    return "".join(r + "\n" for r in rows)


@dataclass
class VerdictRecord:
    """Flat, JSON-ready view of a verdict. Field order is the wire order."""

    verdict: str
    type: str | None
    k: int | None
    reason: str | None
    witness: list[list[int]]
    detail: dict[str, Any] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)

    @classmethod
    def from_verdict(cls, v: Verdict) -> "VerdictRecord":
        shape = v.shape
        return cls(
            verdict="accept" if v.accepted else "reject",
            type=shape.kind.value if shape else None,
            k=shape.k if shape else None,
            reason=v.reason.value if v.reason else None,
            witness=[list(p) for p in v.witness.points] if v.witness else [],
            detail=dict(v.witness.detail) if v.witness else {},
            timings=dict(v.timings),
        )

    def to_json(self, **kw) -> str:
        return json.dumps(asdict(self), **kw)

    @classmethod
    def from_json(cls, text: str) -> "VerdictRecord":
        return cls(**json.loads(text))
