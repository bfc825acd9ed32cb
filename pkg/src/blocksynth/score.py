"""Score events and the line-oriented score text format.

Lines: "i INSTR START DUR [P4 ...]" schedules a note (negative DUR means
held until released), "e [TIME]" ends the performance, blank lines and
";" comments are ignored.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ScoreError
from .orc import Diagnostic

__all__ = ["EventKind", "ScoreEvent", "parse_score"]


class EventKind(enum.Enum):
    NOTE = "note"
    END = "end"
    RELEASE = "release"


@dataclass(frozen=True)
class ScoreEvent:
    """A scheduled event. Start times are offsets from the engine time at
    which the event is submitted; p-fields run from p4 onward."""

    kind: EventKind
    instr: int = 0
    start: float = 0.0
    dur: float = 0.0
    pfields: tuple = ()
    key: int | None = None  # MIDI key for held-note release matching

    @staticmethod
    def note(instr: int, start: float, dur: float, *pfields: float,
             key: int | None = None) -> "ScoreEvent":
        return ScoreEvent(EventKind.NOTE, instr, start, dur,
                          tuple(float(p) for p in pfields), key)

    @staticmethod
    def end(time: float = 0.0) -> "ScoreEvent":
        return ScoreEvent(EventKind.END, start=time)

    @staticmethod
    def release(instr: int, key: int | None = None) -> "ScoreEvent":
        return ScoreEvent(EventKind.RELEASE, instr=instr, key=key)


def _float_field(text: str, lineno: int, what: str, diags: list) -> float | None:
    try:
        return float(text)
    except ValueError:
        diags.append(Diagnostic(lineno, 1, f"{what} is not a number: '{text}'"))
        return None


def parse_score(text: str) -> list[ScoreEvent]:
    """Parse score text into events, in line order.

    Raises ScoreError with per-line diagnostics on any malformed line;
    nothing is returned partially.
    """
    events: list[ScoreEvent] = []
    diags: list[Diagnostic] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(";", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        op = fields[0]
        if op == "i":
            if len(fields) < 4:
                diags.append(Diagnostic(lineno, 1, "note line needs INSTR START DUR"))
                continue
            if not fields[1].isdigit() or int(fields[1]) < 1:
                diags.append(
                    Diagnostic(lineno, 1, f"instrument must be a positive integer: '{fields[1]}'")
                )
                continue
            instr = int(fields[1])
            start = _float_field(fields[2], lineno, "start", diags)
            dur = _float_field(fields[3], lineno, "duration", diags)
            pfields = []
            for f in fields[4:]:
                v = _float_field(f, lineno, "p-field", diags)
                if v is not None:
                    pfields.append(v)
            if start is None or dur is None:
                continue
            if start < 0:
                diags.append(Diagnostic(lineno, 1, "start must be >= 0"))
                continue
            if dur == 0:
                diags.append(Diagnostic(lineno, 1, "duration must be nonzero (negative = held)"))
                continue
            events.append(ScoreEvent(EventKind.NOTE, instr, start, dur, tuple(pfields)))
        elif op == "e":
            time = 0.0
            if len(fields) > 2:
                diags.append(Diagnostic(lineno, 1, "end line takes at most one time"))
                continue
            if len(fields) == 2:
                t = _float_field(fields[1], lineno, "end time", diags)
                if t is None:
                    continue
                if t < 0:
                    diags.append(Diagnostic(lineno, 1, "end time must be >= 0"))
                    continue
                time = t
            events.append(ScoreEvent(EventKind.END, start=time))
        else:
            diags.append(Diagnostic(lineno, 1, f"unknown score statement '{op}'"))
    if diags:
        raise ScoreError(diags)
    return events
