"""Block-based synthesis engine: compiles orchestra source, schedules score
events, and renders interleaved audio one ksmps block at a time.

The engine is single-context: all calls on one instance must come from one
execution context at a time. Rendering is deterministic; identical config,
program, event and bus history produce a bit-identical output stream.
"""
from __future__ import annotations

import enum
import math
from bisect import insort
from dataclasses import dataclass, field
from typing import Callable

from . import orc
from .errors import EmptyNameError, InvalidConfigError
from .orc import CompiledInstrument, Diagnostic, InstrumentDef
from .score import EventKind, ScoreEvent, parse_score

__all__ = [
    "EngineConfig",
    "PerformStatus",
    "CompileResult",
    "Engine",
    "create_engine",
]

# Guard against float noise when quantizing event times to frames: an event
# at 0.999999999s with sr=1000 must land on frame 1000, not 999.
_FRAME_EPS = 1e-9


@dataclass(frozen=True)
class EngineConfig:
    """Immutable engine parameters, validated at engine creation."""

    sr: int = 44100
    ksmps: int = 32
    nchnls: int = 2
    nchnls_i: int = 1
    zerodbfs: float = 32768.0

    def validate(self) -> None:
        if self.sr < 1:
            raise InvalidConfigError(f"sr must be >= 1, got {self.sr}")
        if self.ksmps < 1:
            raise InvalidConfigError(f"ksmps must be >= 1, got {self.ksmps}")
        if self.nchnls < 1:
            raise InvalidConfigError(f"nchnls must be >= 1, got {self.nchnls}")
        if self.nchnls_i < 0:
            raise InvalidConfigError(f"nchnls_i must be >= 0, got {self.nchnls_i}")
        if not self.zerodbfs > 0:
            raise InvalidConfigError(f"zerodbfs must be > 0, got {self.zerodbfs}")


class PerformStatus(enum.IntEnum):
    """Result of one perform_block call. 0 continues; nonzero is finished."""

    CONTINUE = 0
    FINISHED = 1

    @property
    def code(self) -> int:
        return int(self)

    @classmethod
    def from_code(cls, code: int) -> "PerformStatus":
        return cls.CONTINUE if code == 0 else cls.FINISHED


@dataclass(frozen=True)
class CompileResult:
    """Outcome of compile_orc: ok plus diagnostics, and the instrument
    numbers merged on success."""

    ok: bool
    diagnostics: tuple = ()
    instruments: tuple = ()


class _ActiveNote:
    __slots__ = ("instr_num", "compiled", "ctx", "frames_done", "blocks_left",
                 "held", "key")

    def __init__(self, compiled: CompiledInstrument, pfields: tuple,
                 blocks_left: int | None, key: int | None):
        self.instr_num = compiled.number
        self.compiled = compiled
        self.ctx = compiled.new_context(pfields)
        self.frames_done = 0
        self.blocks_left = blocks_left  # None = held until released
        self.held = blocks_left is None
        self.key = key


@dataclass(frozen=True, order=True)
class _QueuedEvent:
    block: int
    start: float
    seq: int
    event: ScoreEvent = field(compare=False)


class Engine:
    """One self-contained engine instance.

    spin and spout are the interleaved input/output block buffers
    (frame-major, channel-minor, engine scale). Their lengths are fixed at
    creation; the render path never reallocates them.
    """

    def __init__(self, config: EngineConfig,
                 console: Callable[[str], None] | None = None):
        config.validate()
        self.config = config
        self.console = console
        self.spin: list[float] = [0.0] * (config.ksmps * config.nchnls_i)
        self.spout: list[float] = [0.0] * (config.ksmps * config.nchnls)
        self._spout_zeros = [0.0] * len(self.spout)
        self.block_index = 0
        self.finished = False
        self._instruments: dict[int, InstrumentDef] = {}
        self._compiled: dict[int, CompiledInstrument] = {}
        self._bus: dict[str, float] = {}
        self._pending: list[_QueuedEvent] = []
        self._active: list[_ActiveNote] = []
        self._seq = 0
        self._end_reached = False
        self._clamped = 0
        self._buffer_allocs = 2  # spin + spout
        self._builtins = {
            "sr": float(config.sr),
            "ksmps": float(config.ksmps),
            "nchnls": float(config.nchnls),
            "nchnls_i": float(config.nchnls_i),
            "zerodbfs": float(config.zerodbfs),
        }

    # --- introspection ----------------------------------------------------

    @property
    def program(self) -> dict[int, InstrumentDef]:
        """Currently compiled instruments, by number."""
        return dict(self._instruments)

    @property
    def time_seconds(self) -> float:
        return self.block_index * self.config.ksmps / self.config.sr

    @property
    def clamped_sample_count(self) -> int:
        """Non-finite samples replaced by 0 since creation/reset."""
        return self._clamped

    @property
    def buffer_alloc_count(self) -> int:
        """Debug counter: buffer allocations performed by the engine.
        Constant across perform_block calls in steady state."""
        return self._buffer_allocs

    def _say(self, text: str) -> None:
        if self.console is not None:
            self.console(text)

    # --- compilation --------------------------------------------------------

    def compile_orc(self, source: str) -> CompileResult:
        """Compile orchestra source and merge instruments by number.

        On any diagnostic the program is left unchanged and the failure is
        reported both in the result and on the console callback.
        """
        instruments, diags = orc.parse_orchestra(source)
        cfg = self.config
        if not diags:
            for instr in instruments:
                diags.extend(orc.check_instrument(instr, cfg.nchnls, cfg.nchnls_i))
        if diags:
            for d in diags:
                self._say(f"error: {d}")
            return CompileResult(False, tuple(diags))
        compiled = {
            instr.number: orc.compile_instrument(
                instr, cfg.sr, cfg.nchnls, cfg.nchnls_i, self._builtins)
            for instr in instruments
        }
        for instr in instruments:
            self._instruments[instr.number] = instr
        self._compiled.update(compiled)
        numbers = tuple(sorted({i.number for i in instruments}))
        self._say("compiled instr " + ", ".join(str(n) for n in numbers)
                  if numbers else "compiled empty orchestra")
        return CompileResult(True, (), numbers)

    # --- events -------------------------------------------------------------

    def read_score(self, text: str) -> list[ScoreEvent]:
        """Parse score text and enqueue every event, start times taken
        relative to the current engine time. Raises ScoreError without
        enqueueing anything if any line is malformed."""
        events = parse_score(text)
        for ev in events:
            self._enqueue(ev)
        return events

    def send_event(self, event: ScoreEvent) -> None:
        """Enqueue one event; its start is relative to the current engine
        time and activates at the next block boundary at or after it."""
        self._enqueue(event)

    def _enqueue(self, ev: ScoreEvent) -> None:
        cfg = self.config
        start_abs = self.time_seconds + max(ev.start, 0.0)
        frame = math.floor(start_abs * cfg.sr + _FRAME_EPS)
        block = max(frame // cfg.ksmps, self.block_index)
        self._seq += 1
        insort(self._pending, _QueuedEvent(block, start_abs, self._seq, ev))

    # --- channel bus ----------------------------------------------------------

    def set_channel(self, name: str, value: float) -> None:
        if not name:
            raise EmptyNameError("channel name must be non-empty")
        self._bus[name] = float(value)

    def get_channel(self, name: str) -> float:
        if not name:
            raise EmptyNameError("channel name must be non-empty")
        return self._bus.get(name, 0.0)

    # --- performance ----------------------------------------------------------

    def perform_block(self) -> PerformStatus:
        """Render the next ksmps-frame block into spout, consuming spin.

        Activates and releases notes whose (block-quantized) boundaries fall
        in this block, then sums every active instrument per sample. Returns
        FINISHED once an end event has been reached; after that the call is
        a no-op that keeps returning FINISHED and leaves spout untouched.
        """
        if self.finished:
            return PerformStatus.FINISHED
        self._activate_due(self.block_index)
        spout = self.spout
        spout[:] = self._spout_zeros
        active = self._active
        for note in active:
            self._render_note(note)
        if active:
            write = 0
            for note in active:
                if note.blocks_left is None or note.blocks_left > 0:
                    active[write] = note
                    write += 1
            del active[write:]
        self.block_index += 1
        if self._end_reached:
            self.finished = True
            return PerformStatus.FINISHED
        return PerformStatus.CONTINUE

    def _activate_due(self, block: int) -> None:
        pending = self._pending
        taken = 0
        for q in pending:
            if q.block > block:
                break
            taken += 1
            ev = q.event
            if ev.kind is EventKind.END:
                self._end_reached = True
            elif ev.kind is EventKind.RELEASE:
                self._release(ev.instr, ev.key)
            else:
                self._start_note(q)
        if taken:
            del pending[:taken]

    def _start_note(self, q: _QueuedEvent) -> None:
        ev = q.event
        compiled = self._compiled.get(ev.instr)
        if compiled is None:
            self._say(f"warning: instr {ev.instr} not defined; note dropped")
            return
        cfg = self.config
        if ev.dur < 0:
            blocks = None
        else:
            blocks = max(1, math.ceil(ev.dur * cfg.sr / cfg.ksmps - _FRAME_EPS))
        pfields = (float(ev.instr), q.start, ev.dur) + ev.pfields
        note = _ActiveNote(compiled, pfields, blocks, ev.key)
        note.ctx.spin = self.spin
        self._buffer_allocs += 3  # vals/state/chans in the note context
        self._active.append(note)

    def _release(self, instr: int, key: int | None) -> None:
        # Releases apply at the block boundary: the released note does not
        # render the block in which the release lands.
        for note in self._active:
            if note.held and note.instr_num == instr and note.key == key:
                self._active.remove(note)
                return

    def _render_note(self, note: _ActiveNote) -> None:
        compiled = note.compiled
        ctx = note.ctx
        bus = self._bus
        chans = ctx.chans
        for i, name in enumerate(compiled.chan_names):
            chans[i] = bus.get(name, 0.0)
        cfg = self.config
        nchnls = cfg.nchnls
        nchnls_i = cfg.nchnls_i
        assigns = compiled.assigns
        outs = compiled.outs
        vals = ctx.vals
        spout = self.spout
        isfinite = math.isfinite
        k0 = note.frames_done
        clamped = 0
        for i in range(cfg.ksmps):
            ctx.k = k0 + i
            ctx.in_off = i * nchnls_i
            for slot, fn in assigns:
                vals[slot] = fn(ctx)
            base = i * nchnls
            for ch in range(len(outs)):
                v = outs[ch](ctx)
                if isfinite(v):
                    spout[base + ch] += v
                else:
                    clamped += 1
        note.frames_done += cfg.ksmps
        if note.blocks_left is not None:
            note.blocks_left -= 1
        if clamped:
            self._clamped += clamped

    # --- lifecycle --------------------------------------------------------------

    def reset(self) -> None:
        """Clear program, notes, bus, and buffers; keep the config."""
        self._instruments.clear()
        self._compiled.clear()
        self._bus.clear()
        self._pending.clear()
        self._active.clear()
        for buf in (self.spin, self.spout):
            for i in range(len(buf)):
                buf[i] = 0.0
        self.block_index = 0
        self.finished = False
        self._end_reached = False
        self._clamped = 0
        self._seq = 0


def create_engine(config: EngineConfig,
                  console: Callable[[str], None] | None = None) -> Engine:
    """Create a fresh engine. Raises InvalidConfigError on bad bounds."""
    return Engine(config, console=console)
