"""Deterministic virtual-time audio host.

Drives a bridge processor in fixed-size quanta against modeled callback
deadlines: per-callback costs, an optional fixed stall, and (in shared
mode) blocking main-thread tasks that delay callback starts. Late
callbacks are counted as dropouts and their quantum is emitted as
silence. Also renders an engine offline to a float32 WAV file.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from .bridge import EngineProcessor
from .engine import EngineConfig, PerformStatus, create_engine
from .errors import CompileFailedError
from .wavefile import write_wav_float32

__all__ = [
    "SchedulingMode",
    "HostConfig",
    "RunReport",
    "RenderResult",
    "run_sim",
    "inject_main_task",
    "render_offline",
]


class SchedulingMode(enum.Enum):
    DEDICATED = "dedicated"
    SHARED = "shared"


@dataclass(frozen=True)
class HostConfig:
    """Virtual host parameters. main_tasks are (start, duration) pairs in
    seconds that block the callback thread in SHARED mode only."""

    sr: int = 44100
    quantum: int = 128
    mode: SchedulingMode = SchedulingMode.DEDICATED
    main_tasks: tuple = ()
    per_callback_stall: float = 0.0

    def validate(self) -> None:
        if self.quantum < 1:
            raise ValueError(f"quantum must be >= 1, got {self.quantum}")
        if self.sr < 1:
            raise ValueError(f"sr must be >= 1, got {self.sr}")
        if any(d < 0 for _, d in self.main_tasks):
            raise ValueError("task durations must be >= 0")
        if self.per_callback_stall < 0:
            raise ValueError("per_callback_stall must be >= 0")


def inject_main_task(config: HostConfig, start: float, duration: float) -> HostConfig:
    """Return a copy of config with one more blocking main-thread task."""
    if duration < 0:
        raise ValueError("task duration must be >= 0")
    tasks = config.main_tasks + ((float(start), float(duration)),)
    return replace(config, main_tasks=tasks)


@dataclass(frozen=True)
class RunReport:
    """Outcome of one simulated run. rendered is float32, shaped
    (channels, frames); dropped quanta are silence."""

    callbacks_total: int
    dropouts: int
    rendered: np.ndarray
    worst_lateness: float
    dropped_indices: tuple = ()


def run_sim(config: HostConfig, processor: EngineProcessor, duration: float,
            cost_model: Callable[[int], float] | None = None) -> RunReport:
    """Run the processor under the virtual host for `duration` seconds.

    Callback k is released at k*quantum/sr and must complete by
    (k+1)*quantum/sr. Its cost is cost_model(k) + per_callback_stall; the
    callback thread is serial, and in SHARED mode main tasks occupy it
    first-come-first-served. The engine always advances; a late callback
    only silences its own quantum in the rendered stream.
    """
    config.validate()
    if duration <= 0:
        raise ValueError("duration must be > 0")
    sr = config.sr
    quantum = config.quantum
    period = quantum / sr
    total = math.ceil(duration * sr / quantum)
    engine_cfg = processor.engine.config
    nchnls = engine_cfg.nchnls
    nchnls_i = engine_cfg.nchnls_i
    rendered = np.zeros((nchnls, total * quantum), dtype=np.float32)
    silent_in = [np.zeros(quantum, dtype=np.float32) for _ in range(nchnls_i)]
    out_bufs = [np.zeros(quantum, dtype=np.float32) for _ in range(nchnls)]

    shared = config.mode is SchedulingMode.SHARED
    tasks = sorted(config.main_tasks) if shared else []
    task_i = 0
    cursor = 0.0  # next instant the callback thread is free
    dropouts = 0
    dropped: list[int] = []
    worst = 0.0
    for k in range(total):
        release = k * period
        while task_i < len(tasks) and tasks[task_i][0] <= release:
            t_start, t_dur = tasks[task_i]
            cursor = max(cursor, t_start) + t_dur
            task_i += 1
        cost = (cost_model(k) if cost_model is not None else 0.0)
        cost += config.per_callback_stall
        start = max(release, cursor)
        finish = start + cost
        cursor = finish
        for buf in out_bufs:
            buf[:] = 0.0
        processor.process(silent_in, out_bufs)
        deadline = release + period
        if finish > deadline:
            dropouts += 1
            dropped.append(k)
            worst = max(worst, finish - deadline)
        else:
            for ch in range(nchnls):
                rendered[ch, k * quantum:(k + 1) * quantum] = out_bufs[ch]
    return RunReport(total, dropouts, rendered, worst, tuple(dropped))


@dataclass(frozen=True)
class RenderResult:
    """Offline render output: the WAV path (if written), plus the engine
    scale float64 stream and the scaled float32 stream actually written,
    both shaped (frames, channels)."""

    path: str | None
    frames: int
    engine_samples: np.ndarray
    scaled_samples: np.ndarray


def render_offline(orc: str, sco: str, config: EngineConfig, duration: float,
                   out_path: str | None = None) -> RenderResult:
    """Render orc+sco for `duration` seconds with no deadlines, writing a
    float32 WAV scaled by 1/zerodbfs. The frame count is rounded up to
    whole ksmps blocks. Like the bridge, frames from the block in which
    the engine finishes onward are silence.
    """
    if duration <= 0:
        raise ValueError("duration must be > 0")
    engine = create_engine(config)
    result = engine.compile_orc(orc)
    if not result.ok:
        raise CompileFailedError(result.diagnostics)
    engine.read_score(sco)
    ksmps = config.ksmps
    nchnls = config.nchnls
    blocks = math.ceil(duration * config.sr / ksmps)
    engine_samples = np.zeros((blocks * ksmps, nchnls), dtype=np.float64)
    for b in range(blocks):
        status = engine.perform_block()
        if status is not PerformStatus.CONTINUE:
            break
        block = np.asarray(engine.spout, dtype=np.float64).reshape(ksmps, nchnls)
        engine_samples[b * ksmps:(b + 1) * ksmps] = block
    scaled = (engine_samples / config.zerodbfs).astype(np.float32)
    if out_path is not None:
        write_wav_float32(out_path, scaled, config.sr)
    return RenderResult(out_path, blocks * ksmps, engine_samples, scaled)
