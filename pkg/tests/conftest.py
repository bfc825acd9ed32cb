"""Shared test helpers: block-oracle streaming and message-driven setup."""
from __future__ import annotations

import math

import numpy as np
import pytest

from blocksynth import EngineConfig, PerformStatus, create_engine
from blocksynth.bridge import EngineProcessor


def build_engine(config: EngineConfig, orc: str, sco: str = "", console=None):
    engine = create_engine(config, console=console)
    result = engine.compile_orc(orc)
    assert result.ok, result.diagnostics
    if sco:
        engine.read_score(sco)
    return engine


def build_processor(config: EngineConfig, orc: str, sco: str = "",
                    start: bool = True) -> EngineProcessor:
    """Processor with orc/sco/start queued; messages apply on first process."""
    from blocksynth.bridge import CompileOrc, ReadScore, Start

    proc = EngineProcessor(config)
    proc.inbox.push(CompileOrc(orc, seq=1))
    if sco:
        proc.inbox.push(ReadScore(sco, seq=2))
    if start:
        proc.inbox.push(Start(seq=3))
    return proc


def oracle_stream(config: EngineConfig, orc: str, sco: str,
                  host_input: np.ndarray | None, total_frames: int) -> np.ndarray:
    """Reference stream: perform call k emits output frames
    [k*ksmps, (k+1)*ksmps) and consumes host input frames
    [(k-1)*ksmps, k*ksmps) (negative frames are zeros). Frames from the
    call that reports finished onward are zeros.

    host_input is float32 shaped (nchnls_i, >= total_frames). Returns
    float32 shaped (nchnls, ceil(total/ksmps)*ksmps).
    """
    engine = build_engine(config, orc, sco)
    k = config.ksmps
    nch = config.nchnls
    nch_i = config.nchnls_i
    z = config.zerodbfs
    blocks = math.ceil(total_frames / k)
    out = np.zeros((nch, blocks * k), dtype=np.float32)
    for b in range(blocks):
        if nch_i and host_input is not None:
            lo = (b - 1) * k
            for ch in range(nch_i):
                for i in range(k):
                    frame = lo + i
                    v = float(host_input[ch][frame]) if frame >= 0 else 0.0
                    engine.spin[i * nch_i + ch] = v * z
        status = engine.perform_block()
        if status is not PerformStatus.CONTINUE:
            break  # this block and everything after stays zero
        spout = engine.spout
        for ch in range(nch):
            out[ch, b * k:(b + 1) * k] = np.asarray(
                [spout[i * nch + ch] / z for i in range(k)], dtype=np.float64
            ).astype(np.float32)
    return out[:, :total_frames]


def stream_process(proc: EngineProcessor, host_input: np.ndarray | None,
                   total_frames: int, buffer_len: int, nchnls: int,
                   nchnls_i: int) -> np.ndarray:
    """Drive process() in buffer_len chunks and concatenate the output."""
    calls = math.ceil(total_frames / buffer_len)
    out = np.zeros((nchnls, calls * buffer_len), dtype=np.float32)
    for c in range(calls):
        lo = c * buffer_len
        ins = []
        if nchnls_i and host_input is not None:
            for ch in range(nchnls_i):
                chunk = np.zeros(buffer_len, dtype=np.float32)
                hi = min(lo + buffer_len, host_input.shape[1])
                if hi > lo:
                    chunk[: hi - lo] = host_input[ch, lo:hi]
                ins.append(chunk)
        outs = [np.zeros(buffer_len, dtype=np.float32) for _ in range(nchnls)]
        assert proc.process(ins, outs) is True
        for ch in range(nchnls):
            out[ch, lo:lo + buffer_len] = outs[ch]
    return out[:, :total_frames]
