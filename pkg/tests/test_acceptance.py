"""Acceptance criteria, one test per criterion, each printing a pass/fail
line. Tolerances are stated inline; stream comparisons are bit-exact."""
from __future__ import annotations

import math
import time

import mpmath
import numpy as np
import pytest
import scipy.io.wavfile

from blocksynth import (
    BackendKind,
    EngineConfig,
    HostCapabilities,
    HostConfig,
    OverrideUnsupportedError,
    SchedulingMode,
    inject_main_task,
    render_offline,
    run_sim,
    select_backend,
)
from blocksynth.bridge import (
    ChannelValue,
    EngineProcessor,
    GetChannel,
    SetChannel,
    Start,
    Stop,
)
from blocksynth.packager import Encoding, decode, encode, measure
from conftest import build_processor, oracle_stream, stream_process


def report(name: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'}: {name}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, name


KSMPS_SET = (1, 2, 3, 16, 32, 127, 128, 256)
BUFLEN_SET = (1, 64, 128, 357)


def test_stream_equivalence_matrix():
    """Bridge output is bit-identical to the block-oracle stream for every
    (ksmps, bufferLen) combination over >= 3 s of audio. Tolerance: 0."""
    sr = 8000
    seconds = 3
    frames = sr * seconds
    orc = "instr 1\n out in(0) + oscil(p4, p5)\nendin"
    sco = "i 1 0 -1 0.25 441\ni 1 1 1 0.125 220"
    rng = np.random.default_rng(2024)
    host_in = rng.standard_normal((1, frames)).astype(np.float32) * 0.5
    t0 = time.perf_counter()
    checked = 0
    for ksmps in KSMPS_SET:
        cfg = EngineConfig(sr=sr, ksmps=ksmps, nchnls=1, nchnls_i=1,
                           zerodbfs=32768.0)
        want = oracle_stream(cfg, orc, sco, host_in, frames)
        for buflen in BUFLEN_SET:
            proc = build_processor(cfg, orc, sco)
            got = stream_process(proc, host_in, frames, buflen, 1, 1)
            assert np.array_equal(got, want), (ksmps, buflen)
            checked += 1
    elapsed = time.perf_counter() - t0
    report("stream-equivalence matrix",
           checked == len(KSMPS_SET) * len(BUFLEN_SET) and elapsed < 30.0,
           f"{checked} combinations bit-identical over {seconds}s, {elapsed:.1f}s")


def test_one_block_input_latency():
    """An input impulse through a passthrough instrument first appears at
    output frame ksmps exactly, for ksmps in {32, 128, 256}."""
    for ksmps in (32, 128, 256):
        cfg = EngineConfig(sr=8000, ksmps=ksmps, nchnls=1, nchnls_i=1,
                           zerodbfs=32768.0)
        proc = build_processor(cfg, "instr 1\n out in(0)\nendin", "i 1 0 -1")
        frames = ksmps * 5
        impulse = np.zeros((1, frames), dtype=np.float32)
        impulse[0, 0] = 1.0
        got = stream_process(proc, impulse, frames, 128, 1, 1)
        nonzero = np.flatnonzero(got[0])
        assert nonzero.size == 1 and nonzero[0] == ksmps, ksmps
    report("one-block input latency", True, "first nonzero frame == ksmps")


def test_finished_semantics_soak():
    """After an end event every output frame is exactly 0 for a 10^6-frame
    soak, with cnt and the spin buffer bounded/frozen."""
    ksmps = 32
    cfg = EngineConfig(sr=8000, ksmps=ksmps, nchnls=1, nchnls_i=1,
                       zerodbfs=32768.0)
    proc = build_processor(cfg, "instr 1\n out in(0) + 1\nendin",
                           "i 1 0 -1\ne 0.004")
    buflen = 128
    ones = [np.full(buflen, 0.25, dtype=np.float32)]
    out = [np.zeros(buflen, dtype=np.float32)]
    proc.process(ones, out)  # crosses the end event
    assert proc.status != 0
    spin_snapshot = list(proc.engine.spin)
    frames = 0
    target = 1_000_000
    while frames < target:
        out[0].fill(123.0)
        proc.process(ones, out)
        assert np.all(out[0] == 0.0)
        assert 0 <= proc.cnt <= ksmps
        frames += buflen
    assert proc.engine.spin == spin_snapshot  # no writes after finish
    report("finished semantics", True,
           f"{target} frames of exact silence, cnt bounded, spin frozen")


def test_scaling_exactness():
    """With zerodbfs = 32768 a passthrough round-trip is bit-exact on 10^5
    random finite float32 samples (compared as raw bit patterns)."""
    n = 100_000
    rng = np.random.default_rng(99)
    bits = rng.integers(0, 2**32, size=n, dtype=np.uint32)
    x = bits.view(np.float32).copy()
    bad = ~np.isfinite(x)
    while bad.any():
        bits[bad] = rng.integers(0, 2**32, size=int(bad.sum()), dtype=np.uint32)
        x = bits.view(np.float32).copy()
        bad = ~np.isfinite(x)
    ksmps = 32
    cfg = EngineConfig(sr=8000, ksmps=ksmps, nchnls=1, nchnls_i=1,
                       zerodbfs=32768.0)
    proc = build_processor(cfg, "instr 1\n out in(0)\nendin", "i 1 0 -1")
    frames = n + ksmps
    host_in = np.zeros((1, frames), dtype=np.float32)
    host_in[0, :n] = x
    got = stream_process(proc, host_in, frames, 128, 1, 1)
    out_bits = got[0][ksmps:ksmps + n].view(np.uint32)
    in_bits = x.view(np.uint32)
    assert np.array_equal(out_bits, in_bits)
    report("scaling exactness", True, f"{n} samples bit-exact after round-trip")


def test_packager_criteria():
    """decode(encode(x)) identity on 1000 random inputs (0-64 KiB) plus all
    256 single bytes; base64 length law; 1 MiB size ordering; network sizes
    within 25% of each other; decode-time direction over >= 5 runs."""
    rng = np.random.default_rng(7)
    for _ in range(1000):
        n = int(rng.integers(0, 65536))
        data = rng.integers(0, 256, n, dtype=np.uint8).tobytes()
        assert decode(encode(data, Encoding.BASE64)) == data
        assert decode(encode(data, Encoding.BYTE_ARRAY)) == data
        assert len(encode(data, Encoding.BASE64).payload_text) == 4 * math.ceil(n / 3)
    for b in range(256):
        data = bytes([b])
        assert decode(encode(data, Encoding.BASE64)) == data
        assert decode(encode(data, Encoding.BYTE_ARRAY)) == data
    big = rng.integers(0, 256, 1 << 20, dtype=np.uint8).tobytes()
    b64_stats, lit_stats = measure(big, runs=5)
    assert lit_stats.file_size > b64_stats.file_size
    hi = max(lit_stats.network_size, b64_stats.network_size)
    gap = abs(lit_stats.network_size - b64_stats.network_size) / hi
    assert gap <= 0.25
    assert lit_stats.decode_time_ns < b64_stats.decode_time_ns
    report("packager", True,
           f"identity x1256, file ratio {lit_stats.file_size / b64_stats.file_size:.2f}, "
           f"network gap {100 * gap:.1f}%, decode "
           f"{lit_stats.decode_time_ns / 1e6:.2f}ms < {b64_stats.decode_time_ns / 1e6:.2f}ms")


def _sim_processor():
    cfg = EngineConfig(sr=8000, ksmps=32, nchnls=1, nchnls_i=0, zerodbfs=32768.0)
    return build_processor(cfg, "instr 1\n out oscil(p4, p5)\nendin",
                           "i 1 0 60 16384 440")


def test_dropout_model():
    """Zero load: 0 dropouts. Stall of twice the deadline: 100% dropouts.
    Shared mode with 10x50ms tasks drops strictly more than dedicated."""
    quiet = run_sim(HostConfig(sr=8000, quantum=128), _sim_processor(), 2.0)
    assert quiet.dropouts == 0
    period = 128 / 8000
    stalled = run_sim(
        HostConfig(sr=8000, quantum=128, per_callback_stall=2 * period),
        _sim_processor(), 2.0)
    assert stalled.dropouts == stalled.callbacks_total
    shared = HostConfig(sr=8000, quantum=128, mode=SchedulingMode.SHARED)
    for k in range(10):
        shared = inject_main_task(shared, 0.15 + 0.18 * k, 0.05)
    dedicated = HostConfig(sr=8000, quantum=128, mode=SchedulingMode.DEDICATED,
                           main_tasks=shared.main_tasks)
    s = run_sim(shared, _sim_processor(), 2.0)
    d = run_sim(dedicated, _sim_processor(), 2.0)
    assert s.dropouts > d.dropouts
    s2 = run_sim(shared, _sim_processor(), 2.0)
    assert s2.dropouts == s.dropouts and np.array_equal(s2.rendered, s.rendered)
    report("dropout model", True,
           f"0 quiet, {stalled.dropouts}/{stalled.callbacks_total} stalled, "
           f"shared {s.dropouts} > dedicated {d.dropouts}, deterministic")


def test_backend_selection_truth_table():
    """Every combination of capabilities and override selects per the
    rules: worklet needs availability and a secure context; overrides are
    honored only when supportable."""
    cases = 0
    for worklet in (False, True):
        for secure in (False, True):
            caps = HostCapabilities(worklet, secure)
            worklet_ok = worklet and secure
            expected = BackendKind.WORKLET if worklet_ok else BackendKind.SCRIPT_PROCESSOR
            assert select_backend(caps, None) is expected
            cases += 1
            if worklet_ok:
                assert select_backend(caps, BackendKind.WORKLET) is BackendKind.WORKLET
            else:
                with pytest.raises(OverrideUnsupportedError):
                    select_backend(caps, BackendKind.WORKLET)
            cases += 1
            assert (select_backend(caps, BackendKind.SCRIPT_PROCESSOR)
                    is BackendKind.SCRIPT_PROCESSOR)
            cases += 1
    report("backend selection truth table", cases == 12, f"{cases} combinations")


def test_offline_render_golden(tmp_path):
    """oscil(32768, 441) at sr=44100 matches a high-precision sine within
    1e-9 per sample relative to full scale (pre-scaling engine samples),
    and the WAV round-trips through an independent reader."""
    cfg = EngineConfig(sr=44100, ksmps=32, nchnls=1, nchnls_i=0,
                       zerodbfs=32768.0)
    path = str(tmp_path / "golden.wav")
    result = render_offline("instr 1\n out oscil(32768, 441)\nendin",
                            "i 1 0 2", cfg, 0.5, path)
    mpmath.mp.dps = 40
    two_pi = 2 * mpmath.pi
    normalized = result.engine_samples[:, 0] / 32768.0  # exact: power of two
    worst = 0.0
    for k in range(result.frames):
        ref = float(mpmath.sin(two_pi * 441 * k / 44100))
        worst = max(worst, abs(normalized[k] - ref))
    assert worst < 1e-9
    sr, data = scipy.io.wavfile.read(path)  # independent WAV reader
    assert sr == 44100
    assert data.dtype == np.float32
    assert np.array_equal(data, result.scaled_samples[:, 0])
    report("offline render golden", True,
           f"worst sine error {worst:.2e} over {result.frames} samples; WAV round-trip ok")


def test_message_protocol_properties():
    """FIFO causality and exactly-one-reply hold under 10^4 randomized
    message schedules."""
    rng = np.random.default_rng(31337)
    cfg = EngineConfig(sr=8000, ksmps=1, nchnls=1, nchnls_i=0, zerodbfs=1.0)
    schedules = 10_000
    for _ in range(schedules):
        proc = EngineProcessor(cfg)
        seq = 0
        last_set = 0.0
        expectations: dict[int, float] = {}
        request_order: list[int] = []
        rid = 0
        n_ops = int(rng.integers(3, 12))
        for _ in range(n_ops):
            op = int(rng.integers(0, 5))
            seq += 1
            if op == 0:
                last_set = float(rng.integers(1, 1000))
                assert proc.inbox.push(SetChannel("c", last_set, seq=seq))
            elif op == 1:
                rid += 1
                expectations[rid] = last_set
                request_order.append(rid)
                assert proc.inbox.push(GetChannel("c", rid, seq=seq))
            elif op == 2:
                assert proc.inbox.push(Start(seq=seq) if rng.integers(2) else Stop(seq=seq))
            elif op == 3:
                proc.apply_messages()  # mid-schedule block boundary
            else:
                out = [np.zeros(4, dtype=np.float32)]
                proc.process([], out)
        proc.apply_messages()
        seen: list[int] = []
        while (reply := proc.replies.pop()) is not None:
            if isinstance(reply, ChannelValue):
                seen.append(reply.request_id)
                assert reply.value == expectations[reply.request_id]
        assert seen == request_order  # one reply each, in request order
        assert proc.engine.get_channel("c") == last_set
    report("message protocol", True,
           f"{schedules} randomized schedules, FIFO + exactly-one-reply")
