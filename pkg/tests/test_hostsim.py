"""Virtual-time host: deadline model, dropout counting, offline rendering."""
from __future__ import annotations

import math

import mpmath
import numpy as np
import pytest
import scipy.io.wavfile

from blocksynth import (
    CompileFailedError,
    EngineConfig,
    HostConfig,
    SchedulingMode,
    inject_main_task,
    render_offline,
    run_sim,
)
from conftest import build_processor

ENGINE_CFG = EngineConfig(sr=8000, ksmps=32, nchnls=1, nchnls_i=0, zerodbfs=32768.0)
TONE_ORC = "instr 1\n out oscil(p4, p5)\nendin"
TONE_SCO = "i 1 0 60 16384 440"
HOST = HostConfig(sr=8000, quantum=128)


def make_processor():
    return build_processor(ENGINE_CFG, TONE_ORC, TONE_SCO)


def test_zero_load_no_dropouts():
    report = run_sim(HOST, make_processor(), duration=1.0)
    assert report.callbacks_total == math.ceil(8000 / 128)
    assert report.dropouts == 0
    assert report.worst_lateness == 0.0
    assert np.any(report.rendered != 0.0)


def test_stall_twice_deadline_drops_everything():
    period = 128 / 8000
    host = HostConfig(sr=8000, quantum=128, per_callback_stall=2 * period)
    report = run_sim(host, make_processor(), duration=0.5)
    assert report.dropouts == report.callbacks_total
    assert np.all(report.rendered == 0.0)


def test_shared_mode_with_tasks_drops_more_than_dedicated():
    dedicated = HostConfig(sr=8000, quantum=128, mode=SchedulingMode.DEDICATED)
    shared = HostConfig(sr=8000, quantum=128, mode=SchedulingMode.SHARED)
    shared = inject_main_task(shared, 0.2, 0.05)
    d = run_sim(dedicated, make_processor(), duration=1.0)
    s = run_sim(shared, make_processor(), duration=1.0)
    assert s.dropouts > d.dropouts


def test_dedicated_mode_ignores_tasks():
    base = HostConfig(sr=8000, quantum=128, mode=SchedulingMode.DEDICATED)
    loaded = inject_main_task(base, 0.1, 0.5)
    a = run_sim(base, make_processor(), duration=0.5)
    b = run_sim(loaded, make_processor(), duration=0.5)
    assert a.dropouts == b.dropouts == 0
    assert np.array_equal(a.rendered, b.rendered)


def test_zero_duration_task_changes_nothing():
    base = HostConfig(sr=8000, quantum=128, mode=SchedulingMode.SHARED)
    with_task = inject_main_task(base, 0.25, 0.0)
    a = run_sim(base, make_processor(), duration=0.5)
    b = run_sim(with_task, make_processor(), duration=0.5)
    assert a.dropouts == b.dropouts
    assert np.array_equal(a.rendered, b.rendered)


def test_overlapping_tasks_delay_additively():
    # Two 50ms tasks declared overlapping serialize on the one thread, so
    # they block callbacks exactly like a single 100ms task over the same
    # span: [0.1, 0.15) + [0.12 queued until 0.15, 0.05) == [0.1, 0.2).
    shared = HostConfig(sr=8000, quantum=128, mode=SchedulingMode.SHARED)
    overlapping = inject_main_task(inject_main_task(shared, 0.1, 0.05), 0.12, 0.05)
    merged = inject_main_task(shared, 0.1, 0.10)
    a = run_sim(overlapping, make_processor(), duration=0.5)
    b = run_sim(merged, make_processor(), duration=0.5)
    assert a.dropped_indices == b.dropped_indices
    assert np.array_equal(a.rendered, b.rendered)
    # Hand check (period 16 ms): callbacks 7..11 finish after the thread
    # frees at 0.2s and miss their deadlines; callback 12 is on time.
    assert a.dropped_indices == (7, 8, 9, 10, 11)


def test_lateness_conservation_only_dropped_quanta_differ():
    quiet = run_sim(HOST, make_processor(), duration=0.5)
    shared = inject_main_task(
        HostConfig(sr=8000, quantum=128, mode=SchedulingMode.SHARED), 0.1, 0.06)
    loud = run_sim(shared, make_processor(), duration=0.5)
    assert loud.dropouts > 0
    q = HOST.quantum
    for k in range(loud.callbacks_total):
        a = quiet.rendered[:, k * q:(k + 1) * q]
        b = loud.rendered[:, k * q:(k + 1) * q]
        if k in loud.dropped_indices:
            assert np.all(b == 0.0)
        else:
            assert np.array_equal(a, b)


def test_dropouts_monotyear_in_stall():
    last = -1
    for stall_ms in (0.0, 4.0, 8.0, 12.0, 16.0, 32.0):
        host = HostConfig(sr=8000, quantum=128, per_callback_stall=stall_ms / 1000)
        report = run_sim(host, make_processor(), duration=0.5)
        assert report.dropouts >= last
        last = report.dropouts


def test_dropouts_monotone_in_task_time():
    last = -1
    for dur in (0.0, 0.02, 0.05, 0.1, 0.2):
        host = inject_main_task(
            HostConfig(sr=8000, quantum=128, mode=SchedulingMode.SHARED), 0.1, dur)
        report = run_sim(host, make_processor(), duration=0.5)
        assert report.dropouts >= last
        last = report.dropouts


def test_run_sim_validates_arguments():
    with pytest.raises(ValueError):
        run_sim(HOST, make_processor(), duration=0.0)
    with pytest.raises(ValueError):
        HostConfig(quantum=0).validate()
    with pytest.raises(ValueError):
        inject_main_task(HOST, 0.0, -1.0)


# --- offline rendering ---------------------------------------------------------

def test_render_offline_silence_frame_count(tmp_path):
    out = tmp_path / "silence.wav"
    cfg = EngineConfig(sr=44100, ksmps=32, nchnls=1, nchnls_i=0)
    result = render_offline("instr 1\n out 0\nendin", "", cfg, 1.0, str(out))
    assert result.frames == 44128  # ceil(44100/32) = 1379 blocks
    sr, data = scipy.io.wavfile.read(out)
    assert sr == 44100
    assert data.dtype == np.float32
    assert data.shape == (44128,)
    assert np.all(data == 0.0)


def test_render_offline_peak_amplitude(tmp_path):
    cfg = EngineConfig(sr=44100, ksmps=32, nchnls=1, nchnls_i=0, zerodbfs=32768.0)
    result = render_offline("instr 1\n out oscil(32768, 441)\nendin",
                            "i 1 0 1", cfg, 0.1, str(tmp_path / "t.wav"))
    peak = float(np.max(np.abs(result.scaled_samples)))
    assert peak == pytest.approx(1.0, abs=1e-6)


def test_render_offline_sine_against_high_precision_oracle(tmp_path):
    cfg = EngineConfig(sr=44100, ksmps=32, nchnls=1, nchnls_i=0, zerodbfs=32768.0)
    result = render_offline("instr 1\n out oscil(32768, 441)\nendin",
                            "i 1 0 1", cfg, 0.05, str(tmp_path / "t.wav"))
    mpmath.mp.dps = 40
    two_pi = 2 * mpmath.pi
    normalized = result.engine_samples[:, 0] / 32768.0
    for k in range(result.frames):
        ref = float(mpmath.sin(two_pi * 441 * k / 44100))
        assert abs(normalized[k] - ref) < 1e-9


def test_render_offline_deterministic_bytes(tmp_path):
    cfg = EngineConfig(sr=8000, ksmps=16, nchnls=2, nchnls_i=0)
    a, b = tmp_path / "a.wav", tmp_path / "b.wav"
    for path in (a, b):
        render_offline(TONE_ORC, "i 1 0 2 1000 220\ne 1.5", cfg, 2.0, str(path))
    assert a.read_bytes() == b.read_bytes()


def test_render_offline_stops_at_end_event(tmp_path):
    cfg = EngineConfig(sr=8000, ksmps=8, nchnls=1, nchnls_i=0, zerodbfs=1.0)
    result = render_offline("instr 1\n out 1\nendin", "i 1 0 10\ne 0.25",
                            cfg, 0.5, str(tmp_path / "e.wav"))
    cut = int(0.25 * 8000)
    assert np.all(result.scaled_samples[:cut] == 1.0)
    assert np.all(result.scaled_samples[cut:] == 0.0)


def test_render_offline_compile_failure():
    cfg = EngineConfig(sr=8000, ksmps=8, nchnls=1, nchnls_i=0)
    with pytest.raises(CompileFailedError):
        render_offline("instr 1\n out nope\nendin", "", cfg, 0.1)


def test_wav_header_layout(tmp_path):
    out = tmp_path / "h.wav"
    cfg = EngineConfig(sr=8000, ksmps=8, nchnls=2, nchnls_i=0)
    render_offline("instr 1\n out 0\nendin", "", cfg, 0.01, str(out))
    raw = out.read_bytes()
    assert raw[:4] == b"RIFF" and raw[8:12] == b"WAVE"
    assert raw[12:16] == b"fmt " and raw[36:40] == b"data"
    import struct
    fmt_len, code, channels, sr = struct.unpack("<IHHI", raw[16:28])
    assert (fmt_len, code, channels, sr) == (16, 3, 2, 8000)
    bits = struct.unpack("<H", raw[34:36])[0]
    assert bits == 32
    data_len = struct.unpack("<I", raw[40:44])[0]
    assert len(raw) == 44 + data_len  # plain header, no fact chunk


def test_offline_online_equivalence_zero_load():
    # No input and no load: the bridge-driven stream must equal the
    # directly performed stream.
    report = run_sim(HOST, make_processor(), duration=0.5)
    cfg = ENGINE_CFG
    offline = render_offline(TONE_ORC, TONE_SCO, cfg, 0.5)
    n = min(report.rendered.shape[1], offline.frames)
    assert np.array_equal(report.rendered[0, :n],
                          offline.scaled_samples[:n, 0])
