"""Bridge: backend selection, MIDI mapping, the process() automaton, the
message protocol, and node/facade plumbing."""
from __future__ import annotations

import itertools
import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blocksynth import (
    BackendKind,
    EngineConfig,
    EventKind,
    GraphContext,
    HostCapabilities,
    OverrideUnsupportedError,
    QueueFullError,
    RequestTimeoutError,
    ScoreEvent,
    create_node,
    midi_to_event,
    select_backend,
)
from blocksynth.bridge import (
    ChannelValue,
    CompileOrc,
    CompileReply,
    Console,
    Event,
    EngineFacade,
    EngineNode,
    EngineProcessor,
    FileList,
    Finished,
    GetChannel,
    ListFiles,
    Midi,
    ReadScore,
    Reset,
    SetChannel,
    Start,
    Stop,
    WriteFile,
    message_from_wire,
    message_to_wire,
    reply_from_wire,
    reply_to_wire,
)
from conftest import build_processor, oracle_stream, stream_process

PASSTHROUGH = "instr 1\n out in(0)\nendin"


# --- backend selection ---------------------------------------------------------

@pytest.mark.parametrize("worklet,secure,override,expected", [
    (True, True, None, BackendKind.WORKLET),
    (True, False, None, BackendKind.SCRIPT_PROCESSOR),
    (False, True, None, BackendKind.SCRIPT_PROCESSOR),
    (False, False, None, BackendKind.SCRIPT_PROCESSOR),
    (True, True, BackendKind.WORKLET, BackendKind.WORKLET),
    (True, False, BackendKind.WORKLET, None),
    (False, True, BackendKind.WORKLET, None),
    (False, False, BackendKind.WORKLET, None),
    (True, True, BackendKind.SCRIPT_PROCESSOR, BackendKind.SCRIPT_PROCESSOR),
    (True, False, BackendKind.SCRIPT_PROCESSOR, BackendKind.SCRIPT_PROCESSOR),
    (False, True, BackendKind.SCRIPT_PROCESSOR, BackendKind.SCRIPT_PROCESSOR),
    (False, False, BackendKind.SCRIPT_PROCESSOR, BackendKind.SCRIPT_PROCESSOR),
])
def test_select_backend_truth_table(worklet, secure, override, expected):
    caps = HostCapabilities(worklet, secure)
    if expected is None:
        with pytest.raises(OverrideUnsupportedError):
            select_backend(caps, override)
    else:
        assert select_backend(caps, override) is expected


# --- MIDI ----------------------------------------------------------------------

def test_note_on_maps_to_held_note():
    ev = midi_to_event(0x90, 69, 127)
    assert ev.kind is EventKind.NOTE
    assert ev.instr == 1
    assert ev.dur == -1.0
    assert ev.pfields[0] == 1.0
    assert ev.pfields[1] == pytest.approx(440.0)
    assert ev.key == 69


def test_octave_up_doubles_frequency():
    ev = midi_to_event(0x90, 81, 64)
    assert ev.pfields[1] == pytest.approx(880.0)


def test_channel_number_selects_instrument():
    assert midi_to_event(0x95, 60, 100).instr == 6


def test_note_off_releases_matching_note():
    on = midi_to_event(0x90, 69, 127)
    off = midi_to_event(0x80, 69, 0)
    assert off.kind is EventKind.RELEASE
    assert (off.instr, off.key) == (on.instr, on.key)
    # note-on with zero velocity is also a release
    assert midi_to_event(0x90, 69, 0).kind is EventKind.RELEASE


def test_other_messages_ignored():
    assert midi_to_event(0xB0, 1, 64) is None  # control change
    assert midi_to_event(0xE0, 0, 64) is None  # pitch bend


def test_midi_note_roundtrip_through_engine():
    proc = build_processor(EngineConfig(sr=8000, ksmps=4, nchnls=1, nchnls_i=0,
                                        zerodbfs=1.0),
                           "instr 1\n out p4\nendin")
    proc.inbox.push(Midi(0x90, 69, 127, seq=10))
    out = [np.zeros(8, dtype=np.float32)]
    proc.process([], out)
    assert np.all(out[0] == 1.0)
    proc.inbox.push(Midi(0x80, 69, 0, seq=11))
    proc.process([], out)
    assert np.all(out[0] == 0.0)


# --- processor state ------------------------------------------------------------

CFG = EngineConfig(sr=8000, ksmps=32, nchnls=2, nchnls_i=1, zerodbfs=32768.0)


def test_processor_initial_state():
    proc = EngineProcessor(CFG)
    assert proc.running is False
    assert proc.status == 0
    assert proc.cnt == CFG.ksmps


def test_process_before_start_leaves_output_untouched():
    proc = EngineProcessor(CFG)
    out = [np.full(16, 7.0, dtype=np.float32) for _ in range(2)]
    assert proc.process([], out) is True
    assert all(np.all(o == 7.0) for o in out)


def test_messages_apply_fifo_and_get_channel_replies():
    proc = EngineProcessor(CFG)
    proc.inbox.push(SetChannel("f", 440.0, seq=1))
    proc.inbox.push(GetChannel("f", request_id=7, seq=2))
    proc.apply_messages()
    reply = proc.replies.pop()
    assert reply == ChannelValue(7, 440.0)


def test_stop_start_retain_engine_state():
    proc = build_processor(CFG, "instr 1\n out p4\nendin", "i 1 0 10 16384")
    out = [np.zeros(64, dtype=np.float32) for _ in range(2)]
    proc.process([], out)
    cnt_before = proc.cnt
    proc.inbox.push(Stop(seq=10))
    proc.process([], out)  # not running: outputs untouched, cnt retained
    assert proc.cnt == cnt_before
    assert proc.running is False
    proc.inbox.push(Start(seq=11))
    out2 = [np.zeros(64, dtype=np.float32) for _ in range(2)]
    proc.process([], out2)
    assert np.all(out2[0] == 0.5)  # same note still sounding


def _compile_replies(proc):
    out = []
    while (r := proc.replies.pop()) is not None:
        if isinstance(r, CompileReply):
            out.append(r)
    return out


def test_bad_compile_replies_failure_and_keeps_engine():
    proc = build_processor(CFG, "instr 1\n out 1\nendin", start=False)
    proc.apply_messages()
    assert _compile_replies(proc)[0].ok is True
    proc.inbox.push(CompileOrc("instr 1\n out nope\nendin", seq=5))
    proc.apply_messages()
    reply = _compile_replies(proc)[0]
    assert reply.ok is False and reply.diagnostics
    assert 1 in proc.engine.program


def test_write_and_list_files_via_messages():
    proc = EngineProcessor(CFG)
    proc.inbox.push(WriteFile("assets/a.bin", b"\x01\x02", seq=1))
    proc.inbox.push(ListFiles("assets/", request_id=3, seq=2))
    proc.apply_messages()
    assert proc.replies.pop() == FileList(3, (("assets/a.bin", 2),))


def test_engine_errors_become_console_text_not_crashes():
    proc = EngineProcessor(CFG)
    proc.inbox.push(ReadScore("bogus line", seq=1))
    proc.apply_messages()
    replies = []
    while (r := proc.replies.pop()) is not None:
        replies.append(r)
    assert any(isinstance(r, Console) and "error" in r.text for r in replies)


def test_reset_message_restores_processor_state():
    proc = build_processor(CFG, "instr 1\n out 1\nendin", "i 1 0 1\ne 0")
    out = [np.zeros(64, dtype=np.float32) for _ in range(2)]
    proc.process([], out)
    assert proc.status != 0
    proc.inbox.push(Reset(seq=9))
    proc.apply_messages()
    assert proc.status == 0 and proc.cnt == CFG.ksmps
    assert proc.engine.block_index == 0


# --- the cnt automaton ----------------------------------------------------------

def test_exact_perform_count_per_process_call():
    cfg = EngineConfig(sr=8000, ksmps=32, nchnls=1, nchnls_i=0)
    proc = build_processor(cfg, "instr 1\n out 1\nendin", "i 1 0 60")
    calls = 0
    original = proc.engine.perform_block

    def counting():
        nonlocal calls
        calls += 1
        return original()

    proc.engine.perform_block = counting
    out = [np.zeros(128, dtype=np.float32)]
    proc.process([], out)
    assert calls == 4
    assert proc.cnt == 32


def test_cnt_bounded_for_all_alignments():
    for ksmps, buflen in [(1, 7), (3, 8), (32, 128), (127, 64), (256, 100)]:
        cfg = EngineConfig(sr=8000, ksmps=ksmps, nchnls=1, nchnls_i=0)
        proc = build_processor(cfg, "instr 1\n out 1\nendin", "i 1 0 60")
        out = [np.zeros(buflen, dtype=np.float32)]
        for _ in range(20):
            proc.process([], out)
            assert 0 <= proc.cnt <= ksmps
            if buflen % ksmps != 0:
                assert proc.cnt < ksmps or proc.cnt == ksmps


def test_finished_mid_buffer_zeroes_remaining_frames():
    cfg = EngineConfig(sr=8000, ksmps=8, nchnls=1, nchnls_i=0, zerodbfs=1.0)
    # ends at 16 frames = 2 blocks; buffer of 64 sees the finish mid-call
    proc = build_processor(cfg, "instr 1\n out 1\nendin", "i 1 0 10\ne 0.002")
    out = [np.zeros(64, dtype=np.float32)]
    proc.process([], out)
    assert np.all(out[0][:16] == 1.0)
    assert np.all(out[0][16:] == 0.0)
    assert proc.status != 0
    # cnt frozen afterward; further calls stay silent
    cnt = proc.cnt
    proc.process([], out)
    assert np.all(out[0] == 0.0)
    assert proc.cnt == cnt


def test_finished_reply_emitted_once():
    cfg = EngineConfig(sr=8000, ksmps=8, nchnls=1, nchnls_i=0)
    proc = build_processor(cfg, "instr 1\n out 1\nendin", "e 0")
    out = [np.zeros(32, dtype=np.float32)]
    proc.process([], out)
    proc.process([], out)
    finished = []
    while (r := proc.replies.pop()) is not None:
        if isinstance(r, Finished):
            finished.append(r)
    assert len(finished) == 1


def test_input_latency_is_exactly_one_block():
    # Reference: an impulse fed at host frame 0 must first appear at
    # output frame ksmps (spin written at cnt feeds the NEXT perform).
    for ksmps in (32, 128):
        cfg = EngineConfig(sr=8000, ksmps=ksmps, nchnls=1, nchnls_i=1,
                           zerodbfs=32768.0)
        proc = build_processor(cfg, PASSTHROUGH, "i 1 0 60")
        frames = ksmps * 4
        impulse = np.zeros((1, frames), dtype=np.float32)
        impulse[0, 0] = 1.0
        got = stream_process(proc, impulse, frames, ksmps, 1, 1)
        nz = np.flatnonzero(got[0])
        assert nz.size == 1 and nz[0] == ksmps


def test_scaling_round_trip_bit_exact():
    cfg = EngineConfig(sr=8000, ksmps=16, nchnls=1, nchnls_i=1, zerodbfs=32768.0)
    proc = build_processor(cfg, PASSTHROUGH, "i 1 0 60")
    rng = np.random.default_rng(7)
    frames = 16 * 64
    x = rng.uniform(-1e6, 1e6, size=(1, frames)).astype(np.float32)
    got = stream_process(proc, x, frames, 16, 1, 1)
    # output is the input delayed one block, bit for bit
    assert np.array_equal(got[0][16:], x[0][:-16])


def test_stream_equivalence_small_matrix():
    orc = 'instr 1\n out in(0) + oscil(p4, p5)\nendin'
    sco = "i 1 0 60 0.25 441"
    rng = np.random.default_rng(3)
    for ksmps in (1, 3, 32):
        for buflen in (1, 64, 357):
            cfg = EngineConfig(sr=8000, ksmps=ksmps, nchnls=1, nchnls_i=1,
                               zerodbfs=32768.0)
            frames = 2000
            host_in = rng.standard_normal((1, frames)).astype(np.float32)
            proc = build_processor(cfg, orc, sco)
            got = stream_process(proc, host_in, frames, buflen, 1, 1)
            want = oracle_stream(cfg, orc, sco, host_in, frames)
            assert np.array_equal(got, want), (ksmps, buflen)


def test_message_isolation_only_at_call_boundaries():
    # A SetChannel posted after a process call must not affect that call's
    # frames but must affect the whole of the next call.
    cfg = EngineConfig(sr=8000, ksmps=4, nchnls=1, nchnls_i=0, zerodbfs=1.0)
    proc = build_processor(cfg, 'instr 1\n out chan("v")\nendin', "i 1 0 60")
    out = [np.zeros(4, dtype=np.float32)]
    proc.process([], out)
    assert np.all(out[0] == 0.0)
    proc.inbox.push(SetChannel("v", 1.0, seq=50))
    proc.process([], out)
    assert np.all(out[0] == 1.0)


# --- node and facade ----------------------------------------------------------------

def test_node_post_assigns_increasing_seq():
    node = EngineNode(CFG, BackendKind.WORKLET)
    seqs = [node.set_channel("a", 1.0), node.start(), node.stop()]
    assert seqs == sorted(seqs) and len(set(seqs)) == 3


def test_node_post_does_not_apply_immediately():
    node = EngineNode(CFG, BackendKind.WORKLET)
    node.compile_orc("instr 1\n out 1\nendin")
    assert node.processor.engine.program == {}  # not yet applied
    node.processor.apply_messages()
    assert 1 in node.processor.engine.program


def test_queue_full_rejects_message():
    node = EngineNode(CFG, BackendKind.WORKLET)
    for _ in range(node.processor.inbox.capacity):
        node.set_channel("x", 0.0)
    with pytest.raises(QueueFullError):
        node.set_channel("x", 0.0)


def test_request_channel_resolves_after_processing():
    node = EngineNode(CFG, BackendKind.WORKLET)
    node.set_channel("a", 1.0)
    pending = node.request_channel("a")
    assert not pending.done
    node.processor.apply_messages()
    assert pending.result(timeout=0.5) == 1.0


def test_request_unset_channel_resolves_zero():
    node = EngineNode(CFG, BackendKind.WORKLET)
    pending = node.request_channel("nothing")
    node.processor.apply_messages()
    assert pending.result(timeout=0.5) == 0.0


def test_request_times_out_when_processor_dead():
    node = EngineNode(CFG, BackendKind.WORKLET)
    pending = node.request_channel("a")
    with pytest.raises(RequestTimeoutError):
        pending.result(timeout=0.05)


def test_console_replies_reach_node_log():
    node = EngineNode(CFG, BackendKind.WORKLET)
    node.compile_orc("instr 1\n out 1\nendin")
    node.processor.apply_messages()
    node.poll()
    assert any("compiled" in t for t in node.console_log)
    assert node.last_compile.ok


def test_create_node_raw_use_requires_manual_connect():
    ctx = GraphContext(HostCapabilities(True, True))
    node = create_node(ctx, CFG)
    assert node.backend is BackendKind.WORKLET
    assert node.connections == []
    node.connect(ctx.destination)
    assert node.connections == [ctx.destination]


def test_facade_connects_automatically():
    ctx = GraphContext(HostCapabilities(False, True))
    facade = EngineFacade(ctx, CFG)
    assert facade.backend is BackendKind.SCRIPT_PROCESSOR
    assert ctx.destination in facade.node.connections


def test_two_nodes_have_independent_engines():
    ctx = GraphContext()
    a = create_node(ctx, CFG)
    b = create_node(ctx, CFG)
    a.set_channel("x", 5.0)
    a.processor.apply_messages()
    b.processor.apply_messages()
    assert a.processor.engine.get_channel("x") == 5.0
    assert b.processor.engine.get_channel("x") == 0.0


# --- wire encoding --------------------------------------------------------------------

ALL_MESSAGES = [
    CompileOrc("instr 1\n out 1\nendin", seq=1),
    ReadScore("i 1 0 1\ne 4", seq=2),
    Event(ScoreEvent(EventKind.NOTE, 3, 0.5, -1.0, (0.5, 440.0), key=69), seq=3),
    Event(ScoreEvent(EventKind.END, start=2.0), seq=4),
    SetChannel("cutoff", 1200.5, seq=5),
    GetChannel("cutoff", request_id=9, seq=6),
    Midi(0x90, 69, 127, seq=7),
    WriteFile("a/b.bin", bytes(range(256)), seq=8),
    ListFiles("a/", request_id=10, seq=9),
    Start(seq=10),
    Stop(seq=11),
    Reset(seq=12),
]

ALL_REPLIES = [
    ChannelValue(9, 440.0),
    FileList(10, (("a/b.bin", 256), ("c", 0))),
    Console("compiled instr 1"),
    CompileReply(False, (pytest.importorskip("blocksynth.orc").Diagnostic(2, 5, "unknown identifier 'x'"),)),
    CompileReply(True, ()),
    Finished(),
]


@pytest.mark.parametrize("msg", ALL_MESSAGES, ids=lambda m: type(m).__name__)
def test_message_wire_roundtrip_through_json(msg):
    wire = message_to_wire(msg)
    recovered = message_from_wire(json.loads(json.dumps(wire)))
    assert recovered == msg


@pytest.mark.parametrize("reply", ALL_REPLIES, ids=lambda r: type(r).__name__)
def test_reply_wire_roundtrip_through_json(reply):
    wire = reply_to_wire(reply)
    recovered = reply_from_wire(json.loads(json.dumps(wire)))
    assert recovered == reply


@given(st.binary(max_size=512), st.integers(min_value=0, max_value=10**9))
@settings(max_examples=50)
def test_write_file_wire_roundtrip_binary(data, seq):
    msg = WriteFile("f.bin", data, seq=seq)
    assert message_from_wire(json.loads(json.dumps(message_to_wire(msg)))) == msg
