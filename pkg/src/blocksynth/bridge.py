"""Control/render bridge: a control-context node handle and a render-context
processor that owns the engine, talking only through two pre-allocated
SPSC message queues.

The processor's process() adapts the engine's ksmps block to any host
buffer length with the cnt automaton: it performs a block whenever cnt
reaches ksmps, copies input frames into spin scaled by zerodbfs, and
copies spout frames to the output divided by zerodbfs. cnt, status and
running persist across calls. Messages are applied only at the start of a
process call, never between frames.
"""
from __future__ import annotations

import enum
import itertools
import time as _time
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

from .engine import Engine, EngineConfig, PerformStatus, create_engine
from .errors import (
    EngineError,
    OverrideUnsupportedError,
    QueueFullError,
    RequestTimeoutError,
)
from .orc import Diagnostic
from .ringbuf import SpscRing
from .score import EventKind, ScoreEvent
from .vfs import VirtualFileSystem

__all__ = [
    "BackendKind",
    "HostCapabilities",
    "select_backend",
    "midi_to_event",
    "CompileOrc",
    "ReadScore",
    "Event",
    "SetChannel",
    "GetChannel",
    "Midi",
    "WriteFile",
    "ListFiles",
    "Start",
    "Stop",
    "Reset",
    "ChannelValue",
    "FileList",
    "Console",
    "CompileReply",
    "Finished",
    "message_to_wire",
    "message_from_wire",
    "reply_to_wire",
    "reply_from_wire",
    "EngineProcessor",
    "EngineNode",
    "PendingReply",
    "GraphContext",
    "create_node",
    "EngineFacade",
    "INBOX_CAPACITY",
]

INBOX_CAPACITY = 1024


class BackendKind(enum.Enum):
    WORKLET = "worklet"
    SCRIPT_PROCESSOR = "script-processor"


@dataclass(frozen=True)
class HostCapabilities:
    worklet_available: bool
    secure_context: bool


def select_backend(caps: HostCapabilities,
                   override: BackendKind | None = None) -> BackendKind:
    """Pick the backend: the dedicated render context when available and
    the page is secure, otherwise the inline fallback. An explicit override
    is honored only if the host can actually support it."""
    worklet_ok = caps.worklet_available and caps.secure_context
    if override is BackendKind.WORKLET:
        if not worklet_ok:
            raise OverrideUnsupportedError(
                "worklet backend requested but unavailable "
                f"(worklet_available={caps.worklet_available}, "
                f"secure_context={caps.secure_context})"
            )
        return BackendKind.WORKLET
    if override is BackendKind.SCRIPT_PROCESSOR:
        return BackendKind.SCRIPT_PROCESSOR
    return BackendKind.WORKLET if worklet_ok else BackendKind.SCRIPT_PROCESSOR


def midi_to_event(status: int, d1: int, d2: int) -> ScoreEvent | None:
    """Map a raw MIDI message to an engine event.

    Note-on (0x9n, velocity > 0) starts a held note on instrument n+1 with
    p4 = velocity/127 and p5 the equal-tempered frequency of the key.
    Note-off (0x8n, or note-on with velocity 0) releases the matching held
    note. Anything else maps to None.
    """
    kind = status & 0xF0
    channel = status & 0x0F
    if kind == 0x90 and d2 > 0:
        freq = 440.0 * 2.0 ** ((d1 - 69) / 12.0)
        return ScoreEvent(EventKind.NOTE, channel + 1, 0.0, -1.0,
                          (d2 / 127.0, freq), key=d1)
    if kind == 0x80 or (kind == 0x90 and d2 == 0):
        return ScoreEvent(EventKind.RELEASE, instr=channel + 1, key=d1)
    return None


# --- control messages -------------------------------------------------------

@dataclass(frozen=True)
class CompileOrc:
    source: str
    seq: int = 0


@dataclass(frozen=True)
class ReadScore:
    text: str
    seq: int = 0


@dataclass(frozen=True)
class Event:
    event: ScoreEvent
    seq: int = 0


@dataclass(frozen=True)
class SetChannel:
    name: str
    value: float
    seq: int = 0


@dataclass(frozen=True)
class GetChannel:
    name: str
    request_id: int
    seq: int = 0


@dataclass(frozen=True)
class Midi:
    status: int
    d1: int
    d2: int
    seq: int = 0


@dataclass(frozen=True)
class WriteFile:
    path: str
    data: bytes
    seq: int = 0


@dataclass(frozen=True)
class ListFiles:
    prefix: str
    request_id: int
    seq: int = 0


@dataclass(frozen=True)
class Start:
    seq: int = 0


@dataclass(frozen=True)
class Stop:
    seq: int = 0


@dataclass(frozen=True)
class Reset:
    seq: int = 0


ControlMessage = (CompileOrc, ReadScore, Event, SetChannel, GetChannel,
                  Midi, WriteFile, ListFiles, Start, Stop, Reset)


# --- replies ----------------------------------------------------------------

@dataclass(frozen=True)
class ChannelValue:
    request_id: int
    value: float


@dataclass(frozen=True)
class FileList:
    request_id: int
    entries: tuple  # (path, size) pairs


@dataclass(frozen=True)
class Console:
    text: str


@dataclass(frozen=True)
class CompileReply:
    ok: bool
    diagnostics: tuple = ()


@dataclass(frozen=True)
class Finished:
    pass


ReplyMessage = (ChannelValue, FileList, Console, CompileReply, Finished)


# --- wire encoding -----------------------------------------------------------

_MSG_TAGS = {
    CompileOrc: "compile-orc",
    ReadScore: "read-score",
    Event: "event",
    SetChannel: "set-channel",
    GetChannel: "get-channel",
    Midi: "midi",
    WriteFile: "write-file",
    ListFiles: "list-files",
    Start: "start",
    Stop: "stop",
    Reset: "reset",
}
_MSG_BY_TAG = {tag: cls for cls, tag in _MSG_TAGS.items()}

_REPLY_TAGS = {
    ChannelValue: "channel-value",
    FileList: "file-list",
    Console: "console",
    CompileReply: "compile-result",
    Finished: "finished",
}
_REPLY_BY_TAG = {tag: cls for cls, tag in _REPLY_TAGS.items()}


def _event_to_wire(ev: ScoreEvent) -> dict:
    return {
        "kind": ev.kind.value,
        "instr": ev.instr,
        "start": ev.start,
        "dur": ev.dur,
        "pfields": list(ev.pfields),
        "key": ev.key,
    }


def _event_from_wire(d: dict) -> ScoreEvent:
    return ScoreEvent(EventKind(d["kind"]), d["instr"], d["start"], d["dur"],
                      tuple(d["pfields"]), d["key"])


def message_to_wire(msg) -> dict:
    """Encode a control message as {type, seq, payload} with only
    JSON-representable values (bytes become integer lists)."""
    tag = _MSG_TAGS[type(msg)]
    payload: dict = {}
    if isinstance(msg, CompileOrc):
        payload = {"source": msg.source}
    elif isinstance(msg, ReadScore):
        payload = {"text": msg.text}
    elif isinstance(msg, Event):
        payload = {"event": _event_to_wire(msg.event)}
    elif isinstance(msg, SetChannel):
        payload = {"name": msg.name, "value": msg.value}
    elif isinstance(msg, GetChannel):
        payload = {"name": msg.name, "request_id": msg.request_id}
    elif isinstance(msg, Midi):
        payload = {"status": msg.status, "d1": msg.d1, "d2": msg.d2}
    elif isinstance(msg, WriteFile):
        payload = {"path": msg.path, "data": list(msg.data)}
    elif isinstance(msg, ListFiles):
        payload = {"prefix": msg.prefix, "request_id": msg.request_id}
    return {"type": tag, "seq": msg.seq, "payload": payload}


def message_from_wire(wire: dict):
    cls = _MSG_BY_TAG[wire["type"]]
    seq = wire["seq"]
    p = wire.get("payload", {})
    if cls is CompileOrc:
        return CompileOrc(p["source"], seq)
    if cls is ReadScore:
        return ReadScore(p["text"], seq)
    if cls is Event:
        return Event(_event_from_wire(p["event"]), seq)
    if cls is SetChannel:
        return SetChannel(p["name"], p["value"], seq)
    if cls is GetChannel:
        return GetChannel(p["name"], p["request_id"], seq)
    if cls is Midi:
        return Midi(p["status"], p["d1"], p["d2"], seq)
    if cls is WriteFile:
        return WriteFile(p["path"], bytes(p["data"]), seq)
    if cls is ListFiles:
        return ListFiles(p["prefix"], p["request_id"], seq)
    return cls(seq)


def reply_to_wire(reply) -> dict:
    tag = _REPLY_TAGS[type(reply)]
    payload: dict = {}
    if isinstance(reply, ChannelValue):
        payload = {"request_id": reply.request_id, "value": reply.value}
    elif isinstance(reply, FileList):
        payload = {"request_id": reply.request_id,
                   "entries": [list(e) for e in reply.entries]}
    elif isinstance(reply, Console):
        payload = {"text": reply.text}
    elif isinstance(reply, CompileReply):
        payload = {"ok": reply.ok,
                   "diagnostics": [[d.line, d.column, d.message]
                                   for d in reply.diagnostics]}
    return {"type": tag, "payload": payload}


def reply_from_wire(wire: dict):
    cls = _REPLY_BY_TAG[wire["type"]]
    p = wire.get("payload", {})
    if cls is ChannelValue:
        return ChannelValue(p["request_id"], p["value"])
    if cls is FileList:
        return FileList(p["request_id"], tuple(tuple(e) for e in p["entries"]))
    if cls is Console:
        return Console(p["text"])
    if cls is CompileReply:
        return CompileReply(p["ok"], tuple(Diagnostic(*d) for d in p["diagnostics"]))
    return Finished()


# --- render side --------------------------------------------------------------

class EngineProcessor:
    """Render-context side of the bridge: owns the engine, the sandbox
    filesystem, and the cnt/status/running loop state."""

    def __init__(self, config: EngineConfig,
                 inbox: SpscRing | None = None,
                 replies: SpscRing | None = None):
        self.inbox = inbox if inbox is not None else SpscRing(INBOX_CAPACITY)
        self.replies = replies if replies is not None else SpscRing(INBOX_CAPACITY)
        self.engine: Engine = create_engine(config, console=self._console)
        self.vfs = VirtualFileSystem()
        self.cnt = config.ksmps  # first running process call performs at once
        self.status = 0
        self.running = False
        self.dropped_replies = 0
        self._finished_emitted = False

    def _console(self, text: str) -> None:
        self._reply(Console(text))

    def _reply(self, reply) -> None:
        if not self.replies.push(reply):
            self.dropped_replies += 1

    def apply_messages(self) -> None:
        """Drain the inbox in FIFO order. Called at the start of every
        process call, before any frame work."""
        engine = self.engine
        while True:
            msg = self.inbox.pop()
            if msg is None:
                return
            try:
                if isinstance(msg, CompileOrc):
                    result = engine.compile_orc(msg.source)
                    self._reply(CompileReply(result.ok, result.diagnostics))
                elif isinstance(msg, ReadScore):
                    engine.read_score(msg.text)
                elif isinstance(msg, Event):
                    engine.send_event(msg.event)
                elif isinstance(msg, SetChannel):
                    engine.set_channel(msg.name, msg.value)
                elif isinstance(msg, GetChannel):
                    self._reply(ChannelValue(msg.request_id,
                                             engine.get_channel(msg.name)))
                elif isinstance(msg, Midi):
                    ev = midi_to_event(msg.status, msg.d1, msg.d2)
                    if ev is not None:
                        engine.send_event(ev)
                elif isinstance(msg, WriteFile):
                    self.vfs.write(msg.path, msg.data)
                elif isinstance(msg, ListFiles):
                    self._reply(FileList(msg.request_id,
                                         tuple(self.vfs.list(msg.prefix))))
                elif isinstance(msg, Start):
                    self.running = True
                elif isinstance(msg, Stop):
                    self.running = False
                elif isinstance(msg, Reset):
                    engine.reset()
                    self.cnt = engine.config.ksmps
                    self.status = 0
                    self._finished_emitted = False
            except EngineError as exc:
                # The render context must keep going; report and move on.
                self._reply(Console(f"error: {exc}"))

    def process(self, inputs: Sequence, outputs: Sequence) -> bool:
        """Adapt one host buffer: returns True (keep-alive) always.

        inputs/outputs are per-channel sample arrays; all outputs share one
        length. When not running the outputs are left untouched. Once the
        engine reports finished, remaining frames are written as zeros and
        cnt stays frozen so spin/spout indices remain in bounds.
        """
        self.apply_messages()
        if not self.running:
            return True
        engine = self.engine
        cfg = engine.config
        ksmps = cfg.ksmps
        zerodbfs = cfg.zerodbfs
        nchnls = cfg.nchnls
        nchnls_i = cfg.nchnls_i
        spin = engine.spin
        spout = engine.spout
        cnt = self.cnt
        status = self.status
        buffer_len = len(outputs[0])
        n_in = min(len(inputs), nchnls_i)
        n_out = len(outputs)
        for i in range(buffer_len):
            if cnt == ksmps and status == 0:
                status = engine.perform_block().code
                cnt = 0
                if status != 0 and not self._finished_emitted:
                    self._finished_emitted = True
                    self._reply(Finished())
            if status == 0:
                in_base = cnt * nchnls_i
                for ch in range(n_in):
                    spin[in_base + ch] = float(inputs[ch][i]) * zerodbfs
                out_base = cnt * nchnls
                for ch in range(n_out):
                    outputs[ch][i] = (spout[out_base + ch] / zerodbfs
                                      if ch < nchnls else 0.0)
                cnt += 1
            else:
                for ch in range(n_out):
                    outputs[ch][i] = 0.0
        self.cnt = cnt
        self.status = status
        return True


# --- control side ---------------------------------------------------------------

class PendingReply:
    """Resolves when the matching reply is polled off the reply queue."""

    def __init__(self, node: "EngineNode", request_id: int):
        self._node = node
        self.request_id = request_id
        self.done = False
        self.value = None

    def _resolve(self, value) -> None:
        self.done = True
        self.value = value

    def result(self, timeout: float = 1.0):
        """Poll until resolved or the wall-clock deadline passes, then
        raise RequestTimeoutError (a dead processor never replies)."""
        deadline = _time.monotonic() + timeout
        while True:
            self._node.poll()
            if self.done:
                return self.value
            if _time.monotonic() >= deadline:
                raise RequestTimeoutError(
                    f"no reply for request {self.request_id} within {timeout}s")
            _time.sleep(0.0005)


class EngineNode:
    """Control-context handle. Posting never blocks; replies arrive via
    poll(). One node drives exactly one processor/engine."""

    def __init__(self, config: EngineConfig, backend: BackendKind,
                 context: "GraphContext | None" = None):
        self.config = config
        self.backend = backend
        self.context = context
        self.processor = EngineProcessor(config)
        self.connections: list = []
        self.console_log: list[str] = []
        self.on_console: Callable[[str], None] | None = None
        self.finished = False
        self.last_compile: CompileReply | None = None
        self._seq = itertools.count(1)
        self._request_ids = itertools.count(1)
        self._pending: dict[int, PendingReply] = {}

    # -- messaging

    def post(self, msg) -> int:
        """Stamp the node's next sequence number and enqueue the message.
        Raises QueueFullError when the processor inbox is at capacity."""
        seq = next(self._seq)
        msg = replace(msg, seq=seq)
        if not self.processor.inbox.push(msg):
            raise QueueFullError(
                f"inbox full ({self.processor.inbox.capacity} undelivered messages)")
        return seq

    def compile_orc(self, source: str) -> int:
        return self.post(CompileOrc(source))

    def read_score(self, text: str) -> int:
        return self.post(ReadScore(text))

    def send_event(self, event: ScoreEvent) -> int:
        return self.post(Event(event))

    def set_channel(self, name: str, value: float) -> int:
        return self.post(SetChannel(name, value))

    def send_midi(self, status: int, d1: int, d2: int) -> int:
        return self.post(Midi(status, d1, d2))

    def write_file(self, path: str, data: bytes) -> int:
        return self.post(WriteFile(path, data))

    def start(self) -> int:
        return self.post(Start())

    def stop(self) -> int:
        return self.post(Stop())

    def reset(self) -> int:
        return self.post(Reset())

    def request_channel(self, name: str) -> PendingReply:
        rid = next(self._request_ids)
        pending = PendingReply(self, rid)
        self._pending[rid] = pending
        self.post(GetChannel(name, rid))
        return pending

    def request_file_list(self, prefix: str = "") -> PendingReply:
        rid = next(self._request_ids)
        pending = PendingReply(self, rid)
        self._pending[rid] = pending
        self.post(ListFiles(prefix, rid))
        return pending

    def poll(self) -> None:
        """Drain the reply queue, dispatching console text, compile
        results, finish notifications, and pending request values."""
        while True:
            reply = self.processor.replies.pop()
            if reply is None:
                return
            if isinstance(reply, Console):
                self.console_log.append(reply.text)
                if self.on_console is not None:
                    self.on_console(reply.text)
            elif isinstance(reply, (ChannelValue, FileList)):
                pending = self._pending.pop(reply.request_id, None)
                if pending is not None:
                    pending._resolve(reply.value if isinstance(reply, ChannelValue)
                                     else reply.entries)
            elif isinstance(reply, CompileReply):
                self.last_compile = reply
            elif isinstance(reply, Finished):
                self.finished = True

    # -- graph plumbing

    def connect(self, destination) -> None:
        if destination not in self.connections:
            self.connections.append(destination)

    def disconnect(self, destination=None) -> None:
        if destination is None:
            self.connections.clear()
        elif destination in self.connections:
            self.connections.remove(destination)


@dataclass
class GraphContext:
    """Minimal stand-in for a host audio context: capabilities plus a
    destination token nodes can connect to."""

    capabilities: HostCapabilities = HostCapabilities(True, True)
    destination: object = field(default_factory=object)


def create_node(context: GraphContext, config: EngineConfig,
                override: BackendKind | None = None) -> EngineNode:
    """Create a node (and its processor/engine) for this context. The
    caller owns graph wiring; nothing is connected automatically."""
    backend = select_backend(context.capabilities, override)
    return EngineNode(config, backend, context)


class EngineFacade:
    """Single-engine convenience facade: creates the node, connects it to
    the context destination, and forwards the control operations."""

    def __init__(self, context: GraphContext, config: EngineConfig | None = None,
                 override: BackendKind | None = None):
        self.context = context
        self.node = create_node(context, config or EngineConfig(), override)
        self.node.connect(context.destination)

    @property
    def backend(self) -> BackendKind:
        return self.node.backend

    @property
    def processor(self) -> EngineProcessor:
        return self.node.processor

    def compile_orc(self, source: str) -> int:
        return self.node.compile_orc(source)

    def read_score(self, text: str) -> int:
        return self.node.read_score(text)

    def send_event(self, event: ScoreEvent) -> int:
        return self.node.send_event(event)

    def set_channel(self, name: str, value: float) -> int:
        return self.node.set_channel(name, value)

    def request_channel(self, name: str) -> PendingReply:
        return self.node.request_channel(name)

    def send_midi(self, status: int, d1: int, d2: int) -> int:
        return self.node.send_midi(status, d1, d2)

    def start(self) -> int:
        return self.node.start()

    def stop(self) -> int:
        return self.node.stop()

    def reset(self) -> int:
        return self.node.reset()

    def poll(self) -> None:
        self.node.poll()
