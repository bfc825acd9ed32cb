"""blocksynth: a block-based scriptable audio engine with a worklet-style
host bridge, binary-module packager, and callback-deadline simulator."""

from .bridge import (
    BackendKind,
    EngineFacade,
    EngineNode,
    EngineProcessor,
    GraphContext,
    HostCapabilities,
    create_node,
    midi_to_event,
    select_backend,
)
from .engine import (
    CompileResult,
    Engine,
    EngineConfig,
    PerformStatus,
    create_engine,
)
from .errors import (
    CompileFailedError,
    EmptyNameError,
    EngineError,
    InvalidConfigError,
    InvalidPathError,
    MalformedPayloadError,
    OverrideUnsupportedError,
    QueueFullError,
    RequestTimeoutError,
    ScoreError,
    VfsNotFoundError,
)
from .hostsim import (
    HostConfig,
    RenderResult,
    RunReport,
    SchedulingMode,
    inject_main_task,
    render_offline,
    run_sim,
)
from .score import EventKind, ScoreEvent, parse_score
from .vfs import VirtualFileSystem

__version__ = "0.1.0"

__all__ = [
    "BackendKind",
    "CompileFailedError",
    "CompileResult",
    "EmptyNameError",
    "Engine",
    "EngineConfig",
    "EngineError",
    "EngineFacade",
    "EngineNode",
    "EngineProcessor",
    "EventKind",
    "GraphContext",
    "HostCapabilities",
    "HostConfig",
    "InvalidConfigError",
    "InvalidPathError",
    "MalformedPayloadError",
    "OverrideUnsupportedError",
    "PerformStatus",
    "QueueFullError",
    "RenderResult",
    "RequestTimeoutError",
    "RunReport",
    "SchedulingMode",
    "ScoreError",
    "ScoreEvent",
    "VfsNotFoundError",
    "VirtualFileSystem",
    "create_engine",
    "create_node",
    "inject_main_task",
    "midi_to_event",
    "parse_score",
    "render_offline",
    "run_sim",
    "select_backend",
]
