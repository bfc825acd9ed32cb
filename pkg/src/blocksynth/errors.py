"""Exception types shared across the package."""


class EngineError(Exception):
    """Base class for all blocksynth errors."""


class InvalidConfigError(EngineError, ValueError):
    """Engine configuration violates a bound (sr, ksmps, nchnls, ...)."""


class EmptyNameError(EngineError, ValueError):
    """A bus channel name was empty."""


class ScoreError(EngineError):
    """Score text failed to parse. Carries per-line diagnostics."""

    def __init__(self, diagnostics):
        self.diagnostics = tuple(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


class CompileFailedError(EngineError):
    """Orchestra compilation failed where success was required."""

    def __init__(self, diagnostics):
        self.diagnostics = tuple(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


class InvalidPathError(EngineError, ValueError):
    """Virtual filesystem path is empty or escapes the sandbox."""


class VfsNotFoundError(EngineError, KeyError):
    """No file at the given virtual path."""


class QueueFullError(EngineError):
    """Message inbox is at capacity; the message was rejected."""


class OverrideUnsupportedError(EngineError):
    """A backend override asked for a backend the host cannot provide."""


class RequestTimeoutError(EngineError, TimeoutError):
    """No reply arrived within the deadline; the processor looks dead."""


class MalformedPayloadError(EngineError, ValueError):
    """A packaged module payload cannot be decoded back to bytes."""
