"""Exception hierarchy for the editing engine.

Transport-level remote errors are retryable; protocol and rejection errors
are not. The CLI maps ConfigError to exit code 2 and everything else to 1.
"""


class FlowDCError(Exception):
    """Base class for all engine errors."""


class ShapeMismatchError(FlowDCError):
    """Operands or payloads disagree on vector shape."""


class NonFiniteError(FlowDCError):
    """A NaN or infinity crossed an API boundary."""


class ConfigError(FlowDCError):
    """Invalid configuration, schedule, or scenario file."""


class PromptError(FlowDCError):
    """Prompt decoupling produced an unusable prompt set."""


class UnregisteredPromptError(PromptError):
    """A prompt (or one of its clauses) has no registered distribution."""


class FieldError(FlowDCError):
    """Velocity-field evaluation failed; carries query context."""

    def __init__(self, message, *, t=None, prompt=None, trajectory=None):
        super().__init__(message)
        self.t = t
        self.prompt = prompt
        self.trajectory = trajectory


class RemoteError(FieldError):
    """Base for remote velocity-client failures."""

    kind = "remote"


class RemoteTransportError(RemoteError):
    """Connection failure or timeout; the only retryable kind."""

    kind = "transport"


class RemoteTimeoutError(RemoteTransportError):
    kind = "timeout"


class RemoteProtocolError(RemoteError):
    """Response did not parse or failed shape/finiteness validation."""

    kind = "protocol"


class RemoteShapeError(RemoteProtocolError):
    kind = "shape"


class RemoteRejectedError(RemoteError):
    """Server rejected the request (4xx); never retried."""

    def __init__(self, message, *, status, kind="rejected", **ctx):
        super().__init__(message, **ctx)
        self.status = status
        self.kind = kind


class RemoteBackendError(RemoteError):
    """Server-side failure (5xx)."""

    kind = "backend"

    def __init__(self, message, *, status=500, **ctx):
        super().__init__(message, **ctx)
        self.status = status
