"""Exception hierarchy shared across the package.

Every error that can cross the dispatcher wire protocol is registered in
``WIRE_ERRORS`` so the client can re-raise the class the server caught.
"""

from __future__ import annotations


class SdqnetError(Exception):
    """Base class for all package errors."""


class ConfigError(SdqnetError):
    """Topology or scenario file failed validation.

    ``path`` locates the offending field, e.g. ``qchannels[2].src``.
    """

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class CircuitSyntaxError(SdqnetError):
    """Circuit source rejected by the parser; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class CircuitExecutionError(SdqnetError):
    """Circuit cannot run against the given register (e.g. too few qubits)."""


# --- dispatcher service errors (cross the wire) ---

class DispatcherError(SdqnetError):
    """Base class for request failures reported by the dispatcher."""


class DuplicateNodeError(DispatcherError):
    """A live session already exists for this node id."""


class UnknownNodeError(DispatcherError):
    pass


class UnknownSessionError(DispatcherError):
    pass


class UnknownChannelError(DispatcherError):
    pass


class UnknownQubitError(DispatcherError):
    pass


class NotOwnerError(DispatcherError):
    """Caller's node does not own the referenced qubit."""


class DeadQubitError(DispatcherError):
    """Referenced qubit was measured, released, or lost."""


class HistoryDepthError(DispatcherError):
    """Requested more history than the channel retains."""


# --- classical plane ---

class FlowInstallError(SdqnetError):
    """Flow entry rejected at install time (cycle or unexecutable action)."""


# --- quantum switch ---

class QSwitchError(SdqnetError):
    pass


class PortConflictError(QSwitchError):
    """An active path already claims the requested ingress port."""


class UnknownPortError(QSwitchError):
    pass


class UnknownPathError(QSwitchError):
    """No active path for the given session."""


# --- host stack ---

class HostError(SdqnetError):
    pass


class UnreachableDestinationError(HostError):
    pass


class RetryBudgetExhaustedError(HostError):
    """A transfer gave up after exhausting its per-frame retry budget."""


class ReceiveTimeoutError(HostError):
    """app_recv ran the network to quiescence without a completed inbound message."""


# --- wire protocol ---

class ProtocolError(SdqnetError):
    """Malformed frame or message on the dispatcher wire protocol."""


class RemoteCallError(DispatcherError):
    """Server reported an error code the client does not recognise."""


#: Errors the server may serialize; the client re-raises by code name.
WIRE_ERRORS = {
    cls.__name__: cls
    for cls in (
        DispatcherError,
        DuplicateNodeError,
        UnknownNodeError,
        UnknownSessionError,
        UnknownChannelError,
        UnknownQubitError,
        NotOwnerError,
        DeadQubitError,
        HistoryDepthError,
    )
}
