"""Pauli/loss channel models with history-dependent parameter scaling.

A channel is parameterised by independent X, Y, Z and loss probabilities.
Recent traffic on the channel can raise them: the memory model multiplies
every probability by ``min(cap, load_factor ** k)`` where ``k`` counts
prior transmissions inside the look-back window. That functional form is
a deliberately simple, pluggable stand-in for load-dependent decoherence;
every magnitude is configuration, not a physical claim.

All functions are pure: state (history, rng) is passed in explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .stabilizer import GateKind, GateOp, StabilizerTableau


class ChannelError(Enum):
    NONE = "none"
    X = "x"
    Y = "y"
    Z = "z"
    LOSS = "loss"


#: Dibit flip caused by each Pauli error on one transmitted qubit:
#: X flips b0, Z flips b1, Y flips both.
DIBIT_FLIP: dict[ChannelError, tuple[int, int]] = {
    ChannelError.NONE: (0, 0),
    ChannelError.X: (0, 1),
    ChannelError.Z: (1, 0),
    ChannelError.Y: (1, 1),
}

_ERROR_GATE = {
    ChannelError.X: GateKind.X,
    ChannelError.Y: GateKind.Y,
    ChannelError.Z: GateKind.Z,
}


@dataclass(frozen=True)
class PauliChannelParams:
    p_x: float = 0.0
    p_y: float = 0.0
    p_z: float = 0.0
    p_loss: float = 0.0

    def validate(self):
        for name in ("p_x", "p_y", "p_z", "p_loss"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0):
                raise ValueError(f"{name}={v} outside [0, 1]")
        if self.total > 1.0 + 1e-12:
            raise ValueError(f"error probabilities sum to {self.total} > 1")

    @property
    def total(self) -> float:
        return self.p_x + self.p_y + self.p_z + self.p_loss

    @property
    def is_noiseless(self) -> bool:
        return self.total == 0.0


@dataclass(frozen=True)
class MemoryModel:
    """Load-dependent scaling of channel error probabilities.

    ``window``: look-back span in simulated ticks (0 disables the effect);
    ``load_factor``: multiplier applied once per in-window transmission;
    ``cap``: upper bound on the accumulated multiplier.
    """

    window: int = 0
    load_factor: float = 1.0
    cap: float = 1.0

    def __post_init__(self):
        if self.window < 0:
            raise ValueError("window must be >= 0")
        if self.load_factor < 1.0:
            raise ValueError("load_factor must be >= 1")
        if self.cap < 1.0:
            raise ValueError("cap must be >= 1")


def effective_params(
    base: PauliChannelParams,
    memory: MemoryModel,
    history: Iterable,
    now: int,
) -> PauliChannelParams:
    """Channel parameters after accounting for recent traffic.

    ``history`` is any iterable of records with a ``timestamp`` attribute;
    records with ``now - window < timestamp <= now`` count toward the load.
    Scaled probabilities are clamped proportionally only when their sum
    would exceed 1.
    """
    k = sum(1 for rec in history if now - memory.window < rec.timestamp <= now)
    scale = min(memory.cap, memory.load_factor ** k)
    if scale == 1.0:
        return base
    p = [base.p_x * scale, base.p_y * scale, base.p_z * scale, base.p_loss * scale]
    total = sum(p)
    if total > 1.0:
        p = [v / total for v in p]
    return PauliChannelParams(*p)


def sample_error(params: PauliChannelParams, rng: np.random.Generator) -> ChannelError:
    """Draw one channel error; NONE with probability 1 - sum(params)."""
    params.validate()
    u = rng.random()
    edge = params.p_x
    if u < edge:
        return ChannelError.X
    edge += params.p_y
    if u < edge:
        return ChannelError.Y
    edge += params.p_z
    if u < edge:
        return ChannelError.Z
    edge += params.p_loss
    if u < edge:
        return ChannelError.LOSS
    return ChannelError.NONE


def apply_error(tableau: StabilizerTableau, q: int, error: ChannelError) -> bool:
    """Apply a sampled error to qubit ``q`` in place.

    Returns True when the error is LOSS, signalling the caller to destroy
    the qubit; Pauli errors are applied as gates and NONE is the identity.
    """
    if error is ChannelError.LOSS:
        return True
    if error is not ChannelError.NONE:
        tableau.apply_gate(GateOp(_ERROR_GATE[error], (q,)))
    return False
