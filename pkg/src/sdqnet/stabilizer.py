"""Stabilizer-tableau simulator for Clifford circuits.

The global quantum state of the emulated network lives in one
:class:`StabilizerTableau`: 2n binary Pauli generators (n destabilizers,
n stabilizers) over an n-qubit register, per the tableau algorithm of
Aaronson & Gottesman (arXiv:quant-ph/0406196).

Tableau layout::

    rows 0 .. n-1    destabilizers
    rows n .. 2n-1   stabilizers
    x[i, j], z[i, j] X / Z component of generator i on qubit j
    r[i]             sign bit (0 -> +1, 1 -> -1)

Supported gates: H, S, X, Y, Z, CNOT. Y is defined as Z followed by X
with the global phase discarded; phase is unobservable here and the
conjugation action on every Pauli matches the true Y exactly. Measurement
is in the computational basis; a joint Bell-basis measurement of a qubit
pair is provided for the dense-coding receiver.

The tableau is a single-threaded value: it makes no thread-safety
promises and is only ever mutated by its owning service.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._kernels import get_backend


class GateKind(Enum):
    H = "h"
    S = "s"
    X = "x"
    Y = "y"
    Z = "z"
    CNOT = "cx"
    MEASURE = "measure"


#: Gate kinds acting on exactly one qubit.
ONE_QUBIT_KINDS = frozenset(
    {GateKind.H, GateKind.S, GateKind.X, GateKind.Y, GateKind.Z, GateKind.MEASURE}
)


@dataclass(frozen=True)
class GateOp:
    """One operation in a circuit: a unitary gate or a measurement."""

    kind: GateKind
    targets: tuple[int, ...]

    def __post_init__(self):
        if self.kind is GateKind.CNOT:
            if len(self.targets) != 2:
                raise ValueError("CNOT takes exactly two targets")
            if self.targets[0] == self.targets[1]:
                raise ValueError("CNOT control and target must differ")
        elif len(self.targets) != 1:
            raise ValueError(f"{self.kind.name} takes exactly one target")
        if any(t < 0 for t in self.targets):
            raise ValueError("qubit indices must be non-negative")


@dataclass(frozen=True)
class MeasurementRecord:
    """Outcome of a single computational-basis measurement.

    ``deterministic`` means the pre-measurement state already fixed the
    outcome; repeating the measurement yields the same bit.
    """

    qubit: int
    outcome: int
    deterministic: bool
    label: str | None = None


class StabilizerTableau:
    """Mutable stabilizer state of an n-qubit register, initially |0...0>."""

    __slots__ = ("n", "x", "z", "r", "_k")

    def __init__(self, n: int = 0, kernels=None):
        if n < 0:
            raise ValueError("qubit count must be >= 0")
        self.n = n
        self.x = np.zeros((2 * n, n), dtype=np.uint8)
        self.z = np.zeros((2 * n, n), dtype=np.uint8)
        self.r = np.zeros(2 * n, dtype=np.uint8)
        for i in range(n):
            self.x[i, i] = 1          # destabilizer i = X_i
            self.z[n + i, i] = 1      # stabilizer i  = Z_i
        self._k = kernels if kernels is not None else get_backend()

    @property
    def backend_name(self) -> str:
        return self._k.name

    def copy(self) -> "StabilizerTableau":
        t = StabilizerTableau.__new__(StabilizerTableau)
        t.n = self.n
        t.x = self.x.copy()
        t.z = self.z.copy()
        t.r = self.r.copy()
        t._k = self._k
        return t

    def extend_by(self, k: int) -> "StabilizerTableau":
        """Grow the register by ``k`` fresh qubits in |0>, unentangled.

        Existing generators are embedded unchanged, so all prior
        measurement statistics are preserved. Returns self.
        """
        if k < 1:
            raise ValueError("extend_by requires k >= 1")
        n, m = self.n, self.n + k
        x = np.zeros((2 * m, m), dtype=np.uint8)
        z = np.zeros((2 * m, m), dtype=np.uint8)
        r = np.zeros(2 * m, dtype=np.uint8)
        x[:n, :n] = self.x[:n]
        z[:n, :n] = self.z[:n]
        x[m:m + n, :n] = self.x[n:]
        z[m:m + n, :n] = self.z[n:]
        r[:n] = self.r[:n]
        r[m:m + n] = self.r[n:]
        for j in range(k):
            x[n + j, n + j] = 1
            z[m + n + j, n + j] = 1
        self.n, self.x, self.z, self.r = m, x, z, r
        return self

    def _check_index(self, q: int):
        if not (0 <= q < self.n):
            raise IndexError(f"qubit index {q} out of range for n={self.n}")

    def apply_gate(self, op: GateOp) -> "StabilizerTableau":
        """Apply a unitary gate in place. MEASURE is rejected; use measure()."""
        if op.kind is GateKind.MEASURE:
            raise ValueError("apply_gate does not accept MEASURE")
        for t in op.targets:
            self._check_index(t)
        k = self._k
        if op.kind is GateKind.CNOT:
            k.cnot(self.x, self.z, self.r, op.targets[0], op.targets[1])
        else:
            getattr(k, op.kind.value)(self.x, self.z, self.r, op.targets[0])
        return self

    def measure(self, q: int, rng: np.random.Generator) -> MeasurementRecord:
        """Measure qubit ``q`` in the computational basis.

        If some stabilizer anticommutes with Z_q the outcome is a fair
        coin drawn from ``rng`` and the state collapses; otherwise the
        outcome is determined and the state is untouched.
        """
        self._check_index(q)
        k = self._k
        p = k.first_anticommuting(self.x, q)
        if p >= 0:
            coin = int(rng.integers(0, 2))
            outcome = k.measure_random(self.x, self.z, self.r, q, p, coin)
            return MeasurementRecord(q, int(outcome), deterministic=False)
        outcome = k.measure_deterministic(self.x, self.z, self.r, q)
        return MeasurementRecord(q, int(outcome), deterministic=True)

    def bell_measure(self, q1: int, q2: int, rng: np.random.Generator) -> tuple[int, int]:
        """Joint Bell-basis measurement of ``(q1, q2)``; destroys entanglement.

        Basis change is CNOT(q1, q2) then H(q1); the returned pair is
        ``(b1, b0) = (measure q1, measure q2)``. With this convention the
        four Bell states map to |Phi+> -> (0,0), |Psi+> -> (0,1),
        |Phi-> -> (1,0), |Psi-> -> (1,1).
        """
        self._check_index(q1)
        self._check_index(q2)
        if q1 == q2:
            raise ValueError("bell_measure requires two distinct qubits")
        self.apply_gate(GateOp(GateKind.CNOT, (q1, q2)))
        self.apply_gate(GateOp(GateKind.H, (q1,)))
        b1 = self.measure(q1, rng).outcome
        b0 = self.measure(q2, rng).outcome
        return b1, b0

    # -- diagnostics -------------------------------------------------------

    def check_invariants(self):
        """Raise AssertionError unless the tableau is well formed.

        Checks: stabilizers pairwise commute, destabilizer i anticommutes
        with stabilizer i and commutes with the others, and the 2n
        generators are independent over GF(2). Intended for tests and
        debug assertions, not hot paths.
        """
        n = self.n
        if n == 0:
            return
        x = self.x.astype(np.int64)
        z = self.z.astype(np.int64)
        # Symplectic products of all row pairs: rows i, j anticommute iff odd.
        sym = (x @ z.T + z @ x.T) & 1
        stab = sym[n:, n:]
        assert not stab.any(), "stabilizer rows must pairwise commute"
        cross = sym[:n, n:]
        assert (cross == np.eye(n, dtype=np.int64)).all(), (
            "destabilizer i must anticommute with stabilizer i only"
        )
        assert _gf2_rank(np.concatenate([x, z], axis=1)) == 2 * n, (
            "generator set must have full rank over GF(2)"
        )

    def stabilizer_strings(self) -> list[str]:
        """Human-readable stabilizer generators, qubit 0 leftmost."""
        out = []
        for i in range(self.n, 2 * self.n):
            sign = "-" if self.r[i] else "+"
            chars = []
            for j in range(self.n):
                bit = (int(self.x[i, j]) << 1) | int(self.z[i, j])
                chars.append("IZXY"[bit])
            out.append(sign + "".join(chars))
        return out

    def __repr__(self):
        return f"StabilizerTableau(n={self.n}, backend={self._k.name})"


def _gf2_rank(m: np.ndarray) -> int:
    m = m.astype(np.uint8).copy()
    rank = 0
    rows, cols = m.shape
    for c in range(cols):
        pivots = np.nonzero(m[rank:, c])[0]
        if pivots.size == 0:
            continue
        p = rank + pivots[0]
        m[[rank, p]] = m[[p, rank]]
        hits = np.nonzero(m[:, c])[0]
        for h in hits:
            if h != rank:
                m[h] ^= m[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def new_tableau(n: int, kernels=None) -> StabilizerTableau:
    """Fresh |0...0> register; n=0 yields an empty, extendable tableau."""
    return StabilizerTableau(n, kernels=kernels)
