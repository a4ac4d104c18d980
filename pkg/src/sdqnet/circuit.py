"""Line-oriented circuit description language (``.qc`` files).

Grammar, one statement per line; ``#`` starts a comment; blank lines are
ignored; mnemonics are case-insensitive; tokens are whitespace-separated::

    qubits N            header, required first statement
    h Q | s Q | x Q | y Q | z Q
    cx C T
    measure Q [-> LABEL]

The dispatcher emits programs in this grammar for its debug dumps, and
the same text form is the on-disk fixture format for tests and the CLI.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .errors import CircuitExecutionError, CircuitSyntaxError
from .stabilizer import GateKind, GateOp, MeasurementRecord, StabilizerTableau

_MNEMONICS = {
    "h": GateKind.H,
    "s": GateKind.S,
    "x": GateKind.X,
    "y": GateKind.Y,
    "z": GateKind.Z,
    "cx": GateKind.CNOT,
    "measure": GateKind.MEASURE,
}

_LABEL_RE = re.compile(r"^[A-Za-z_]\w*$")


@dataclass(frozen=True)
class Circuit:
    """A parsed program: qubit count plus an ordered operator list.

    ``measure_labels`` maps op index -> label for labelled measurements.
    """

    qubit_count: int
    ops: tuple[GateOp, ...]
    measure_labels: dict[int, str] = field(default_factory=dict)


def _parse_int(token: str, lineno: int, what: str) -> int:
    try:
        value = int(token, 10)
    except ValueError:
        raise CircuitSyntaxError(lineno, f"malformed integer {token!r} for {what}") from None
    if value < 0:
        raise CircuitSyntaxError(lineno, f"{what} must be non-negative, got {token}")
    return value


def parse(text: str) -> Circuit:
    """Parse circuit source text; raises CircuitSyntaxError with a line number."""
    qubit_count: int | None = None
    ops: list[GateOp] = []
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        mnemonic = tokens[0].lower()
        if mnemonic == "qubits":
            if qubit_count is not None:
                raise CircuitSyntaxError(lineno, "duplicate 'qubits' header")
            if len(tokens) != 2:
                raise CircuitSyntaxError(lineno, "'qubits' takes exactly one count")
            qubit_count = _parse_int(tokens[1], lineno, "qubit count")
            continue
        if qubit_count is None:
            raise CircuitSyntaxError(lineno, "missing 'qubits' header before first statement")
        kind = _MNEMONICS.get(mnemonic)
        if kind is None:
            raise CircuitSyntaxError(lineno, f"unknown mnemonic {tokens[0]!r}")
        if kind is GateKind.CNOT:
            if len(tokens) != 3:
                raise CircuitSyntaxError(lineno, "cx takes exactly two qubit operands")
            targets = (
                _parse_int(tokens[1], lineno, "control qubit"),
                _parse_int(tokens[2], lineno, "target qubit"),
            )
            if targets[0] == targets[1]:
                raise CircuitSyntaxError(lineno, "cx control and target must differ")
        elif kind is GateKind.MEASURE:
            if len(tokens) not in (2, 4):
                raise CircuitSyntaxError(lineno, "measure takes one qubit and an optional '-> label'")
            targets = (_parse_int(tokens[1], lineno, "measured qubit"),)
            if len(tokens) == 4:
                if tokens[2] != "->":
                    raise CircuitSyntaxError(lineno, "expected '->' before measure label")
                if not _LABEL_RE.match(tokens[3]):
                    raise CircuitSyntaxError(lineno, f"bad measure label {tokens[3]!r}")
                labels[len(ops)] = tokens[3]
        else:
            if len(tokens) != 2:
                raise CircuitSyntaxError(lineno, f"{mnemonic} takes exactly one qubit operand")
            targets = (_parse_int(tokens[1], lineno, "qubit"),)
        for t in targets:
            if t >= qubit_count:
                raise CircuitSyntaxError(
                    lineno, f"qubit index {t} out of range (qubits {qubit_count})"
                )
        ops.append(GateOp(kind, targets))
    if qubit_count is None:
        raise CircuitSyntaxError(len(text.splitlines()) or 1, "missing 'qubits' header")
    return Circuit(qubit_count, tuple(ops), labels)


def render(circuit: Circuit) -> str:
    """Render a circuit back to source text; inverse of parse() on its grammar."""
    lines = [f"qubits {circuit.qubit_count}"]
    for idx, op in enumerate(circuit.ops):
        if op.kind is GateKind.CNOT:
            lines.append(f"cx {op.targets[0]} {op.targets[1]}")
        elif op.kind is GateKind.MEASURE:
            label = circuit.measure_labels.get(idx)
            suffix = f" -> {label}" if label else ""
            lines.append(f"measure {op.targets[0]}{suffix}")
        else:
            lines.append(f"{op.kind.value} {op.targets[0]}")
    return "\n".join(lines) + "\n"


def execute(
    circuit: Circuit,
    tableau: StabilizerTableau,
    rng: np.random.Generator,
) -> list[MeasurementRecord]:
    """Run a circuit against a register, in source order.

    The tableau must hold at least ``circuit.qubit_count`` qubits; it is
    mutated in place. Measurement records come back in execution order,
    carrying any labels from the source.
    """
    if circuit.qubit_count > tableau.n:
        raise CircuitExecutionError(
            f"circuit needs {circuit.qubit_count} qubits, register has {tableau.n}"
        )
    records: list[MeasurementRecord] = []
    for idx, op in enumerate(circuit.ops):
        if op.kind is GateKind.MEASURE:
            rec = tableau.measure(op.targets[0], rng)
            label = circuit.measure_labels.get(idx)
            if label is not None:
                rec = MeasurementRecord(rec.qubit, rec.outcome, rec.deterministic, label)
            records.append(rec)
        else:
            tableau.apply_gate(op)
    return records


def load(path) -> Circuit:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())
