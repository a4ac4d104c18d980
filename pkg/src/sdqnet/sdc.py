"""Superdense-coding codec: dibit <-> Pauli operator <-> Bell state.

A registered encoding scheme is a bijection from the four two-bit symbols
to the operators {I, X, Z, XZ} applied to the sender's half of a shared
|Phi+> pair. The joint Bell measurement at the receiver (see
``StabilizerTableau.bell_measure``) maps the resulting Bell state back to
a bit pair; composing the two gives the decode table.

Scheme 1 is the default assignment 00->I, 01->X, 10->Z, 11->XZ, under
which decoding is the identity on the measured (b1, b0). Alternative
bijections can be registered to exercise middleware swappability.

The optional repetition-3 code (``fec_encode``/``fec_decode``) lives in
the classical data-processing layer: it triples each dibit and majority
votes per bit lane, trading throughput for resilience to symbol errors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SdqnetError
from .stabilizer import GateKind

Dibit = tuple[int, int]  # (b1, b0)

#: Operator applied by an X/Y/Z/"XZ" label, in application order.
OPERATOR_GATES: dict[str, tuple[GateKind, ...]] = {
    "I": (),
    "X": (GateKind.X,),
    "Z": (GateKind.Z,),
    "XZ": (GateKind.Z, GateKind.X),  # Z first, then X
}

#: Bell-measurement outcome produced by each operator acting on |Phi+>.
#: Fixed physics of the measurement convention, independent of scheme.
BELL_OUTCOME_FOR_OPERATOR: dict[str, Dibit] = {
    "I": (0, 0),
    "X": (0, 1),
    "Z": (1, 0),
    "XZ": (1, 1),
}

ALL_DIBITS: tuple[Dibit, ...] = ((0, 0), (0, 1), (1, 0), (1, 1))


class UnknownSchemeError(SdqnetError):
    pass


@dataclass(frozen=True)
class EncodingScheme:
    """A dibit->operator bijection plus its derived decode table."""

    scheme_id: int
    operator_for: dict[Dibit, str]
    dibit_for_outcome: dict[Dibit, Dibit]


_REGISTRY: dict[int, EncodingScheme] = {}


def register_scheme(scheme_id: int, operator_for: dict[Dibit, str]) -> EncodingScheme:
    """Register a scheme; the mapping must be a bijection onto {I, X, Z, XZ}."""
    if sorted(operator_for.keys()) != sorted(ALL_DIBITS):
        raise ValueError("scheme must map exactly the four dibits")
    if sorted(operator_for.values()) != sorted(OPERATOR_GATES.keys()):
        raise ValueError("scheme must use each of I, X, Z, XZ exactly once")
    decode = {
        BELL_OUTCOME_FOR_OPERATOR[op]: dibit for dibit, op in operator_for.items()
    }
    scheme = EncodingScheme(scheme_id, dict(operator_for), decode)
    _REGISTRY[scheme_id] = scheme
    return scheme


def scheme_registered(scheme_id: int) -> bool:
    return scheme_id in _REGISTRY


def get_scheme(scheme_id: int) -> EncodingScheme:
    try:
        return _REGISTRY[scheme_id]
    except KeyError:
        raise UnknownSchemeError(f"encoding scheme {scheme_id} is not registered") from None


def registered_schemes() -> list[EncodingScheme]:
    return [_REGISTRY[k] for k in sorted(_REGISTRY)]


def encode(scheme_id: int, dibit: Dibit) -> str:
    """Operator label the sender applies to its retained half for ``dibit``."""
    return get_scheme(scheme_id).operator_for[dibit]


def decode(scheme_id: int, outcome: Dibit) -> Dibit:
    """Dibit recovered from a Bell-measurement outcome ``(b1, b0)``."""
    return get_scheme(scheme_id).dibit_for_outcome[outcome]


register_scheme(1, {(0, 0): "I", (0, 1): "X", (1, 0): "Z", (1, 1): "XZ"})


# --- byte <-> dibit framing (big-endian within each byte) ---

def dibits_from_bytes(data: bytes) -> list[Dibit]:
    out: list[Dibit] = []
    for byte in data:
        for shift in (6, 4, 2, 0):
            pair = (byte >> shift) & 0b11
            out.append((pair >> 1, pair & 1))
    return out


def bytes_from_dibits(dibits: list[Dibit]) -> bytes:
    if len(dibits) % 4:
        raise ValueError("dibit count must be a multiple of 4")
    out = bytearray()
    for i in range(0, len(dibits), 4):
        byte = 0
        for b1, b0 in dibits[i:i + 4]:
            byte = (byte << 2) | (b1 << 1) | b0
        out.append(byte)
    return bytes(out)


# --- repetition-3 forward error correction ---

def fec_encode(dibits: list[Dibit]) -> list[Dibit]:
    """Triple each dibit: d -> d d d."""
    out: list[Dibit] = []
    for d in dibits:
        out.extend((d, d, d))
    return out


def fec_decode(dibits: list[Dibit]) -> list[Dibit]:
    """Majority vote per bit lane over each consecutive triple."""
    if len(dibits) % 3:
        raise ValueError("fec_decode input length must be divisible by 3")
    out: list[Dibit] = []
    for i in range(0, len(dibits), 3):
        triple = dibits[i:i + 3]
        b1 = 1 if sum(d[0] for d in triple) >= 2 else 0
        b0 = 1 if sum(d[1] for d in triple) >= 2 else 0
        out.append((b1, b0))
    return out
