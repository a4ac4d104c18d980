"""sdqnet: a desk-scale emulator of an SDN-controlled quantum network.

Classical hosts and flow-table switches, a controller that programs a
coherence-preserving quantum switch, and a centralized dispatcher that
owns all simulated quantum state in one stabilizer tableau — demonstrated
end to end by superdense coding over noisy entangled channels.
"""

__version__ = "0.1.0"

from .stabilizer import GateKind, GateOp, MeasurementRecord, StabilizerTableau, new_tableau

__all__ = [
    "GateKind",
    "GateOp",
    "MeasurementRecord",
    "StabilizerTableau",
    "new_tableau",
    "__version__",
]
