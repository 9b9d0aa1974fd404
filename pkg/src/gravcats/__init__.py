"""Thermal quantum correlations of two gravitationally coupled cat states.

Closed-form Gibbs states, Wootters concurrence, and l1-norm coherence for a
pair of double-well qubits coupled by Newtonian gravity, with threshold
temperature and extremum search, a brute-force validation path, and a CSV
producing command-line interface.
"""

from .analysis import (
    CoherenceMaximum,
    MaximumStatus,
    Spacing,
    SweepRow,
    SweepSpec,
    ThresholdResult,
    ThresholdStatus,
    coherence_maximum,
    sweep,
    threshold_temperature,
)
from .correlations import (
    Branch,
    CorrelationReport,
    L1Coherence,
    concurrence_x,
    l1_coherence,
    report,
)
from .model import (
    DeltaConvention,
    Eigensystem,
    ModelParams,
    PhysicalSetup,
    UnitMode,
    eigensystem,
    params_from_physical,
)
from .thermal import ThermalState, partition_function, thermal_state

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "CoherenceMaximum",
    "CorrelationReport",
    "DeltaConvention",
    "Eigensystem",
    "L1Coherence",
    "MaximumStatus",
    "ModelParams",
    "PhysicalSetup",
    "Spacing",
    "SweepRow",
    "SweepSpec",
    "ThermalState",
    "ThresholdResult",
    "ThresholdStatus",
    "UnitMode",
    "coherence_maximum",
    "concurrence_x",
    "eigensystem",
    "l1_coherence",
    "params_from_physical",
    "partition_function",
    "report",
    "sweep",
    "thermal_state",
    "threshold_temperature",
]
