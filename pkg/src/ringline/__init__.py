"""Projective lines over small finite rings and the structures they carry.

The package builds the projective line over the ring of 2x2 matrices with
GF(2) entries, extracts the 15-point sub-configuration seen from two
distant base points, and verifies exactly that this configuration is the
commutation structure of the 15 two-qubit Pauli operators and the
generalized quadrangle of order two, ovoids, spreads, hyperplanes, magic
square and unbiased bases included.  All arithmetic is integer or
rational; nothing here computes with floats.
"""

from .correspondence import (
    CheckResult,
    Report,
    canonical_gq,
    neighbor_graph,
    trinity_report,
    verify_all,
    verify_relation_signs,
    verify_split_9_6,
    verify_split_10_5,
)
from .pauli import (
    PauliOp,
    PhasedPauli,
    commutes,
    mermin_square_check,
    mub_spread_check,
    multiply,
    standard_labeling,
)
from .projline import (
    DISTANT,
    NEIGHBOR,
    Mat2,
    PointClass,
    ProjectiveLine,
    enumerate_line,
    gl2_transitivity_witness,
    simultaneous_subconfig,
)
from .quadrangle import (
    Graph,
    Hyperplane,
    IncidenceStructure,
    build_gq_from_graph,
    enumerate_hyperplanes,
    enumerate_ovoids,
    enumerate_spreads,
    is_petersen,
    petersen_graph,
)
from .rings import Ring, build_small_rings, ring_by_name, units, validate_ring

__version__ = "1.0.0"

__all__ = [
    "__version__",
    "Ring",
    "build_small_rings",
    "ring_by_name",
    "units",
    "validate_ring",
    "DISTANT",
    "NEIGHBOR",
    "Mat2",
    "PointClass",
    "ProjectiveLine",
    "enumerate_line",
    "simultaneous_subconfig",
    "gl2_transitivity_witness",
    "PauliOp",
    "PhasedPauli",
    "commutes",
    "multiply",
    "standard_labeling",
    "mermin_square_check",
    "mub_spread_check",
    "Graph",
    "Hyperplane",
    "IncidenceStructure",
    "build_gq_from_graph",
    "enumerate_hyperplanes",
    "enumerate_ovoids",
    "enumerate_spreads",
    "petersen_graph",
    "is_petersen",
    "CheckResult",
    "Report",
    "neighbor_graph",
    "canonical_gq",
    "verify_relation_signs",
    "verify_split_9_6",
    "verify_split_10_5",
    "trinity_report",
    "verify_all",
]
