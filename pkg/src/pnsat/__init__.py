"""Construction and exhaustive verification of P_n-induced-saturated graphs."""

__version__ = "0.1.0"

from ._backend import BACKEND
from .construction import (
    DihedralMap,
    GnLabel,
    LabeledGn,
    apply_automorphism,
    build_gn,
    label_of,
    vertex_of,
)
from .enumeration import ScanSummary, exhaust_labeled, scan_stream
from .graph import (
    CapacityError,
    DomainError,
    Edge,
    Graph,
    Graph6Error,
    InvalidEdgeError,
    complement,
    emit_graph6,
    is_isomorphic,
    new_graph,
    parse_graph6,
    petersen_graph,
    toggle_edge,
)
from .induced_path import find_induced_path, is_induced_path, longest_induced_path
from .saturation import (
    EdgeCase,
    VerificationReport,
    WitnessConsistencyError,
    classify_edge,
    paper_witness,
    verify_h_is,
    verify_pn_is,
)
