"""Maximal nilpotent Jordan types inside centralizers, with a sampling oracle."""

__version__ = "0.1.0"

from .basis_graph import (
    BasisLabel,
    BGraph,
    build_graph,
    ll_compare,
    prec_compare,
    relates,
    render_graph,
)
from .centralizer import (
    VARIANTS,
    conjugate_by_permutation,
    jordan_matrix,
    mask,
    prec_permutation,
    realize,
    sample,
    structured_nilpotency,
    subalgebra_spec,
)
from .fieldmat import (
    FieldMatrix,
    PhiMap,
    RankProfile,
    jordan_type,
    phi_map,
    phi_rank_prediction,
    rank,
    rank_profile,
)
from .maxtype import HatSelection, QChain, hat, hat_with, omega1, q_of, select_hat
from .oracle import AuditSummary, Verdict, VerifyReport, audit_range, verify
from .partitions import (
    ArDecomposition,
    Ordering,
    Partition,
    RunEncoding,
    ar_decomposition,
    dominance,
    enumerate_partitions,
    format_partition,
    is_almost_rectangular,
    parse_partition,
    power_type,
    run_encoding,
    s_max,
    tilde,
)

__all__ = [
    "__version__",
    "ArDecomposition",
    "AuditSummary",
    "BGraph",
    "BasisLabel",
    "FieldMatrix",
    "HatSelection",
    "Ordering",
    "Partition",
    "PhiMap",
    "QChain",
    "RankProfile",
    "RunEncoding",
    "VARIANTS",
    "Verdict",
    "VerifyReport",
    "ar_decomposition",
    "audit_range",
    "build_graph",
    "conjugate_by_permutation",
    "dominance",
    "enumerate_partitions",
    "format_partition",
    "hat",
    "hat_with",
    "is_almost_rectangular",
    "jordan_matrix",
    "jordan_type",
    "ll_compare",
    "mask",
    "omega1",
    "parse_partition",
    "phi_map",
    "phi_rank_prediction",
    "power_type",
    "prec_compare",
    "prec_permutation",
    "q_of",
    "rank",
    "rank_profile",
    "realize",
    "relates",
    "render_graph",
    "run_encoding",
    "s_max",
    "sample",
    "select_hat",
    "structured_nilpotency",
    "subalgebra_spec",
    "tilde",
    "verify",
]
