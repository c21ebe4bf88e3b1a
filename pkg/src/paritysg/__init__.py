"""Exact solvers and exhaustive verification for parity signed graphs."""

from .graphs import (
    FamilySpec,
    Graph,
    Graph6Error,
    complement,
    enumerate_connected_labeled,
    generate,
    is_connected,
    parse_graph6,
    read_graph6_file,
    write_graph6,
)
from .signatures import (
    ParityLabeling,
    ParityPartition,
    SignStats,
    Signature,
    SignedGraph,
    negative_edge_count,
    parity_switch,
    partition_from_labeling,
    recognize_parity_signature,
    sign_stats,
    signature_from_partition,
    switch,
    switch_at_set,
)
from .analysis import (
    PartitionStats,
    Spectrum,
    check_odd_identities,
    enumerate_parity_partitions,
    is_degree_balanced,
    partition_stats,
    spectrum,
)
from .solver import (
    RnaResult,
    graph_with_rna,
    rna_exact_bnb,
    rna_exact_bruteforce,
    rna_switch_descent,
    upper_bound_main,
    upper_bound_trivial,
)
from .verify import (
    VerificationReport,
    classify_family,
    run_corpus,
    verify_complement_theorem,
    verify_conjecture2,
    verify_degree_balance_lemma,
    verify_main_bound,
    verify_trivial_bound,
)

__version__ = "0.1.0"

__all__ = [
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "ParityLabeling",
    "ParityPartition",
    "PartitionStats",
    "RnaResult",
    "SignStats",
    "Signature",
    "SignedGraph",
    "Spectrum",
    "VerificationReport",
    "check_odd_identities",
    "classify_family",
    "complement",
    "enumerate_connected_labeled",
    "enumerate_parity_partitions",
    "generate",
    "graph_with_rna",
    "is_connected",
    "is_degree_balanced",
    "negative_edge_count",
    "parity_switch",
    "parse_graph6",
    "partition_from_labeling",
    "partition_stats",
    "read_graph6_file",
    "recognize_parity_signature",
    "rna_exact_bnb",
    "rna_exact_bruteforce",
    "rna_switch_descent",
    "run_corpus",
    "sign_stats",
    "signature_from_partition",
    "spectrum",
    "switch",
    "switch_at_set",
    "upper_bound_main",
    "upper_bound_trivial",
    "verify_complement_theorem",
    "verify_conjecture2",
    "verify_degree_balance_lemma",
    "verify_main_bound",
    "verify_trivial_bound",
    "write_graph6",
]
