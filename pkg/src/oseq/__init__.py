"""Orientable sequences over Z_k.

A cyclic sequence is orientable for window length n when every length-n
window occurs at most once, whether the sequence is read forwards or
backwards.  This package constructs such sequences from antisymmetric
Eulerian subgraphs of de Bruijn digraphs, computes period upper bounds,
and verifies candidate sequences independently of how they were built.
"""

from .bounds import (
    BoundReport,
    ExclusionAudit,
    empirical_exclusion_audit,
    ledger_bound,
    period_upper_bound,
)
from .constructions import (
    ConstructionRecipe,
    Method,
    block_end_difference_graph,
    end_difference_graph,
    expected_period,
    generate,
    lempel_lift,
    lempel_map,
    lempel_preimages,
    lifted_low_pseudoweight_graph,
    low_pseudoweight_graph,
    odd_end_difference_graph,
)
from .errors import (
    ConstructionError,
    DomainError,
    InternalInvariantError,
    ResourceCapError,
)
from .graph import (
    DBSubgraph,
    EulerianCircuit,
    build_subgraph,
    circuit_to_sequence,
    edge_graph_of_sequence,
    eulerian_circuit,
    full_de_bruijn,
    is_antinegasymmetric,
    is_antisymmetric,
    is_balanced,
    is_connected,
    palindrome_free_de_bruijn,
)
from .oracle import (
    Direction,
    LocateResult,
    MutationReport,
    SearchOutcome,
    VerifyResult,
    exhaustive_max_period,
    locate,
    mutation_test,
    verify,
)
from .sequences import (
    OrientableSequence,
    parse_sequence_file,
    read_sequence_file,
    serialize_sequence,
    write_sequence_file,
)
from .tables import TABLE_NAMES, TableCell, TableResult, compute_table
from .tuples import (
    TupleKind,
    ZkTuple,
    count_tuples,
    doubled_pseudoweight,
    is_alternating,
    is_left_semi_symmetric,
    is_right_semi_symmetric,
    is_symmetric,
    is_uniform,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ConstructionError",
    "ConstructionRecipe",
    "DBSubgraph",
    "Direction",
    "DomainError",
    "EulerianCircuit",
    "ExclusionAudit",
    "InternalInvariantError",
    "LocateResult",
    "Method",
    "MutationReport",
    "OrientableSequence",
    "ResourceCapError",
    "SearchOutcome",
    "TABLE_NAMES",
    "TableCell",
    "TableResult",
    "TupleKind",
    "VerifyResult",
    "ZkTuple",
    "block_end_difference_graph",
    "build_subgraph",
    "circuit_to_sequence",
    "compute_table",
    "count_tuples",
    "doubled_pseudoweight",
    "edge_graph_of_sequence",
    "empirical_exclusion_audit",
    "end_difference_graph",
    "eulerian_circuit",
    "exhaustive_max_period",
    "expected_period",
    "full_de_bruijn",
    "generate",
    "is_alternating",
    "is_antinegasymmetric",
    "is_antisymmetric",
    "is_balanced",
    "is_connected",
    "is_left_semi_symmetric",
    "is_right_semi_symmetric",
    "is_symmetric",
    "is_uniform",
    "ledger_bound",
    "lempel_lift",
    "lempel_map",
    "lempel_preimages",
    "lifted_low_pseudoweight_graph",
    "locate",
    "low_pseudoweight_graph",
    "mutation_test",
    "odd_end_difference_graph",
    "palindrome_free_de_bruijn",
    "parse_sequence_file",
    "period_upper_bound",
    "read_sequence_file",
    "serialize_sequence",
    "verify",
    "write_sequence_file",
]
