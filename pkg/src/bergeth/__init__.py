"""Uniformity thresholds of Berge hypergraphs: exact small-case machinery.

The package computes, at desk scale, everything needed to bound the
uniformity threshold th(F): Berge-copy detection with witnesses, shadow
graphs and heavy/light edge profiles, admissible-partition lower bounds,
exact two-colour Ramsey numbers by exhaustive search, brute-force Turan-type
extremal values, and a composer that reports the best [lower, upper]
interval for th(F) with full provenance.
"""

from .budget import SearchBudget
from .errors import (
    BergethError,
    ContractError,
    Graph6Error,
    GuardError,
    HypergraphFormatError,
)
from .graphs import (
    FamilySpec,
    Graph,
    automorphism_count,
    canonical_form,
    canonical_permutation,
    chromatic_number,
    complete_graph,
    connected_components,
    contains_copy,
    count_copies,
    count_embeddings,
    edge_deletion_representatives,
    edge_deletions_up_to_iso,
    encode_graph6,
    has_homomorphism,
    is_bipartite,
    is_connected,
    is_isomorphic,
    make_family,
    optimal_coloring,
    parse_graph6,
)

__version__ = "0.1.0"
