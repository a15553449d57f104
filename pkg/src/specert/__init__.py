"""Spectral sufficient conditions for graph properties, with exact oracles to check them.

The certifiers bound the spectral radius of a graph's complement and conclude
connectivity, matching, path-cover or Hamiltonian properties. Everything else
in the package exists to validate those conclusions on small graphs.
"""

from .certify import (CertOutcome, CertStatus, HypothesisReport, batch_statuses, certify,
                      check_hypotheses, format_record, radicand)
from .closure import ClosureResult, closure_parameter, k_closure
from .families import (Family, FamilyWitness, MembershipCapExceeded, families_for, gen_EC, gen_EP,
                       gen_ES, gen_union_cliques, membership, validate_witness)
from .formats import GraphFormatError, from_edge_list, from_graph6, parse_graph, to_edge_list, to_graph6
from .graph import (BipartitionWitness, Graph, complement, complete, complete_bipartite, cycle, empty,
                    is_connected, is_regular, is_semiregular_bipartite, join, min_degree, path,
                    petersen, union)
from .harness import (SweepReport, closure_equivalence, enumerate_labeled, exhaustive_sweep,
                      geometric_degree_sweep, sample_gnp, soundness_sweep, tightness_search)
from .oracles import (GraphOracles, OracleCapExceeded, OracleVerdict, deficiency, edge_connectivity,
                      is_hamiltonian, is_beta_deficient, is_s_connected, is_s_edge_connected,
                      is_s_edge_hamiltonian, is_s_hamiltonian, is_s_path_coverable, min_path_cover,
                      oracle, vertex_connectivity)
from .params import Theorem, TheoremParams, valid_params
from .spectral import (BoundComparison, SpectralConvergenceError, SpectralEstimate, Verdict,
                       compare_to_bound, min_edge_geometric_degree, spectral_radius)

__all__ = [
    "BipartitionWitness", "BoundComparison", "CertOutcome", "CertStatus", "ClosureResult", "Family",
    "FamilyWitness", "Graph", "GraphFormatError", "GraphOracles", "HypothesisReport",
    "MembershipCapExceeded", "OracleCapExceeded", "OracleVerdict", "SpectralConvergenceError",
    "SpectralEstimate", "SweepReport", "Theorem", "TheoremParams", "Verdict", "batch_statuses", "certify",
    "check_hypotheses", "closure_equivalence", "closure_parameter", "compare_to_bound", "complement", "complete",
    "complete_bipartite", "cycle", "deficiency", "edge_connectivity", "empty", "enumerate_labeled", "exhaustive_sweep", "families_for",
    "format_record", "from_edge_list", "from_graph6", "gen_EC", "gen_EP", "gen_ES",
    "gen_union_cliques", "geometric_degree_sweep", "is_beta_deficient", "is_connected", "is_hamiltonian", "is_regular",
    "is_s_connected", "is_s_edge_connected", "is_s_edge_hamiltonian", "is_s_hamiltonian",
    "is_s_path_coverable", "is_semiregular_bipartite", "join", "k_closure", "membership",
    "min_degree", "min_edge_geometric_degree", "min_path_cover", "oracle", "parse_graph", "path",
    "petersen", "radicand", "sample_gnp", "soundness_sweep", "spectral_radius", "tightness_search", "to_edge_list", "to_graph6", "union", "valid_params",
    "vertex_connectivity",
]
