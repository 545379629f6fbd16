"""Exact graph invariants, complete-minor models and order bounds in terms of
the stability and Hadwiger numbers."""
from .bounds import BOUND_IDS, best_bound, check_graph, eval_bound, verify_corpus
from .domset import DomSetTrace, grow_dominating_set, verify_domset_trace
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    bfs_distances,
    complement,
    connected_components,
    contract_set,
    delete_vertices,
    induced_subgraph,
    parse_graph6,
    random_gnp,
    write_graph6,
)
from .invariants import (
    Claw,
    InvariantReport,
    SearchBudgetExceeded,
    chromatic_number,
    clique_number,
    compute_invariants,
    find_claw,
    hadwiger_number,
    kt_minor_model,
    stability_number,
)
from .minors import PeelResult, compose_model, peel_minor
from .model import MinorModel, verify_minor_model

__version__ = "0.1.0"
