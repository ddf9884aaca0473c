"""Enumeration of minimal hyperpaths in directed B-hypergraphs, with brute-force
oracles and the hardness reductions for induced hyperpaths and separators."""

from .connectivity import (
    HyperpathInstance,
    b_connected_set,
    check_hyperpath,
    find_minimal_hyperpath,
    is_b_connected,
    verify_hyperpath,
)
from .enumerator import (
    EnumerationStats,
    all_hyperpaths,
    contract,
    enum_hyperpaths,
    enum_two_terminal,
    iter_hyperpaths,
)
from .formats import parse_cnf, parse_dhg, parse_hg, serialize_cnf, serialize_dhg, serialize_hg
from .hypergraph import DirectedHypergraph, Hyperarc, build_hypergraph, from_arcs
from .oracles import (
    UndirectedHypergraph,
    oracle_hyperpaths,
    oracle_induced_hyperpaths,
    oracle_minimal_separators,
    oracle_minimal_transversals,
)
from .reductions import CnfFormula, reduce_sat_induced, reduce_sat_separator, reduce_transversal

__version__ = "0.1.0"
