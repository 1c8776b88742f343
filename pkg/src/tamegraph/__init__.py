"""Minimal separators, potential maximal cliques and modules of small graphs,
with an enumerator for P6-free graphs of bounded clique number."""
from .bounds import BoundsReport, verify_bounds
from .errors import (
    BoundViolationError,
    GraphInputError,
    LemmaViolationError,
    OracleLimitError,
    ParseError,
)
from .generators import GenSpec, complete, cycle, edgeless, gnp, path, prism
from .graph import Graph, complement, components, induced, neighborhood
from .io import parse_graph, to_graph6
from .modular import (
    ModuleRecord,
    connected_modules,
    is_module,
    maximal_proper_strong_modules,
    minimal_strong_container,
    strong_modules,
)
from .mwis import WeightedGraph, mwis_brute, mwis_pmc
from .pmc import PmcRecord, enumerate_pmcs_brute, enumerate_pmcs_from_minseps, is_pmc
from .recognition import clique_number, find_induced_path, is_pt_free
from .separators import (
    QCover,
    SeparatorRecord,
    build_q_cover,
    enumerate_minseps_brute,
    enumerate_minseps_generic,
    enumerate_minseps_p6free,
    full_components,
    is_minimal_separator,
    lemma_nei_witness,
)

__version__ = "0.1.0"
