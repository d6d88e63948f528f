"""Symbolic basin, commitment-set and phenotype analysis of Boolean networks."""

from .attractors import Attractor, AttractorKind, attractors, import_attractors, steady_states
from .basins import basin_triples, cycle_free_basin, strong_basin, weak_basin
from .ctl import accept, parse_ctl
from .dd import BACKEND, DdManager, ExprStyle, StateSet, to_expression
from .diagrams import (
    commitment_diagram, compute_phenotypes, phenotype_diagram,
    simulate_phenotype_reachability)
from .model import BooleanNetwork, detect_van_ham_pairs, parse_bnet, state_from_string
from .stg import TransitionSystem, UpdateMode, build

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BACKEND",
    "BooleanNetwork",
    "parse_bnet",
    "detect_van_ham_pairs",
    "state_from_string",
    "DdManager",
    "StateSet",
    "ExprStyle",
    "to_expression",
    "build",
    "UpdateMode",
    "TransitionSystem",
    "parse_ctl",
    "accept",
    "steady_states",
    "attractors",
    "import_attractors",
    "Attractor",
    "AttractorKind",
    "weak_basin",
    "strong_basin",
    "cycle_free_basin",
    "basin_triples",
    "commitment_diagram",
    "compute_phenotypes",
    "phenotype_diagram",
    "simulate_phenotype_reachability",
]
