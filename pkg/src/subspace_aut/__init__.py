"""Subspace inclusion graphs In(F_q^n) and their automorphisms."""

from .automorphisms import (
    DecompositionTrace,
    StandardAutomorphism,
    aut_order,
    chi_perm,
    compose,
    decompose,
    is_automorphism,
    normalize_matrix,
    std_to_perm,
    tau_perm,
    theta_perm,
)
from .bruteforce import enumerate_automorphisms
from .errors import DomainError, IntegrityError, UnsupportedError, UsageError
from .field import FieldElement, FieldSpec, parse_field
from .graph import (
    INF,
    InclusionGraph,
    build_graph,
    dimension_coloring,
    expected_degree,
    gaussian_binomial,
    graph_invariants,
)
from .subspaces import Subspace, canonicalize, enumerate_subspaces, perp, standard_rep

__version__ = "0.1.0"
