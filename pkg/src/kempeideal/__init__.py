"""Kempe equivalence of graph colorings via binomial ideals and Gröbner bases."""
from .errors import DomainError, InconsistencyError, KempeError, ResourceLimitError
from .graph import Coloring, Graph, KempeStep, enumerate_stable_sets, kempe_switch
from .ideals import algorithm1_K, classify_chain, groebner, ideal_spec
from .kempe import (are_equivalent, class_count, enumerate_class, hilbert, hilbert_series,
                    kempe_basis, representative_system, switching_sequence)

__version__ = "0.1.0"

__all__ = [
    "Coloring", "DomainError", "Graph", "InconsistencyError", "KempeError", "KempeStep",
    "ResourceLimitError", "algorithm1_K", "are_equivalent", "class_count", "classify_chain",
    "enumerate_class", "enumerate_stable_sets", "groebner", "hilbert", "hilbert_series",
    "ideal_spec", "kempe_basis", "kempe_switch", "representative_system", "switching_sequence",
]
