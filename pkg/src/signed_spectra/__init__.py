"""Spectral analysis of signed graphs and the extremal unbalanced bicyclic families."""
from .bicyclic import (
    BicyclicShape,
    base,
    construct_family,
    f_polynomial,
    family_charpoly,
    family_index,
)
from .enumerate_verify import (
    enumerate_unbalanced_bicyclic,
    match_table1,
    verify_exclusions,
    verify_ordering,
)
from .graph import SignedGraph, adjacency, build, cut_edges, cycles_through, delete_vertices, loads, dumps
from .iso import switching_isomorphic
from .perturb import alpha_transform, check_alpha_hypotheses, check_cut_edge_sign, collapse_tree_to_star, relocate_edges
from .polynomial import Polynomial, largest_real_root
from .spectra import charpoly_exact, charpoly_schwenk, eigenvalues, index
from .switching import is_balanced, normalize_signature, switch, switching_equivalent

__version__ = "0.1.0"
