"""Skew-Hadamard matrices from cyclic supplementary difference sets."""

from .construction import (
    back_diagonal,
    circulant,
    encode,
    goethals_seidel,
    matrix_from_blocks,
    paf_verify,
    verify_hadamard,
    verify_hadamard_dense,
    verify_skew,
)
from .equivalence import AffineMap, apply, find_equivalence
from .families import (
    Block,
    SdsQuadruple,
    difference_counts,
    expand,
    index_set_is_skew,
    is_skew_type,
    parameter_identities,
    verify_sds,
)
from .ring import (
    OrbitIndexing,
    Subgroup,
    cyclic_subgroup,
    elements_of_order,
    orbits_of,
    paper_indexing,
    unit_group_order,
)
from .search import SearchConfig, SearchResult, objective, run_search

__version__ = "0.1.0"
