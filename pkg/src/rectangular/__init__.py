"""Rectangular structures: construction, verification, interconversion,
classification, and exhaustive census of four equivalent models — pair-
disjoint arrays, rectangular groupoids, unique-path graph pairs, and
0/1-matrix pairs whose product is the all-ones matrix.
"""

from .census import (
    CensusResult,
    enumerate_band_blow_ups,
    enumerate_central,
    enumerate_rectangular,
    iter_rectangular_tables,
)
from .construct import (
    abelian_group,
    constant_groupoid,
    coset_construction,
    cyclic_group,
    evans_central,
    extract_partition_system,
    group_factorization_pair,
    is_partitioned_pair,
    left_extension,
    left_split_extension,
    partition_construction,
    rectangular_band,
    right_extension,
    right_split_extension,
    simple_blow_up,
)
from .core import (
    BoolMatrix,
    CapacityError,
    FiniteGroup,
    GraphPair,
    Groupoid,
    IsotopyTriple,
    Mapping,
    Partition,
    PartitionSystem,
    Permutation,
    Transversal,
    PartialArray,
    TRIVIAL,
    compose,
    dual_graph_pair,
    make_groupoid,
    opposite,
    transpose,
)
from .isotopy import (
    apply_isotopy,
    are_isomorphic,
    are_isotopic,
    canonical_form,
    find_transversal,
    idempotent_isotope,
    relabel,
)
from .properties import (
    derive_plus,
    has_blackburn,
    is_associative,
    is_central,
    is_congruence,
    is_full,
    is_idempotent,
    is_matrix_symmetric,
    is_maximal,
    is_partial_latin,
    is_partial_p1,
    is_rectangular,
    satisfies_dually_partitioned_eqs,
    satisfies_p1,
    satisfies_p2,
    satisfies_p4,
    satisfies_partitioned_eqs,
    satisfies_undirected_eq,
)
from .transform import (
    ClosureError,
    direct_product,
    graph_pair_to_groupoid,
    graph_pair_to_matrices,
    groupoid_to_graph_pair,
    matrices_to_graph_pair,
    quotient,
    square_lift,
    subalgebra,
)

__all__ = [name for name in dir() if not name.startswith("_")]
