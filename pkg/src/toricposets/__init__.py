"""Toric posets: flip classes of acyclic orientations and their combinatorics."""

from .config import get_limit, limits, set_limit
from .coxeter import CoxeterSystem, conjugacy_class_elements, coxeter_conjugate, initial_segments, orientation_of
from .errors import *  # noqa: F401,F403
from .filters import FilterPoset, characteristic_vector, filter_cover_witness, is_toric_filter, toric_filters
from .flipclass import (
    FlipClass,
    acyclic_orientations,
    all_flip_classes,
    count_flip_classes,
    flip_class,
    flip_sink,
    flip_source,
    preposet_flip_class,
    torically_equivalent,
)
from .geom import TorusPoint, alpha, in_order_polytope, point_of_extension, reconcile_chamber_bijection
from .graph import (
    BACKWARD,
    BOTH,
    FORWARD,
    Dag,
    Graph,
    Orientation,
    SetPartition,
    contract_graph,
    is_acyclic,
    make_cliques,
    partition_join,
    partition_leq,
    partition_meet,
    quotient,
    strongly_connected_components,
    tutte_10,
)
from .morph import include, is_toric_extension, toric_isomorphic, toric_quotient
from .poset import (
    Poset,
    antichains,
    chains,
    closed_face_partition_lattice,
    closure_partition,
    hasse_graph,
    interval,
    is_closed_face_partition,
    is_connected_partition,
    is_filter,
    is_ideal,
    linear_extensions,
    order_ideals,
    poset_from_orientation,
    transitive_closure_graph,
)
from .toric import (
    CyclicWord,
    ToricPoset,
    is_closed_toric_face_partition,
    is_closed_toric_partition,
    is_geometric_toric_antichain,
    is_toric_chain,
    toric_chains,
    toric_closure,
    toric_hasse,
    toric_interval,
    toric_transitive_closure,
    total_toric_extensions,
)

__version__ = "0.1.0"
