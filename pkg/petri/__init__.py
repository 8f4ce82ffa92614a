"""
Structural analysis of free-choice Petri nets
"""
from petri.components import (
    Component,
    ComponentKind,
    Evidence,
    Side,
    Status,
    bottom_components_of_allocation,
    classify_s_side,
    classify_t_side,
    s_component,
    semi_s_cover,
    semi_s_through,
    semi_t_cover,
    semi_t_through,
    t_component,
    top_components_of_place_allocation,
)
from petri.errors import NetError
from petri.free_choice import (
    Allocation,
    ClusterPartition,
    PlaceAllocation,
    allocation_from_nodes,
    allocation_subnet,
    cluster_of,
    clusters,
    co_directed_place_allocation,
    directed_allocation,
    is_directed,
    is_free_choice,
    place_allocation_subnet,
)
from petri.net import (
    Marking,
    Net,
    NodeId,
    NodeKind,
    effect,
    enabled,
    fire,
    fire_sequence,
    induced_subnet,
    is_isolated,
    postset,
    preset,
    restrict_sequence,
    reverse_dual,
    sequence_effect,
)
from petri.scc import SccDecomposition, is_strongly_connected, scc
from petri.siphons import (
    CommonerVerdict,
    MaxTrapResult,
    commoner_live,
    is_minimal_siphon,
    is_siphon,
    is_trap,
    maximal_siphon,
    maximal_trap,
    minimal_siphons,
)
from petri.wellformed import (
    Answer,
    StructuralRefusal,
    WellFormednessVerdict,
    decide_well_formed,
    decide_well_formed_scc,
    find_proper_semi_s_type2,
    find_semi_t_intersecting,
    s_component_cover,
)
