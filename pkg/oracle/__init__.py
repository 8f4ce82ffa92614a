"""
Brute-force ground truth for the structural analyses
"""
from oracle.brute import (
    enumerate_components_by_subsets,
    enumerate_semi_s_brute,
    enumerate_semi_t_brute,
    well_formed_by_enumeration,
)
from oracle.generator import random_execution, random_fc_net, random_marking
from oracle.reachability import (
    BoundednessVerdict,
    Outcome,
    ReachabilityGraph,
    TransitionStatus,
    Verdict,
    explore,
    find_dl_marking,
    is_live_and_bounded,
    liveness,
    oracle_well_formed,
    transition_status,
    unmarked_semi_s_component,
)
