"""
Exhaustive enumeration of semi-T / semi-S components
"""
import itertools
import math
from typing import List, Set

from loguru import logger

from config.config import Config
from petri.components import (
    Component,
    Side,
    bottom_components_of_allocation,
    s_component,
    t_component,
    top_components_of_place_allocation,
)
from petri.errors import ClusterWithoutPlace, ClusterWithoutTransition, EnumerationOverflow
from petri.free_choice import Allocation, PlaceAllocation, clusters
from petri.net import Net, reverse_dual
from petri.wellformed import Answer


def _choices(net: Net, place_side: bool, cap: int) -> List[List[str]]:
    partition = clusters(net)
    options = []
    for cluster_id, block in enumerate(partition.clusters):
        members = partition.places_of(net, cluster_id) if place_side else partition.transitions_of(net, cluster_id)
        if not members:
            error = ClusterWithoutPlace if place_side else ClusterWithoutTransition
            raise error(f"cluster {sorted(block)} has nothing to allocate")
        options.append(list(members))
    total = math.prod(len(o) for o in options)
    if total > cap:
        raise EnumerationOverflow(cap, "allocations")
    logger.debug(f"Enumerating {total} {'place-' if place_side else ''}allocation(s)")
    return options


def enumerate_semi_t_brute(net: Net, cap: int = Config.ALLOCATION_CAP) -> Set[Component]:
    """Bottom SCCs of N_α over every allocation α"""
    options = _choices(net, place_side=False, cap=cap)
    partition = clusters(net)
    found: Set[Component] = set()
    for combo in itertools.product(*options):
        alpha = Allocation(dict(enumerate(combo)))
        found.update(bottom_components_of_allocation(net, alpha, partition))
    return found


def enumerate_semi_s_brute(net: Net, cap: int = Config.ALLOCATION_CAP) -> Set[Component]:
    """Top SCCs of N_β over every place-allocation β"""
    options = _choices(net, place_side=True, cap=cap)
    partition = clusters(net)
    dual = reverse_dual(net)
    found: Set[Component] = set()
    for combo in itertools.product(*options):
        beta = PlaceAllocation(dict(enumerate(combo)))
        found.update(top_components_of_place_allocation(net, beta, partition, dual))
    return found


def enumerate_components_by_subsets(net: Net, side: Side = Side.T,
                                    node_limit: int = Config.SUBSET_NODE_LIMIT) -> Set[Component]:
    """Every nonempty node subset that classifies as a semi-component

    Raises:
        EnumerationOverflow: If the net has more than node_limit nodes
    """
    if len(net.nodes) > node_limit:
        raise EnumerationOverflow(2 ** node_limit, "node subsets")
    dual = reverse_dual(net) if side is Side.S else None
    found: Set[Component] = set()
    for size in range(1, len(net.nodes) + 1):
        for subset in itertools.combinations(net.nodes, size):
            component = t_component(net, subset) if side is Side.T else s_component(net, subset, dual)
            if component.kind.is_semi:
                found.add(component)
    return found


def well_formed_by_enumeration(net: Net, side: Side = Side.T, cap: int = Config.ALLOCATION_CAP) -> Answer:
    """Yes iff no enumerated semi-component is proper and the full ones cover the net"""
    if side is Side.T:
        found = enumerate_semi_t_brute(net, cap)
        universe, attribute = set(net.transitions), "transitions"
    else:
        found = enumerate_semi_s_brute(net, cap)
        universe, attribute = set(net.places), "places"
    if any(c.kind.is_proper for c in found):
        return Answer.NO
    covered = set().union(*(getattr(c, attribute) for c in found if c.kind.is_full))
    return Answer.YES if covered >= universe else Answer.NO
