"""
Clusters, free-choice recognition and (place-)allocations
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

from loguru import logger

from petri.errors import (
    ClusterWithoutPlace,
    ClusterWithoutTransition,
    InvalidAllocation,
    NotFreeChoice,
    UnreachableTargets,
)
from petri.net import Net, induced_subnet, reverse_dual
from petri.scc import distances_to, reaches


@dataclass(frozen=True)
class ClusterPartition:
    """Clusters ordered by smallest member name; index maps node -> cluster id"""
    clusters: Tuple[FrozenSet[str], ...]
    index: Mapping[str, int]

    def __len__(self) -> int:
        return len(self.clusters)

    def __iter__(self):
        return iter(self.clusters)

    def places_of(self, net: Net, cluster_id: int) -> Tuple[str, ...]:
        return tuple(sorted(n for n in self.clusters[cluster_id] if net.is_place(n)))

    def transitions_of(self, net: Net, cluster_id: int) -> Tuple[str, ...]:
        return tuple(sorted(n for n in self.clusters[cluster_id] if net.is_transition(n)))


@dataclass(frozen=True)
class Allocation:
    """One chosen transition per cluster, keyed by cluster id"""
    choice: Mapping[int, str]

    @property
    def nodes(self) -> FrozenSet[str]:
        return frozenset(self.choice.values())

    def __getitem__(self, cluster_id: int) -> str:
        return self.choice[cluster_id]

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.choice.items())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Allocation) or type(other) is not type(self):
            return NotImplemented
        return dict(self.choice) == dict(other.choice)

    def __str__(self) -> str:
        return "{" + ", ".join(sorted(self.nodes)) + "}"


class PlaceAllocation(Allocation):
    """One chosen place per cluster, keyed by cluster id"""


def is_free_choice(net: Net) -> bool:
    """True iff transitions sharing an input place have equal presets"""
    for place in net.places:
        presets = {net.pre(t) for t in net.post(place)}
        if len(presets) > 1:
            logger.debug(f"Place {place} feeds transitions with differing presets")
            return False
    return True


def clusters(net: Net) -> ClusterPartition:
    """Cluster partition of a free-choice net

    Transitions sharing a preset form a cluster with that preset. Places with
    an empty postset form one cluster, transitions with an empty preset
    another.

    Raises:
        NotFreeChoice: If the net is not free-choice
    """
    if not is_free_choice(net):
        raise NotFreeChoice(f"net '{net.name}' is not free-choice")
    groups: Dict[FrozenSet[str], set] = {}
    sink_places = set()
    source_transitions = set()
    for t in net.transitions:
        if net.pre(t):
            groups.setdefault(net.pre(t), set()).add(t)
        else:
            source_transitions.add(t)
    blocks = [frozenset(preset | ts) for preset, ts in groups.items()]
    for p in net.places:
        if not net.post(p):
            sink_places.add(p)
    if sink_places:
        blocks.append(frozenset(sink_places))
    if source_transitions:
        blocks.append(frozenset(source_transitions))
    blocks.sort(key=min)
    index = {node: i for i, block in enumerate(blocks) for node in block}
    return ClusterPartition(tuple(blocks), index)


def cluster_of(partition: ClusterPartition, node: str) -> int:
    return partition.index[node]


def _check_choice(net: Net, partition: ClusterPartition, choice: Mapping[int, str], want_place: bool) -> None:
    what = "place" if want_place else "transition"
    for cluster_id, block in enumerate(partition.clusters):
        members = partition.places_of(net, cluster_id) if want_place else partition.transitions_of(net, cluster_id)
        if not members:
            error = ClusterWithoutPlace if want_place else ClusterWithoutTransition
            raise error(f"cluster {sorted(block)} has no {what}")
        if choice.get(cluster_id) not in members:
            raise InvalidAllocation(f"allocation picks {choice.get(cluster_id)!r} for cluster {sorted(block)}")
    if set(choice) - set(range(len(partition))):
        raise InvalidAllocation(f"allocation names unknown clusters {sorted(set(choice) - set(range(len(partition))))}")


def allocation_from_nodes(net: Net, nodes: Iterable[str], partition: Optional[ClusterPartition] = None,
                          place_side: bool = False) -> Allocation:
    """Build an allocation from the chosen node set, one node per cluster

    Raises:
        InvalidAllocation: If a cluster gets zero or several chosen nodes
    """
    partition = partition or clusters(net)
    choice: Dict[int, str] = {}
    for node in sorted(net.require_nodes(nodes)):
        if net.is_place(node) != place_side:
            raise InvalidAllocation(f"'{node}' has the wrong kind for this allocation")
        cluster_id = partition.index[node]
        if cluster_id in choice:
            raise InvalidAllocation(f"cluster of '{node}' already allocated to '{choice[cluster_id]}'")
        choice[cluster_id] = node
    result = PlaceAllocation(choice) if place_side else Allocation(choice)
    _check_choice(net, partition, result.choice, place_side)
    return result


def allocation_subnet(net: Net, alpha: Allocation, partition: Optional[ClusterPartition] = None) -> Net:
    """N_α: all places plus the allocated transitions"""
    partition = partition or clusters(net)
    _check_choice(net, partition, alpha.choice, want_place=False)
    return induced_subnet(net, set(net.places) | alpha.nodes)


def place_allocation_subnet(net: Net, beta: PlaceAllocation, partition: Optional[ClusterPartition] = None) -> Net:
    """N_β: all transitions plus the allocated places"""
    partition = partition or clusters(net)
    _check_choice(net, partition, beta.choice, want_place=True)
    return induced_subnet(net, set(net.transitions) | beta.nodes)


def directed_allocation(net: Net, targets: Iterable[str], partition: Optional[ClusterPartition] = None) -> Allocation:
    """Allocation directed to a transition set

    Each cluster picks the transition closest (in the full net) to the
    nearest target; ties go to the smaller name.

    Raises:
        ClusterWithoutTransition: If some cluster has no transition
        UnreachableTargets: If some cluster has no transition with a path to the targets
    """
    goal = frozenset(net.require_transition(t) for t in targets)
    if not goal:
        raise UnreachableTargets("target set is empty")
    partition = partition or clusters(net)
    distance = distances_to(net.graph, goal)
    choice: Dict[int, str] = {}
    for cluster_id, block in enumerate(partition.clusters):
        candidates = partition.transitions_of(net, cluster_id)
        if not candidates:
            raise ClusterWithoutTransition(f"cluster {sorted(block)} has no transition")
        reachable = [t for t in candidates if t in distance]
        if not reachable:
            raise UnreachableTargets(f"no transition of cluster {sorted(block)} reaches {sorted(goal)}")
        choice[cluster_id] = min(reachable, key=lambda t: (distance[t], t))
    alpha = Allocation(choice)
    logger.debug(f"Allocation directed to {sorted(goal)}: {alpha}")
    return alpha


def co_directed_place_allocation(net: Net, sources: Iterable[str]) -> PlaceAllocation:
    """Place-allocation co-directed from a place set, built on the reverse-dual"""
    dual = reverse_dual(net)
    alpha = directed_allocation(dual, sources, clusters(dual))
    # reverse-dual clusters have the same node sets, hence the same ids
    return PlaceAllocation(dict(alpha.choice))


def is_directed(net: Net, alpha: Allocation, targets: Iterable[str]) -> bool:
    """True iff every node of N_α has a path to the targets inside N_α"""
    subnet = allocation_subnet(net, alpha)
    return reaches(subnet, subnet.nodes, targets)
