"""
Semi-T / semi-S component classification and covers
"""
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

from loguru import logger

from petri.errors import CertificationError, DegenerateNet, NotStronglyConnected
from petri.free_choice import (
    Allocation,
    ClusterPartition,
    PlaceAllocation,
    allocation_subnet,
    clusters,
    directed_allocation,
    place_allocation_subnet,
)
from petri.net import Arc, Net, induced_subnet, reverse_dual
from petri.scc import is_strongly_connected, scc


class Side(str, Enum):
    T = "t"
    S = "s"


class Status(str, Enum):
    NOT_COMPONENT = "not-component"
    FULL = "full"
    PROPER = "proper"


@dataclass(frozen=True)
class ComponentKind:
    side: Side
    status: Status
    type1: bool = False
    type2: bool = False

    @property
    def is_semi(self) -> bool:
        return self.status is not Status.NOT_COMPONENT

    @property
    def is_full(self) -> bool:
        return self.status is Status.FULL

    @property
    def is_proper(self) -> bool:
        return self.status is Status.PROPER

    def __str__(self) -> str:
        if self.status is not Status.PROPER:
            return f"{self.side.value}:{self.status.value}"
        types = [name for name, flag in (("I", self.type1), ("II", self.type2)) if flag]
        return f"{self.side.value}:proper[{','.join(types)}]"


@dataclass(frozen=True)
class Evidence:
    """What makes a semi-component proper

    On the T side, excessive holds places with two or more predecessors in the
    component, open_nodes the places in pre(T_Y) outside post(T_Y) and
    boundary_arcs the inbound arcs. On the S side the roles of places and
    transitions swap and boundary_arcs are outbound arcs.
    """
    excessive: Tuple[str, ...] = ()
    open_nodes: Tuple[str, ...] = ()
    boundary_arcs: Tuple[Arc, ...] = ()


@dataclass(frozen=True)
class Component:
    places: FrozenSet[str]
    transitions: FrozenSet[str]
    kind: ComponentKind
    evidence: Evidence = Evidence()

    @property
    def nodes(self) -> FrozenSet[str]:
        return self.places | self.transitions

    def sort_key(self) -> Tuple[str, ...]:
        return tuple(sorted(self.nodes))

    def __str__(self) -> str:
        return f"{{{', '.join(self.sort_key())}}} {self.kind}"


def _classify_t(net: Net, nodes: Iterable[str], side: Side) -> Component:
    chosen = net.require_nodes(nodes)
    places = frozenset(n for n in chosen if net.is_place(n))
    transitions = chosen - places

    def rejected() -> Component:
        return Component(places, transitions, ComponentKind(side, Status.NOT_COMPONENT))

    if not transitions:
        return rejected()
    if any(len(net.post(s) & transitions) != 1 for s in places):
        return rejected()
    if not net.post_of(transitions) <= places:
        return rejected()
    if not is_strongly_connected(induced_subnet(net, chosen)):
        return rejected()

    excessive = tuple(sorted(s for s in places if len(net.pre(s) & transitions) >= 2))
    inputs = net.pre_of(transitions)
    open_nodes = tuple(sorted(inputs - net.post_of(transitions)))
    boundary = tuple(sorted((s, t) for t in transitions for s in net.pre(t) if s not in places))
    single_input = all(len(net.pre(s) & transitions) == 1 for s in places)
    if single_input and inputs == places:
        return Component(places, transitions, ComponentKind(side, Status.FULL))
    kind = ComponentKind(side, Status.PROPER, type1=bool(excessive), type2=bool(open_nodes))
    return Component(places, transitions, kind, Evidence(excessive, open_nodes, boundary))


def t_component(net: Net, nodes: Iterable[str]) -> Component:
    """Classify a node set on the T side, with evidence"""
    return _classify_t(net, nodes, Side.T)


def s_component(net: Net, nodes: Iterable[str], dual: Optional[Net] = None) -> Component:
    """Classify a node set on the S side via the reverse-dual

    Args:
        net: The net the node set lives in
        nodes: Candidate node set
        dual: reverse_dual(net), when the caller already has it
    """
    dual = dual or reverse_dual(net)
    mirrored = _classify_t(dual, nodes, Side.S)
    evidence = Evidence(
        mirrored.evidence.excessive,
        mirrored.evidence.open_nodes,
        tuple(sorted((b, a) for a, b in mirrored.evidence.boundary_arcs)),
    )
    # places of rd(N) are the transitions of N
    return Component(mirrored.transitions, mirrored.places, mirrored.kind, evidence)


def classify_t_side(net: Net, nodes: Iterable[str]) -> ComponentKind:
    return t_component(net, nodes).kind


def classify_s_side(net: Net, nodes: Iterable[str]) -> ComponentKind:
    return s_component(net, nodes).kind


def bottom_components_of_allocation(net: Net, alpha: Allocation,
                                    partition: Optional[ClusterPartition] = None) -> List[Component]:
    """Bottom SCCs of N_α, classified on the T side in the full net"""
    subnet = allocation_subnet(net, alpha, partition)
    return [t_component(net, bottom) for bottom in scc(subnet).bottoms()]


def top_components_of_place_allocation(net: Net, beta: PlaceAllocation,
                                       partition: Optional[ClusterPartition] = None,
                                       dual: Optional[Net] = None) -> List[Component]:
    """Top SCCs of N_β, classified on the S side in the full net"""
    subnet = place_allocation_subnet(net, beta, partition)
    dual = dual or reverse_dual(net)
    return [s_component(net, top, dual) for top in scc(subnet).tops()]


def _require_cover_preconditions(net: Net) -> ClusterPartition:
    if not net.places or not net.transitions:
        raise DegenerateNet(f"net '{net.name}' needs at least one place and one transition")
    partition = clusters(net)
    if not is_strongly_connected(net):
        raise NotStronglyConnected(f"net '{net.name}' is not strongly connected")
    return partition


def semi_t_through(net: Net, t0: str, partition: Optional[ClusterPartition] = None) -> Component:
    """The semi-T-component grown from t0: bottom SCC of an allocation directed to t0"""
    net.require_transition(t0)
    if partition is None:
        if not is_strongly_connected(net):
            raise NotStronglyConnected(f"net '{net.name}' is not strongly connected")
        partition = clusters(net)
    alpha = directed_allocation(net, [t0], partition)
    subnet = allocation_subnet(net, alpha, partition)
    decomposition = scc(subnet)
    bottom = decomposition.components[decomposition.index_of(t0)]
    return t_component(net, bottom)


def semi_s_through(net: Net, s0: str) -> Component:
    """Dual of semi_t_through: a semi-S-component containing place s0"""
    net.require_place(s0)
    dual = reverse_dual(net)
    grown = semi_t_through(dual, s0)
    return s_component(net, grown.nodes, dual)


def grow_semi_t_cover(net: Net, partition: ClusterPartition) -> Iterator[Component]:
    """Yield semi-T-components until every transition is covered

    Each round grows from the smallest uncovered transition with
    semi_t_through, so every member contains the transition it was grown from.
    """
    covered = set()
    for t in sorted(net.transitions):
        if t in covered:
            continue
        component = semi_t_through(net, t, partition)
        if not component.kind.is_semi:
            raise CertificationError(f"component grown from {t} is not a semi-T-component: {component}")
        logger.debug(f"Cover member from {t}: {component}")
        covered |= component.transitions
        yield component


def semi_t_cover(net: Net) -> List[Component]:
    """Semi-T-components jointly covering every transition"""
    partition = _require_cover_preconditions(net)
    return list(grow_semi_t_cover(net, partition))


def semi_s_cover(net: Net) -> List[Component]:
    """Semi-S-components covering every place, grown on the reverse-dual"""
    dual = reverse_dual(net)
    return [s_component(net, member.nodes, dual) for member in semi_t_cover(dual)]
