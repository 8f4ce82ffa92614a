"""
Well-formedness decision for free-choice nets

decide_well_formed_scc grows a cover from allocations directed to uncovered
transitions, then looks for a semi-T-component with an inbound arc by
searching, for every place s, the net with s and its input transitions
removed. decide_well_formed lifts the check to arbitrary free-choice nets.
"""
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional, Tuple, Union

from loguru import logger

from petri.components import Component, grow_semi_t_cover, s_component, t_component
from petri.errors import CertificationError, DegenerateNet, NotStronglyConnected
from petri.free_choice import ClusterPartition, allocation_subnet, clusters, directed_allocation
from petri.net import Net, delete_nodes, induced_subnet, is_isolated, reverse_dual
from petri.scc import backward_reach, is_strongly_connected, scc


class Answer(str, Enum):
    YES = "yes"
    NO = "no"


@dataclass(frozen=True)
class WellFormednessVerdict:
    """Yes with a T-cover, or No with a proper semi-T witness

    phase records which search produced a No (1: proper bottom SCC while
    covering, 2: inbound-arc search).
    """
    answer: Answer
    t_cover: Tuple[Component, ...] = ()
    witness: Optional[Component] = None
    phase: Optional[int] = None

    @property
    def is_yes(self) -> bool:
        return self.answer is Answer.YES


@dataclass(frozen=True)
class StructuralRefusal:
    """A bottom SCC fed by another SCC: no marking can be live and bounded"""
    bottom: FrozenSet[str]
    upstream: FrozenSet[str]

    @property
    def answer(self) -> Answer:
        return Answer.NO

    @property
    def is_yes(self) -> bool:
        return False


Decision = Union[WellFormednessVerdict, StructuralRefusal]


def _certify_yes(net: Net, cover: List[Component]) -> None:
    covered = set()
    for member in cover:
        if not t_component(net, member.nodes).kind.is_full:
            raise CertificationError(f"cover member {member} is not a T-component")
        covered |= member.transitions
    if covered != set(net.transitions):
        raise CertificationError(f"cover misses {sorted(set(net.transitions) - covered)}")


def _certify_witness(net: Net, nodes: Iterable[str], open_place: Optional[str] = None) -> Component:
    witness = t_component(net, nodes)
    if not witness.kind.is_proper:
        raise CertificationError(f"witness {witness} is not a proper semi-T-component")
    if open_place is not None and open_place not in witness.evidence.open_nodes:
        raise CertificationError(f"witness {witness} has no inbound arc at {open_place}")
    return witness


def find_semi_t_intersecting(net: Net, targets: Iterable[str]) -> Optional[Component]:
    """Find a semi-T-component whose transitions meet the target set

    Repeatedly drops transitions that cannot lead back into the targets
    together with their outputs; once every remaining transition is good, an
    allocation directed to the targets yields the component.

    Args:
        net: A free-choice net, not necessarily strongly connected
        targets: Transition set T0

    Returns:
        A semi-T-component of net intersecting targets, or None if none exists

    Raises:
        NotFreeChoice: If the net is not free-choice
    """
    clusters(net)
    goal = set(net.require_transition(t) for t in targets)
    current = net
    rounds = 0
    while True:
        rounds += 1
        reach = backward_reach(current.graph, goal)
        good = {t for t in current.transitions if t in reach and current.post(t) <= reach}
        if not good & goal:
            logger.debug(f"No good target transition after {rounds} round(s)")
            return None
        if len(good) == len(current.transitions):
            break
        current = delete_nodes(current, set(current.transitions) - good)
        goal &= good
        logger.debug(f"Round {rounds}: {len(good)} good transition(s), {len(goal)} target(s) left")

    current = delete_nodes(current, [p for p in current.places if is_isolated(current, p)])
    partition = clusters(current)
    alpha = directed_allocation(current, goal, partition)
    decomposition = scc(allocation_subnet(current, alpha, partition))
    hits = [bottom for bottom in decomposition.bottoms() if bottom & goal]
    chosen = min(hits, key=min)
    component = t_component(net, chosen)
    if not component.kind.is_semi:
        raise CertificationError(f"bottom SCC {sorted(chosen)} is not a semi-T-component")
    logger.debug(f"Found {component} after {rounds} round(s)")
    return component


def _inbound_search(net: Net, partition: ClusterPartition,
                    shared_only: bool) -> Optional[Tuple[str, Component]]:
    for s in sorted(net.places):
        cluster_id = partition.index[s]
        if shared_only and len(partition.places_of(net, cluster_id)) <= 1:
            continue
        remaining = set(partition.transitions_of(net, cluster_id)) - net.pre(s)
        if not remaining:
            continue
        reduced = delete_nodes(net, {s} | net.pre(s))
        found = find_semi_t_intersecting(reduced, remaining)
        if found is not None:
            logger.debug(f"Inbound-arc search succeeded at place {s}")
            return s, found
    return None


def decide_well_formed_scc(net: Net) -> WellFormednessVerdict:
    """Decide well-formedness of a strongly connected free-choice net

    Raises:
        DegenerateNet: If the net lacks places or transitions
        NotFreeChoice: If the net is not free-choice
        NotStronglyConnected: If the net is not strongly connected
    """
    if not net.places or not net.transitions:
        raise DegenerateNet(f"net '{net.name}' needs at least one place and one transition")
    partition = clusters(net)
    if not is_strongly_connected(net):
        raise NotStronglyConnected(f"net '{net.name}' is not strongly connected")

    logger.debug(f"Phase 1 on {net!r}")
    cover: List[Component] = []
    for component in grow_semi_t_cover(net, partition):
        if component.kind.is_proper:
            witness = _certify_witness(net, component.nodes)
            logger.debug(f"Phase 1 found proper component {witness}")
            return WellFormednessVerdict(Answer.NO, witness=witness, phase=1)
        cover.append(component)

    logger.debug(f"Phase 2 on {net!r}, cover of {len(cover)}")
    found = _inbound_search(net, partition, shared_only=True)
    if found is not None:
        place, component = found
        witness = _certify_witness(net, component.nodes, open_place=place)
        return WellFormednessVerdict(Answer.NO, witness=witness, phase=2)

    _certify_yes(net, cover)
    return WellFormednessVerdict(Answer.YES, t_cover=tuple(cover))


def decide_well_formed(net: Net) -> Decision:
    """Decide well-formedness of any free-choice net

    A bottom SCC with an incoming arc refuses structurally. Otherwise the net
    is a disjoint union of SCCs, each checked on its own; single nodes are
    well-formed.
    """
    clusters(net)
    decomposition = scc(net)
    for i, component in enumerate(decomposition.components):
        if decomposition.is_bottom[i] and not decomposition.is_top[i]:
            upstream = decomposition.components[decomposition.upstream_of(i)[0]]
            logger.debug(f"Bottom SCC {sorted(component)} is fed by {sorted(upstream)}")
            return StructuralRefusal(component, upstream)

    cover: List[Component] = []
    for component in decomposition.components:
        if len(component) == 1:
            (node,) = component
            if net.is_transition(node):
                cover.append(t_component(net, component))
            continue
        verdict = decide_well_formed_scc(induced_subnet(net, component))
        if not verdict.is_yes:
            witness = _certify_witness(net, verdict.witness.nodes)
            return WellFormednessVerdict(Answer.NO, witness=witness, phase=verdict.phase)
        cover.extend(t_component(net, member.nodes) for member in verdict.t_cover)

    cover.sort(key=Component.sort_key)
    _certify_yes(net, cover)
    return WellFormednessVerdict(Answer.YES, t_cover=tuple(cover))


def find_proper_semi_s_type2(net: Net) -> Optional[Component]:
    """Search for a semi-S-component with an outbound arc

    Runs the inbound-arc search on the reverse-dual over every place of it
    (every transition of the net); the net need not be strongly connected.
    """
    dual = reverse_dual(net)
    found = _inbound_search(dual, clusters(dual), shared_only=False)
    if found is None:
        return None
    anchor, component = found
    witness = s_component(net, component.nodes, dual)
    if not (witness.kind.is_proper and witness.kind.type2 and anchor in witness.evidence.open_nodes):
        raise CertificationError(f"dual witness {witness} has no outbound arc at {anchor}")
    return witness


def s_component_cover(net: Net) -> Optional[List[Component]]:
    """S-component cover of a well-formed net, or None when it is not well-formed"""
    verdict = decide_well_formed(reverse_dual(net))
    if not verdict.is_yes:
        return None
    dual = reverse_dual(net)
    cover = [s_component(net, member.nodes, dual) for member in verdict.t_cover]
    for member in cover:
        if not member.kind.is_full:
            raise CertificationError(f"cover member {member} is not an S-component")
    return cover
