"""
Explicit-state reachability oracle

Breadth-first exploration over token vectors. A new marking that strictly
covers one of its ancestors proves unboundedness; the path between the two
can be pumped forever.
"""
import itertools
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Deque, Dict, List, Optional, Set, Tuple

from loguru import logger

from config.config import Config
from petri.components import Component, s_component
from petri.errors import CountOverflow, DegenerateNet, IncompleteGraph, NotStronglyConnected
from petri.free_choice import clusters
from petri.net import Marking, Net, check_marking, delete_nodes, reverse_dual
from petri.scc import is_strongly_connected
from petri.wellformed import find_semi_t_intersecting

Tokens = Tuple[int, ...]
Edge = Tuple[int, str, int]


class Outcome(str, Enum):
    BOUNDED = "bounded"
    UNBOUNDED = "unbounded"
    CAP_EXCEEDED = "cap-exceeded"


class TransitionStatus(str, Enum):
    LIVE = "live"
    DEAD = "dead"
    NEITHER = "neither"


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"


@dataclass
class ReachabilityGraph:
    """States numbered in discovery order; state 0 is the root"""
    places: Tuple[str, ...]
    states: List[Tokens] = field(default_factory=list)
    edges: List[Edge] = field(default_factory=list)
    complete: bool = False
    root: int = 0

    def marking(self, index: int) -> Marking:
        return Marking(self.places, self.states[index])

    def successors(self) -> List[List[Tuple[str, int]]]:
        result: List[List[Tuple[str, int]]] = [[] for _ in self.states]
        for source, t, target in self.edges:
            result[source].append((t, target))
        return result

    def predecessors(self) -> List[List[int]]:
        result: List[List[int]] = [[] for _ in self.states]
        for source, _, target in self.edges:
            result[target].append(source)
        return result


@dataclass
class BoundednessVerdict:
    """Outcome of an exploration

    For UNBOUNDED, path is a firing sequence from the root and the marking
    reached after path[:dominated_index] is strictly covered by the marking
    at the end of path.
    """
    outcome: Outcome
    graph: ReachabilityGraph
    path: List[str] = field(default_factory=list)
    dominated_index: Optional[int] = None

    @property
    def pump(self) -> List[str]:
        if self.dominated_index is None:
            return []
        return self.path[self.dominated_index:]


class _Firing:
    """Index vectors for fast firing on token tuples"""

    def __init__(self, net: Net):
        index = net.place_index
        self.transitions = net.transitions
        self.places = net.places
        self.inputs = {t: tuple(index[p] for p in net.pre(t)) for t in net.transitions}
        self.deltas = {}
        for t in net.transitions:
            change = [0] * len(net.places)
            for p in net.pre(t):
                change[index[p]] -= 1
            for p in net.post(t):
                change[index[p]] += 1
            self.deltas[t] = tuple((i, c) for i, c in enumerate(change) if c)

    def enabled(self, tokens: Tokens, t: str) -> bool:
        return all(tokens[i] >= 1 for i in self.inputs[t])

    def fire(self, tokens: Tokens, t: str) -> Tokens:
        result = list(tokens)
        for i, c in self.deltas[t]:
            result[i] += c
            if result[i] > Config.MAX_TOKENS:
                raise CountOverflow(f"token count on place '{self.places[i]}' exceeds {Config.MAX_TOKENS}")
        return tuple(result)


def _path_to(parents: Dict[int, Tuple[int, str]], index: int) -> Tuple[List[str], List[int]]:
    """Transitions from the root to a state, with the states visited on the way"""
    steps: List[str] = []
    visited = [index]
    while index in parents:
        index, t = parents[index]
        steps.append(t)
        visited.append(index)
    return steps[::-1], visited[::-1]


def explore(net: Net, m0: Marking, max_states: int = Config.STATE_CAP) -> BoundednessVerdict:
    """Explore the reachability graph from m0

    Transitions are tried in declared order and states numbered as found.
    Each new state is compared with the states on its BFS parent path.

    Args:
        net: The net
        m0: Initial marking
        max_states: Cap on distinct states

    Returns:
        Bounded with the complete graph, Unbounded with a pumping witness, or
        CapExceeded with the partial graph

    Raises:
        InvalidMarking: If m0 is not over the places of net
        CountOverflow: If a reached token count would pass the 64-bit limit
    """
    check_marking(net, m0)
    firing = _Firing(net)
    graph = ReachabilityGraph(net.places, states=[m0.tokens])
    seen: Dict[Tokens, int] = {m0.tokens: 0}
    parents: Dict[int, Tuple[int, str]] = {}
    queue: Deque[int] = deque([0])
    while queue:
        current = queue.popleft()
        tokens = graph.states[current]
        for t in firing.transitions:
            if not firing.enabled(tokens, t):
                continue
            successor = firing.fire(tokens, t)
            known = seen.get(successor)
            if known is not None:
                graph.edges.append((current, t, known))
                continue
            steps, ancestors = _path_to(parents, current)
            for depth, ancestor in enumerate(ancestors):
                earlier = graph.states[ancestor]
                if successor != earlier and all(a >= b for a, b in zip(successor, earlier)):
                    logger.debug(f"Unbounded: {successor} covers {earlier} after {len(graph.states)} states")
                    graph.states.append(successor)
                    graph.edges.append((current, t, len(graph.states) - 1))
                    return BoundednessVerdict(Outcome.UNBOUNDED, graph, steps + [t], depth)
            if len(graph.states) >= max_states:
                logger.debug(f"State cap {max_states} reached")
                return BoundednessVerdict(Outcome.CAP_EXCEEDED, graph)
            seen[successor] = len(graph.states)
            parents[len(graph.states)] = (current, t)
            graph.edges.append((current, t, len(graph.states)))
            graph.states.append(successor)
            queue.append(len(graph.states) - 1)
    graph.complete = True
    logger.debug(f"Bounded: {len(graph.states)} states, {len(graph.edges)} edges")
    return BoundednessVerdict(Outcome.BOUNDED, graph)


def _backward_closure(predecessors: List[List[int]], seeds: Set[int]) -> Set[int]:
    closure = set(seeds)
    queue = deque(seeds)
    while queue:
        state = queue.popleft()
        for previous in predecessors[state]:
            if previous not in closure:
                closure.add(previous)
                queue.append(previous)
    return closure


def transition_status(net: Net, graph: ReachabilityGraph) -> List[Dict[str, TransitionStatus]]:
    """Per-state status of every transition

    Raises:
        IncompleteGraph: If the graph was truncated
    """
    if not graph.complete:
        raise IncompleteGraph("transition status needs a complete reachability graph")
    predecessors = graph.predecessors()
    every = set(range(len(graph.states)))
    rows: List[Dict[str, TransitionStatus]] = [{} for _ in graph.states]
    for t in net.transitions:
        enabling = {source for source, label, _ in graph.edges if label == t}
        can_reach = _backward_closure(predecessors, enabling)
        dead_zone = every - can_reach
        may_die = _backward_closure(predecessors, dead_zone)
        for state in every:
            if state not in can_reach:
                rows[state][t] = TransitionStatus.DEAD
            elif state not in may_die:
                rows[state][t] = TransitionStatus.LIVE
            else:
                rows[state][t] = TransitionStatus.NEITHER
    return rows


def liveness(net: Net, graph: ReachabilityGraph) -> Dict[str, TransitionStatus]:
    return transition_status(net, graph)[graph.root]


def find_dl_marking(net: Net, graph: ReachabilityGraph) -> Optional[Marking]:
    """First reachable marking where every transition is dead or live and one is dead"""
    for index, row in enumerate(transition_status(net, graph)):
        statuses = set(row.values())
        if TransitionStatus.DEAD in statuses and TransitionStatus.NEITHER not in statuses:
            return graph.marking(index)
    return None


def is_live_and_bounded(net: Net, m0: Marking, max_states: int = Config.STATE_CAP) -> Verdict:
    verdict = explore(net, m0, max_states)
    if verdict.outcome is Outcome.UNBOUNDED:
        return Verdict.NO
    if verdict.outcome is Outcome.CAP_EXCEEDED:
        return Verdict.INCONCLUSIVE
    live = all(s is TransitionStatus.LIVE for s in liveness(net, verdict.graph).values())
    return Verdict.YES if live else Verdict.NO


def small_markings(net: Net, per_place: int = Config.EXHAUSTIVE_PLACE_TOKENS,
                   extra: int = Config.EXHAUSTIVE_EXTRA_TOKENS):
    """Markings with at most per_place tokens per place and |S| + extra in total"""
    limit = len(net.places) + extra
    for tokens in itertools.product(range(per_place + 1), repeat=len(net.places)):
        if sum(tokens) <= limit:
            yield Marking(net.places, tokens)


def oracle_well_formed(net: Net, state_cap: int = Config.STATE_CAP, exhaustive: bool = False) -> Verdict:
    """Well-formedness by exploration

    The default mode tests only the all-ones marking. The exhaustive mode
    tries every small marking and answers Yes on the first live and bounded
    one.

    Raises:
        DegenerateNet, NotFreeChoice, NotStronglyConnected: On unmet preconditions
    """
    if not net.places or not net.transitions:
        raise DegenerateNet(f"net '{net.name}' needs at least one place and one transition")
    clusters(net)
    if not is_strongly_connected(net):
        raise NotStronglyConnected(f"net '{net.name}' is not strongly connected")
    if not exhaustive:
        return is_live_and_bounded(net, Marking.ones(net), state_cap)
    inconclusive = False
    for m in small_markings(net):
        answer = is_live_and_bounded(net, m, state_cap)
        if answer is Verdict.YES:
            logger.debug(f"Live and bounded marking {m}")
            return Verdict.YES
        inconclusive |= answer is Verdict.INCONCLUSIVE
    return Verdict.INCONCLUSIVE if inconclusive else Verdict.NO


def unmarked_semi_s_component(net: Net, m: Marking) -> Optional[Component]:
    """A semi-S-component whose places are all empty at m, if one exists"""
    check_marking(net, m)
    empty = [p for p in net.places if m[p] == 0]
    if not empty:
        return None
    dual = reverse_dual(net)
    # places of the net are the transitions of the dual
    reduced = delete_nodes(dual, m.marked())
    found = find_semi_t_intersecting(reduced, empty)
    if found is None:
        return None
    return s_component(net, found.nodes, dual)
