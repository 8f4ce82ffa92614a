"""
Place/transition net model with firing semantics

Nets are immutable after construction. Nodes are identified by their names;
place and transition names share one namespace, so a name alone determines
the node and its kind.
"""
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
from loguru import logger

from config.config import Config
from petri.errors import (
    CountOverflow,
    InvalidMarking,
    InvalidNet,
    NotEnabled,
    NotEnabledAt,
    UnknownNode,
)

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

Arc = Tuple[str, str]


class NodeKind(str, Enum):
    PLACE = "place"
    TRANSITION = "transition"

    def flipped(self) -> "NodeKind":
        return NodeKind.TRANSITION if self is NodeKind.PLACE else NodeKind.PLACE


@dataclass(frozen=True, order=True)
class NodeId:
    """A node reference carrying its kind, used where the kind must travel with the name"""
    kind: NodeKind
    name: str

    def __str__(self) -> str:
        return self.name


class Net:
    """Immutable place/transition net (S, T, F)

    Places and transitions keep their declared order; that order fixes the
    layout of markings. Set-valued results are frozensets, and anything
    rendered for a user is sorted by name.
    """

    def __init__(self, places: Iterable[str], transitions: Iterable[str],
                 arcs: Iterable[Arc], name: str = "net"):
        """Build and validate a net

        Args:
            places: Place names in declared order
            transitions: Transition names in declared order
            arcs: (source, target) pairs, each place->transition or transition->place
            name: Net name used by the document format and exports

        Raises:
            InvalidNet: On bad identifiers, duplicate nodes or arcs, or non-bipartite arcs
            UnknownNode: If an arc endpoint is not declared
        """
        self._name = name
        self._places = tuple(places)
        self._transitions = tuple(transitions)
        self._kinds: Dict[str, NodeKind] = {}
        for node, kind in [(p, NodeKind.PLACE) for p in self._places] + \
                          [(t, NodeKind.TRANSITION) for t in self._transitions]:
            if not IDENTIFIER.match(node):
                raise InvalidNet(f"invalid identifier '{node}'")
            if node in self._kinds:
                raise InvalidNet(f"duplicate node '{node}'")
            self._kinds[node] = kind

        pre: Dict[str, set] = {node: set() for node in self._kinds}
        post: Dict[str, set] = {node: set() for node in self._kinds}
        arc_list: List[Arc] = []
        for source, target in arcs:
            for endpoint in (source, target):
                if endpoint not in self._kinds:
                    raise UnknownNode(endpoint)
            if self._kinds[source] is self._kinds[target]:
                raise InvalidNet(f"arc {source} -> {target} connects two {self._kinds[source].value}s")
            if target in post[source]:
                raise InvalidNet(f"duplicate arc {source} -> {target}")
            post[source].add(target)
            pre[target].add(source)
            arc_list.append((source, target))

        self._arcs = frozenset(arc_list)
        self._pre = {node: frozenset(items) for node, items in pre.items()}
        self._post = {node: frozenset(items) for node, items in post.items()}
        self._place_index = {place: i for i, place in enumerate(self._places)}

    @property
    def name(self) -> str:
        return self._name

    @property
    def places(self) -> Tuple[str, ...]:
        return self._places

    @property
    def transitions(self) -> Tuple[str, ...]:
        return self._transitions

    @property
    def nodes(self) -> Tuple[str, ...]:
        return self._places + self._transitions

    @property
    def arcs(self) -> FrozenSet[Arc]:
        return self._arcs

    @property
    def place_index(self) -> Mapping[str, int]:
        return self._place_index

    def __contains__(self, node: str) -> bool:
        return node in self._kinds

    def kind(self, node: str) -> NodeKind:
        try:
            return self._kinds[node]
        except KeyError:
            raise UnknownNode(node) from None

    def node_id(self, node: str) -> NodeId:
        return NodeId(self.kind(node), node)

    def is_place(self, node: str) -> bool:
        return self._kinds.get(node) is NodeKind.PLACE

    def is_transition(self, node: str) -> bool:
        return self._kinds.get(node) is NodeKind.TRANSITION

    def require_place(self, node: str) -> str:
        if not self.is_place(node):
            raise UnknownNode(node, NodeKind.PLACE.value)
        return node

    def require_transition(self, node: str) -> str:
        if not self.is_transition(node):
            raise UnknownNode(node, NodeKind.TRANSITION.value)
        return node

    def require_nodes(self, nodes: Iterable[str]) -> FrozenSet[str]:
        chosen = frozenset(nodes)
        for node in sorted(chosen):
            self.kind(node)
        return chosen

    def pre(self, node: str) -> FrozenSet[str]:
        try:
            return self._pre[node]
        except KeyError:
            raise UnknownNode(node) from None

    def post(self, node: str) -> FrozenSet[str]:
        try:
            return self._post[node]
        except KeyError:
            raise UnknownNode(node) from None

    def pre_of(self, nodes: Iterable[str]) -> FrozenSet[str]:
        """Union of presets over a node set"""
        result = set()
        for node in nodes:
            result |= self.pre(node)
        return frozenset(result)

    def post_of(self, nodes: Iterable[str]) -> FrozenSet[str]:
        """Union of postsets over a node set"""
        result = set()
        for node in nodes:
            result |= self.post(node)
        return frozenset(result)

    @cached_property
    def graph(self) -> nx.DiGraph:
        """The flow relation as a networkx digraph, nodes tagged with their kind"""
        graph = nx.DiGraph()
        for node in self.nodes:
            graph.add_node(node, kind=self._kinds[node].value)
        graph.add_edges_from(self._arcs)
        return graph

    def sorted_arcs(self) -> List[Arc]:
        return sorted(self._arcs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Net):
            return NotImplemented
        return (set(self._places) == set(other._places)
                and set(self._transitions) == set(other._transitions)
                and self._arcs == other._arcs)

    def __hash__(self) -> int:
        return hash((frozenset(self._places), frozenset(self._transitions), self._arcs))

    def __repr__(self) -> str:
        return (f"Net({self._name!r}, places={len(self._places)}, "
                f"transitions={len(self._transitions)}, arcs={len(self._arcs)})")


@dataclass(frozen=True)
class Marking:
    """Token counts, dense over a net's place order"""
    places: Tuple[str, ...]
    tokens: Tuple[int, ...]

    def __post_init__(self):
        if len(self.places) != len(self.tokens):
            raise InvalidMarking(f"marking has {len(self.tokens)} counts for {len(self.places)} places")
        for place, count in zip(self.places, self.tokens):
            if count < 0:
                raise InvalidMarking(f"negative token count {count} on place '{place}'")
            if count > Config.MAX_TOKENS:
                raise CountOverflow(f"token count on place '{place}' exceeds {Config.MAX_TOKENS}")

    @classmethod
    def zeros(cls, net: Net) -> "Marking":
        return cls(net.places, (0,) * len(net.places))

    @classmethod
    def ones(cls, net: Net) -> "Marking":
        return cls(net.places, (1,) * len(net.places))

    @classmethod
    def of(cls, net: Net, tokens: Sequence[int]) -> "Marking":
        return cls(net.places, tuple(tokens))

    @classmethod
    def from_mapping(cls, net: Net, counts: Mapping[str, int]) -> "Marking":
        """Build a marking from a partial mapping; unlisted places hold 0"""
        for place in counts:
            net.require_place(place)
        return cls(net.places, tuple(counts.get(p, 0) for p in net.places))

    def __getitem__(self, place: str) -> int:
        try:
            return self.tokens[self.places.index(place)]
        except ValueError:
            raise UnknownNode(place, NodeKind.PLACE.value) from None

    def as_dict(self) -> Dict[str, int]:
        return dict(zip(self.places, self.tokens))

    def marked(self) -> FrozenSet[str]:
        return frozenset(p for p, c in zip(self.places, self.tokens) if c > 0)

    def total(self, places: Optional[Iterable[str]] = None) -> int:
        if places is None:
            return sum(self.tokens)
        return sum(self[p] for p in places)

    def covers(self, other: "Marking") -> bool:
        """Pointwise >= comparison"""
        return all(a >= b for a, b in zip(self.tokens, other.tokens))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.tokens) + ")"


def check_marking(net: Net, m: Marking) -> None:
    if m.places != net.places:
        raise InvalidMarking(f"marking over {m.places} does not match places of {net.name}")


def preset(net: Net, node: str) -> FrozenSet[str]:
    return net.pre(node)


def postset(net: Net, node: str) -> FrozenSet[str]:
    return net.post(node)


def is_isolated(net: Net, node: str) -> bool:
    return not net.pre(node) and not net.post(node)


def induced_subnet(net: Net, nodes: Iterable[str], name: Optional[str] = None) -> Net:
    """Subnet induced by a node set: (U∩S, U∩T, F∩(U×U)), declared order kept"""
    chosen = net.require_nodes(nodes)
    return Net(
        [p for p in net.places if p in chosen],
        [t for t in net.transitions if t in chosen],
        [(a, b) for a, b in net.sorted_arcs() if a in chosen and b in chosen],
        name=name or net.name,
    )


def delete_nodes(net: Net, nodes: Iterable[str]) -> Net:
    removed = net.require_nodes(nodes)
    return induced_subnet(net, [n for n in net.nodes if n not in removed])


def reverse_dual(net: Net) -> Net:
    """Swap places and transitions and reverse every arc"""
    return Net(net.transitions, net.places, [(b, a) for a, b in net.sorted_arcs()], name=net.name)


def effect(net: Net, t: str) -> Dict[str, int]:
    """Per-place change caused by firing t once (self-loops cancel)"""
    net.require_transition(t)
    delta = {p: 0 for p in net.places}
    for p in net.pre(t):
        delta[p] -= 1
    for p in net.post(t):
        delta[p] += 1
    return delta


def enabled(net: Net, m: Marking, t: str) -> bool:
    net.require_transition(t)
    check_marking(net, m)
    index = net.place_index
    return all(m.tokens[index[p]] >= 1 for p in net.pre(t))


def fire(net: Net, m: Marking, t: str) -> Marking:
    """Fire t at m

    Raises:
        NotEnabled: If some input place of t is empty
        CountOverflow: If an output count would pass the 64-bit limit
    """
    if not enabled(net, m, t):
        raise NotEnabled(t)
    tokens = list(m.tokens)
    index = net.place_index
    for p, change in effect(net, t).items():
        tokens[index[p]] += change
    return Marking(m.places, tuple(tokens))


def fire_sequence(net: Net, m: Marking, sequence: Sequence[str]) -> Marking:
    current = m
    for i, t in enumerate(sequence):
        try:
            current = fire(net, current, t)
        except NotEnabled:
            logger.debug(f"Sequence blocked at step {i} ({t}) from {m}")
            raise NotEnabledAt(i, t) from None
    return current


def sequence_effect(net: Net, sequence: Sequence[str]) -> Dict[str, int]:
    total = {p: 0 for p in net.places}
    for t in sequence:
        for p, change in effect(net, t).items():
            total[p] += change
    return total


def restrict_sequence(sequence: Sequence[str], keep: Iterable[str]) -> List[str]:
    kept = set(keep)
    return [t for t in sequence if t in kept]
