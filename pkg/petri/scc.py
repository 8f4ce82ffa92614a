"""
Strongly connected components of a net and reachability helpers
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx

from petri.net import Net


@dataclass(frozen=True)
class SccDecomposition:
    """SCC partition of a net's nodes with its condensation

    Components are ordered by their smallest member name.
    """
    components: Tuple[FrozenSet[str], ...]
    is_top: Tuple[bool, ...]
    is_bottom: Tuple[bool, ...]
    condensation: FrozenSet[Tuple[int, int]]

    def __len__(self) -> int:
        return len(self.components)

    def index_of(self, node: str) -> int:
        for i, component in enumerate(self.components):
            if node in component:
                return i
        raise KeyError(node)

    def tops(self) -> List[FrozenSet[str]]:
        return [c for c, top in zip(self.components, self.is_top) if top]

    def bottoms(self) -> List[FrozenSet[str]]:
        return [c for c, bottom in zip(self.components, self.is_bottom) if bottom]

    def upstream_of(self, index: int) -> List[int]:
        return sorted(i for i, j in self.condensation if j == index)


def scc(net: Net) -> SccDecomposition:
    """Decompose a net into SCCs with top/bottom flags"""
    components = sorted((frozenset(c) for c in nx.strongly_connected_components(net.graph)), key=min)
    condensed = nx.condensation(net.graph, scc=[set(c) for c in components])
    # condensation numbers components in the order of the scc list we pass
    arcs = frozenset((int(a), int(b)) for a, b in condensed.edges)
    return SccDecomposition(
        components=tuple(components),
        is_top=tuple(condensed.in_degree(i) == 0 for i in range(len(components))),
        is_bottom=tuple(condensed.out_degree(i) == 0 for i in range(len(components))),
        condensation=arcs,
    )


def is_strongly_connected(net: Net) -> bool:
    """True iff the net graph forms one SCC (the empty net counts as not connected)"""
    if not net.nodes:
        return False
    return nx.is_strongly_connected(net.graph)


def distances_to(graph: nx.DiGraph, targets: Iterable[str]) -> Dict[str, int]:
    """Length of the shortest path from each node to the nearest target

    Nodes without a path to any target are absent from the result.
    """
    sources = [t for t in targets if t in graph]
    if not sources:
        return {}
    distances: Dict[str, int] = {}
    for depth, layer in enumerate(nx.bfs_layers(graph.reverse(copy=False), sources)):
        for node in layer:
            distances[node] = depth
    return distances


def backward_reach(graph: nx.DiGraph, targets: Iterable[str]) -> FrozenSet[str]:
    """All nodes with a path (possibly empty) to some target"""
    return frozenset(distances_to(graph, targets))


def reaches(net: Net, nodes: Iterable[str], targets: Iterable[str]) -> bool:
    """True iff every node in nodes has a path to the target set"""
    reach = backward_reach(net.graph, targets)
    return all(node in reach for node in nodes)
